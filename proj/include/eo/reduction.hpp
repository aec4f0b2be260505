#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "eo/config.hpp"
#include "eo/density.hpp"
#include "eo/graph.hpp"

namespace eo {

struct PeelResult {
    Density rho_best;                  // max over peel prefixes of edges / vertices
    std::vector<VertexId> peel_order;  // removal sequence
    std::size_t best_prefix = 0;       // peel_order[best_prefix..] induces rho_best
    std::size_t queue_operations = 0;  // extractions + key decrements
};

/// Greedy densest-subgraph peel: repeatedly delete a vertex of minimum
/// current degree and keep the best density seen, the full graph included.
/// Linear time with a bucket queue. Buckets are stacks with lazy deletion;
/// the initial fill makes the lowest id come out first within a bucket, later
/// ties resolve in reverse insertion order.
inline PeelResult charikar_peel(const UndirectedGraph& g) {
    const std::size_t n = g.num_vertices();
    PeelResult result;
    result.rho_best = {0, 1};
    if (n == 0) return result;

    std::vector<std::uint32_t> degree(n);
    std::size_t max_degree = 0;
    for (VertexId v = 0; v < n; ++v) {
        degree[v] = static_cast<std::uint32_t>(g.degree(v));
        max_degree = std::max<std::size_t>(max_degree, degree[v]);
    }
    std::vector<std::vector<VertexId>> buckets(max_degree + 1);
    for (VertexId v = static_cast<VertexId>(n); v-- > 0;) buckets[degree[v]].push_back(v);

    std::vector<char> removed(n, 0);
    result.peel_order.reserve(n);
    std::int64_t edges_left = static_cast<std::int64_t>(g.num_edges());
    std::int64_t vertices_left = static_cast<std::int64_t>(n);
    result.rho_best = {edges_left, vertices_left};

    std::size_t current = 0;
    while (vertices_left > 0) {
        while (buckets[current].empty()) ++current;
        VertexId v = buckets[current].back();
        buckets[current].pop_back();
        if (removed[v] || degree[v] != current) continue;

        removed[v] = 1;
        ++result.queue_operations;
        result.peel_order.push_back(v);
        edges_left -= degree[v];
        --vertices_left;
        for (const Incidence& inc : g.incidences(v)) {
            VertexId u = inc.neighbor;
            if (removed[u]) continue;
            --degree[u];
            ++result.queue_operations;
            buckets[degree[u]].push_back(u);
            if (degree[u] < current) current = degree[u];
        }
        if (vertices_left > 0) {
            Density prefix{edges_left, vertices_left};
            if (result.rho_best < prefix) {
                result.rho_best = prefix;
                result.best_prefix = result.peel_order.size();
            }
        }
    }
    return result;
}

/// Outcome of the safe low-degree reduction. Removed vertices keep their
/// then-incident edges oriented outward; the residual is the induced subgraph
/// on the survivors, relabeled in ascending original id.
struct ReductionOutcome {
    bool applied = false;  // false: pass-through, the residual is the input graph
    std::int32_t lower_bound = 0;
    Density rho_best{0, 1};

    std::vector<VertexId> removed;          // in removal order
    std::vector<std::size_t> forced_begin;  // size removed.size() + 1
    std::vector<EdgeId> forced_edges;       // original edge ids, oriented out of the owner

    UndirectedGraph residual;
    std::vector<VertexId> vertex_map;  // residual vertex -> original vertex
    std::vector<EdgeId> edge_map;      // residual edge -> original edge

    std::span<const EdgeId> forced_out_edges(std::size_t i) const {
        return {forced_edges.data() + forced_begin[i], forced_edges.data() + forced_begin[i + 1]};
    }
    std::int32_t max_forced_out_degree() const {
        std::int32_t best = 0;
        for (std::size_t i = 0; i + 1 < forced_begin.size(); ++i) {
            best = std::max(best, static_cast<std::int32_t>(forced_begin[i + 1] - forced_begin[i]));
        }
        return best;
    }
    const UndirectedGraph& graph_to_solve(const UndirectedGraph& original) const {
        return applied ? residual : original;
    }
};

/// Removes, to a fixed point, every vertex whose current degree is at most
/// t = ceil(rho_best). Since rho_best is the density of some subgraph, t never
/// exceeds the optimum, so the forced out-degrees are harmless.
inline ReductionOutcome reduce(const UndirectedGraph& g) {
    const std::size_t n = g.num_vertices();
    ReductionOutcome out;
    out.applied = true;
    PeelResult peel = charikar_peel(g);
    out.rho_best = peel.rho_best;
    out.lower_bound = static_cast<std::int32_t>(peel.rho_best.ceil());
    const auto t = static_cast<std::size_t>(out.lower_bound);

    std::vector<std::size_t> degree(n);
    std::vector<char> state(n, 0);  // 0 alive, 1 queued, 2 removed
    std::vector<VertexId> queue;
    for (VertexId v = 0; v < n; ++v) {
        degree[v] = g.degree(v);
        if (degree[v] <= t) {
            state[v] = 1;
            queue.push_back(v);
        }
    }
    out.forced_begin.push_back(0);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        VertexId v = queue[head];
        state[v] = 2;
        out.removed.push_back(v);
        for (const Incidence& inc : g.incidences(v)) {
            VertexId u = inc.neighbor;
            if (state[u] == 2) continue;
            out.forced_edges.push_back(inc.edge);
            if (--degree[u] <= t && state[u] == 0) {
                state[u] = 1;
                queue.push_back(u);
            }
        }
        out.forced_begin.push_back(out.forced_edges.size());
    }

    std::vector<VertexId> new_id(n, kNoVertex);
    for (VertexId v = 0; v < n; ++v) {
        if (state[v] != 2) {
            new_id[v] = static_cast<VertexId>(out.vertex_map.size());
            out.vertex_map.push_back(v);
        }
    }
    std::vector<EdgeEnds> edges;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const EdgeEnds& ends = g.ends(e);
        if (new_id[ends.u] != kNoVertex && new_id[ends.v] != kNoVertex) {
            edges.push_back({new_id[ends.u], new_id[ends.v]});
            out.edge_map.push_back(e);
        }
    }
    out.residual = UndirectedGraph::from_canonical_edges(out.vertex_map.size(), std::move(edges));
    return out;
}

inline ReductionOutcome pass_through() { return ReductionOutcome{}; }

/// Runs the reduction only when the average density m/n exceeds the
/// configured threshold (a threshold of 0 runs it on every non-empty graph).
inline ReductionOutcome maybe_reduce(const UndirectedGraph& g, const SolverConfig& cfg) {
    const auto n = static_cast<double>(g.num_vertices());
    const auto m = static_cast<double>(g.num_edges());
    if (n > 0 && m > cfg.density_threshold * n) return reduce(g);
    if (n > 0 && cfg.density_threshold == 0.0) return reduce(g);
    return pass_through();
}

/// Combines forced orientations with an orientation of the residual graph.
inline Orientation merge_orientation(const UndirectedGraph& g, const ReductionOutcome& r,
                                     const Orientation& residual_orientation) {
    if (!r.applied) return residual_orientation;
    Orientation full;
    full.direction.assign(g.num_edges(), 0);
    full.out_degree.assign(g.num_vertices(), 0);
    for (std::size_t i = 0; i < r.removed.size(); ++i) {
        VertexId owner = r.removed[i];
        for (EdgeId e : r.forced_out_edges(i)) {
            full.direction[e] = g.ends(e).u == owner ? 0 : 1;
            ++full.out_degree[owner];
        }
    }
    for (EdgeId re = 0; re < r.edge_map.size(); ++re) {
        EdgeId e = r.edge_map[re];
        // Relabeling preserves order, so the bit carries over unchanged.
        full.direction[e] = residual_orientation.direction[re];
        ++full.out_degree[tail(g, full, e)];
    }
    return full;
}

}  // namespace eo
