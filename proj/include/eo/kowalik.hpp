#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "eo/control.hpp"
#include "eo/density.hpp"
#include "eo/flow.hpp"
#include "eo/graph.hpp"
#include "eo/initialization.hpp"

namespace eo {

struct KowalikTestResult {
    bool feasible = false;
    FlowNetwork::Capacity demand = 0;  // total surplus above d_prime
    FlowNetwork::Capacity flow = 0;
    std::size_t edges_flipped = 0;
};

/// Feasibility test for max out-degree <= d_prime. Vertices above d_prime get
/// a source arc with their surplus, vertices below get a sink arc with their
/// slack, and every edge oriented u -> v becomes a unit arc u -> v. A unit of
/// flow along such arcs is a path flip. When all surplus routes, edges whose
/// arcs carry flow are flipped; otherwise the orientation is left untouched.
inline KowalikTestResult kowalik_test(const UndirectedGraph& g, Orientation& o, std::int32_t d_prime,
                                      const SearchControl& control = {}) {
    KowalikTestResult result;
    const auto n = static_cast<std::uint32_t>(g.num_vertices());
    const std::uint32_t s = n;
    const std::uint32_t t = n + 1;
    FlowNetwork net(n + 2, s, t);
    net.reserve(g.num_edges() + n);
    for (VertexId v = 0; v < n; ++v) {
        const std::int32_t d = o.out_degree[v];
        if (d > d_prime) {
            net.add_arc(s, v, d - d_prime);
            result.demand += d - d_prime;
        } else if (d < d_prime) {
            net.add_arc(v, t, d_prime - d);
        }
    }
    if (result.demand == 0) {
        result.feasible = true;
        return result;
    }
    std::vector<std::size_t> edge_arc(g.num_edges());
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        edge_arc[e] = net.add_arc(tail(g, o, e), head(g, o, e), 1);
    }
    result.flow = net.max_flow(control);
    result.feasible = result.flow == result.demand;
    if (result.feasible) {
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            if (net.arc(edge_arc[e]).flow > 0) {
                flip_edge(g, o, e);
                ++result.edges_flipped;
            }
        }
    }
    return result;
}

struct KowalikStats {
    std::int32_t dstar = 0;
    std::size_t tests = 0;
    std::size_t edges_flipped = 0;
    // (d_prime, feasible) in the order tested
    std::vector<std::pair<std::int32_t, bool>> trace;
};

/// Binary search for the least feasible d' over [ceil(m/n), max out-degree]
/// of the given orientation. Each test starts from the orientation left by the
/// previous feasible one.
inline KowalikStats kowalik_search(const UndirectedGraph& g, Orientation& o,
                                   const SearchControl& control = {}) {
    KowalikStats stats;
    std::int32_t hi = max_out_degree(o);
    std::int32_t lo = g.num_vertices() == 0
                          ? 0
                          : static_cast<std::int32_t>(
                                Density{static_cast<std::int64_t>(g.num_edges()),
                                        static_cast<std::int64_t>(g.num_vertices())}
                                    .ceil());
    lo = std::max(lo, control.known_lower_bound);
    while (lo < hi) {
        const std::int32_t mid = lo + (hi - lo) / 2;
        KowalikTestResult r = kowalik_test(g, o, mid, control);
        ++stats.tests;
        stats.trace.emplace_back(mid, r.feasible);
        if (r.feasible) {
            stats.edges_flipped += r.edges_flipped;
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    stats.dstar = max_out_degree(o);
    return stats;
}

/// Id-order start, one FastImprove pass, then the binary search.
inline std::pair<Orientation, KowalikStats> kowalik_solve(const UndirectedGraph& g,
                                                          const SearchControl& control = {}) {
    Orientation o = initial_orientation(g);
    fast_improve(g, o);
    KowalikStats stats = kowalik_search(g, o, control);
    return {std::move(o), std::move(stats)};
}

/// Edge-vertex incidence network: s -> l(e) (cap 1), l(e) -> r(u) and
/// l(e) -> r(v) (cap 1), r(v) -> t (cap d). Every edge can be assigned to an
/// endpoint without exceeding d exactly when the max flow equals m.
inline bool bipartite_oracle(const UndirectedGraph& g, std::int32_t d) {
    const auto m = static_cast<std::uint32_t>(g.num_edges());
    const auto n = static_cast<std::uint32_t>(g.num_vertices());
    if (m == 0) return true;
    if (d <= 0) return false;
    const std::uint32_t s = m + n;
    const std::uint32_t t = m + n + 1;
    FlowNetwork net(m + n + 2, s, t);
    net.reserve(3 * std::size_t{m} + n);
    for (EdgeId e = 0; e < m; ++e) {
        net.add_arc(s, e, 1);
        net.add_arc(e, m + g.ends(e).u, 1);
        net.add_arc(e, m + g.ends(e).v, 1);
    }
    for (VertexId v = 0; v < n; ++v) net.add_arc(m + v, t, d);
    return net.max_flow() == static_cast<FlowNetwork::Capacity>(m);
}

/// Least d accepted by the bipartite oracle, by linear scan from 0.
inline std::int32_t bipartite_dstar(const UndirectedGraph& g) {
    std::int32_t d = 0;
    while (!bipartite_oracle(g, d)) ++d;
    return d;
}

}  // namespace eo
