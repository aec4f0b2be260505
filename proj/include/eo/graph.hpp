#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace eo {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

struct Incidence {
    VertexId neighbor;
    EdgeId edge;
};

struct EdgeEnds {
    VertexId u;  // u < v
    VertexId v;
};

/// Simple undirected graph in compressed adjacency form. Every edge carries a
/// global id; its two incidence entries point back to that id. Immutable once
/// built, so one instance can back any number of orientations.
class UndirectedGraph {
public:
    UndirectedGraph() : offsets_(1, 0) {}

    std::size_t num_vertices() const { return offsets_.size() - 1; }
    std::size_t num_edges() const { return edges_.size(); }

    std::span<const Incidence> incidences(VertexId v) const {
        return {incidences_.data() + offsets_[v], incidences_.data() + offsets_[v + 1]};
    }
    std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
    const EdgeEnds& ends(EdgeId e) const { return edges_[e]; }
    std::span<const EdgeEnds> edges() const { return edges_; }

    /// Builds from a list of already-canonical (u < v), distinct edges.
    /// Incidence lists list edges in ascending id order.
    static UndirectedGraph from_canonical_edges(std::size_t n, std::vector<EdgeEnds> edges) {
        UndirectedGraph g;
        g.edges_ = std::move(edges);
        g.offsets_.assign(n + 1, 0);
        for (const EdgeEnds& e : g.edges_) {
            if (e.u >= e.v || e.v >= n) {
                throw std::invalid_argument("edge (" + std::to_string(e.u) + "," +
                                            std::to_string(e.v) + ") is not canonical");
            }
            ++g.offsets_[e.u + 1];
            ++g.offsets_[e.v + 1];
        }
        for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
        g.incidences_.resize(2 * g.edges_.size());
        std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
        for (EdgeId id = 0; id < g.edges_.size(); ++id) {
            const EdgeEnds& e = g.edges_[id];
            g.incidences_[cursor[e.u]++] = {e.v, id};
            g.incidences_[cursor[e.v]++] = {e.u, id};
        }
        return g;
    }

private:
    std::vector<std::size_t> offsets_;
    std::vector<Incidence> incidences_;
    std::vector<EdgeEnds> edges_;
};

struct BuildResult {
    UndirectedGraph graph;
    std::size_t dropped_self_loops = 0;
    std::size_t dropped_duplicates = 0;
};

/// Normalizes an arbitrary pair list into a simple graph: self-loops are
/// dropped and duplicates (in either order) collapse onto the first occurrence.
/// n is 1 + the largest index, or `min_vertices` if that is larger.
inline BuildResult build_graph(std::span<const std::pair<VertexId, VertexId>> pairs,
                               std::size_t min_vertices = 0) {
    BuildResult result;
    std::size_t n = min_vertices;
    std::vector<EdgeEnds> canonical;
    canonical.reserve(pairs.size());
    for (auto [a, b] : pairs) {
        if (a == b) {
            ++result.dropped_self_loops;
            n = std::max<std::size_t>(n, std::size_t{a} + 1);
            continue;
        }
        if (a > b) std::swap(a, b);
        n = std::max<std::size_t>(n, std::size_t{b} + 1);
        canonical.push_back({a, b});
    }

    // Stable dedup: sort indices by endpoint pair, keep the first occurrence.
    std::vector<std::uint32_t> order(canonical.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
        const auto& ex = canonical[x];
        const auto& ey = canonical[y];
        if (ex.u != ey.u) return ex.u < ey.u;
        if (ex.v != ey.v) return ex.v < ey.v;
        return x < y;
    });
    std::vector<char> keep(canonical.size(), 0);
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i > 0 && canonical[order[i]].u == canonical[order[i - 1]].u &&
            canonical[order[i]].v == canonical[order[i - 1]].v) {
            ++result.dropped_duplicates;
        } else {
            keep[order[i]] = 1;
        }
    }
    std::vector<EdgeEnds> edges;
    edges.reserve(canonical.size() - result.dropped_duplicates);
    for (std::size_t i = 0; i < canonical.size(); ++i) {
        if (keep[i]) edges.push_back(canonical[i]);
    }
    result.graph = UndirectedGraph::from_canonical_edges(n, std::move(edges));
    return result;
}

inline BuildResult build_graph(const std::vector<std::pair<VertexId, VertexId>>& pairs,
                               std::size_t min_vertices = 0) {
    return build_graph(std::span<const std::pair<VertexId, VertexId>>(pairs), min_vertices);
}

/// One direction bit per edge plus the per-vertex out-degree tally.
/// direction[e] == 0 means e = {u, v} (u < v) is oriented u -> v.
struct Orientation {
    std::vector<std::uint8_t> direction;
    std::vector<std::int32_t> out_degree;

    Orientation() = default;
    explicit Orientation(const UndirectedGraph& g)
        : direction(g.num_edges(), 0), out_degree(g.num_vertices(), 0) {
        for (const EdgeEnds& e : g.edges()) ++out_degree[e.u];
    }

    bool operator==(const Orientation&) const = default;
};

inline VertexId tail(const UndirectedGraph& g, const Orientation& o, EdgeId e) {
    const EdgeEnds& ends = g.ends(e);
    return o.direction[e] ? ends.v : ends.u;
}

inline VertexId head(const UndirectedGraph& g, const Orientation& o, EdgeId e) {
    const EdgeEnds& ends = g.ends(e);
    return o.direction[e] ? ends.u : ends.v;
}

/// True when the incidence (from, inc) is an out-edge of `from`.
inline bool is_out_edge(const Orientation& o, VertexId from, const Incidence& inc) {
    return (from < inc.neighbor) != static_cast<bool>(o.direction[inc.edge]);
}

inline void flip_edge(const UndirectedGraph& g, Orientation& o, EdgeId e) {
    --o.out_degree[tail(g, o, e)];
    o.direction[e] ^= 1;
    ++o.out_degree[tail(g, o, e)];
}

/// Directed path v0 -> v1 -> ... -> vk; edges[i] joins vertices[i] and vertices[i+1].
struct Path {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;

    std::size_t length() const { return edges.size(); }
    VertexId source() const { return vertices.front(); }
    VertexId target() const { return vertices.back(); }
    void clear() {
        vertices.clear();
        edges.clear();
    }
};

/// Reverses every edge of a path without checking it. Only the two endpoint
/// degrees move.
inline void flip_path_unchecked(Orientation& o, const Path& p) {
    if (p.edges.empty()) return;
    for (EdgeId e : p.edges) o.direction[e] ^= 1;
    --o.out_degree[p.vertices.front()];
    ++o.out_degree[p.vertices.back()];
}

/// Returns an empty string when p is a simple path oriented forward under o,
/// otherwise a description of the first problem.
inline std::string check_path(const UndirectedGraph& g, const Orientation& o, const Path& p) {
    if (p.vertices.empty()) return "path has no vertices";
    if (p.vertices.size() != p.edges.size() + 1) return "vertex and edge counts disagree";
    std::unordered_set<VertexId> seen;
    for (VertexId v : p.vertices) {
        if (v >= g.num_vertices()) return "vertex " + std::to_string(v) + " out of range";
        if (!seen.insert(v).second) return "vertex " + std::to_string(v) + " repeats";
    }
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
        EdgeId e = p.edges[i];
        if (e >= g.num_edges()) return "edge " + std::to_string(e) + " out of range";
        if (tail(g, o, e) != p.vertices[i] || head(g, o, e) != p.vertices[i + 1]) {
            return "edge " + std::to_string(e) + " is not oriented " +
                   std::to_string(p.vertices[i]) + " -> " + std::to_string(p.vertices[i + 1]);
        }
    }
    return {};
}

inline void flip_path(const UndirectedGraph& g, Orientation& o, const Path& p) {
    if (std::string problem = check_path(g, o, p); !problem.empty()) {
        throw std::invalid_argument("flip_path: " + problem);
    }
    flip_path_unchecked(o, p);
}

inline std::int32_t max_out_degree(const Orientation& o) {
    std::int32_t best = 0;
    for (std::int32_t d : o.out_degree) best = std::max(best, d);
    return best;
}

/// Out-degrees recomputed from direction bits alone.
inline std::vector<std::int32_t> recount_out_degrees(const UndirectedGraph& g, const Orientation& o) {
    std::vector<std::int32_t> counts(g.num_vertices(), 0);
    for (EdgeId e = 0; e < g.num_edges(); ++e) ++counts[tail(g, o, e)];
    return counts;
}

}  // namespace eo
