#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eo/density.hpp"
#include "eo/graph.hpp"

namespace eo {

class certificate_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ValidationResult {
    bool ok = true;
    std::string message;
    explicit operator bool() const { return ok; }
};

/// Well-formedness of an orientation: one direction bit per edge, the
/// maintained tally equals a recount, and the tally sums to m.
inline ValidationResult validate(const UndirectedGraph& g, const Orientation& o) {
    if (o.direction.size() != g.num_edges()) {
        return {false, "direction array has " + std::to_string(o.direction.size()) +
                           " entries, expected " + std::to_string(g.num_edges())};
    }
    if (o.out_degree.size() != g.num_vertices()) {
        return {false, "out-degree array has " + std::to_string(o.out_degree.size()) +
                           " entries, expected " + std::to_string(g.num_vertices())};
    }
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (o.direction[e] > 1) return {false, "edge " + std::to_string(e) + " has no single direction"};
    }
    const std::vector<std::int32_t> counted = recount_out_degrees(g, o);
    std::int64_t sum = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (counted[v] != o.out_degree[v]) {
            return {false, "vertex " + std::to_string(v) + " records out-degree " +
                               std::to_string(o.out_degree[v]) + " but has " +
                               std::to_string(counted[v])};
        }
        sum += o.out_degree[v];
    }
    if (sum != static_cast<std::int64_t>(g.num_edges())) {
        return {false, "out-degrees sum to " + std::to_string(sum)};
    }
    return {};
}

inline constexpr std::size_t kBruteForceMaxVertices = 20;

/// max over nonempty vertex subsets S of ceil(e(S) / |S|), by enumeration.
inline std::int32_t brute_force_dstar(const UndirectedGraph& g) {
    const std::size_t n = g.num_vertices();
    if (n > kBruteForceMaxVertices) {
        throw std::invalid_argument("brute force limited to " + std::to_string(kBruteForceMaxVertices) +
                                    " vertices, got " + std::to_string(n));
    }
    if (g.num_edges() == 0) return 0;
    std::vector<std::uint32_t> adjacency(n, 0);
    for (const EdgeEnds& e : g.edges()) {
        adjacency[e.u] |= 1u << e.v;
        adjacency[e.v] |= 1u << e.u;
    }
    const std::uint32_t subsets = 1u << n;
    std::vector<std::uint16_t> induced(subsets, 0);
    Density best{0, 1};
    for (std::uint32_t mask = 1; mask < subsets; ++mask) {
        const int low = std::countr_zero(mask);
        const std::uint32_t rest = mask & (mask - 1);
        induced[mask] = static_cast<std::uint16_t>(induced[rest] + std::popcount(adjacency[low] & rest));
        Density here{induced[mask], std::popcount(mask)};
        if (best < here) best = here;
    }
    return static_cast<std::int32_t>(best.ceil());
}

/// A vertex set whose induced density exceeds k - 1, which proves d* >= k.
struct Certificate {
    std::vector<VertexId> vertices;  // ascending
    std::int64_t induced_edges = 0;
    std::int32_t k = 0;

    Density density() const { return {induced_edges, static_cast<std::int64_t>(vertices.size())}; }
};

inline std::int64_t count_induced_edges(const UndirectedGraph& g, const std::vector<char>& member) {
    std::int64_t count = 0;
    for (const EdgeEnds& e : g.edges()) count += member[e.u] && member[e.v];
    return count;
}

/// Recomputes e(R) on g and checks e(R) > (k - 1) |R|.
inline bool check_certificate(const UndirectedGraph& g, const Certificate& c) {
    if (c.vertices.empty() || c.k < 1) return false;
    std::vector<char> member(g.num_vertices(), 0);
    for (VertexId v : c.vertices) {
        if (v >= g.num_vertices() || member[v]) return false;
        member[v] = 1;
    }
    const std::int64_t edges = count_induced_edges(g, member);
    if (edges != c.induced_edges) return false;
    return edges > static_cast<std::int64_t>(c.k - 1) * static_cast<std::int64_t>(c.vertices.size());
}

/// R = everything reachable along oriented edges from the peak set. For an
/// orientation with no improving path, every vertex of R has out-degree at
/// least k - 1 and all its out-edges stay inside R, so e(R) > (k - 1) |R|.
/// Returns nullopt when k = 0; throws certificate_error when a check fails.
inline std::optional<Certificate> extract_certificate(const UndirectedGraph& g, const Orientation& o) {
    const std::int32_t k = max_out_degree(o);
    if (k == 0) return std::nullopt;
    std::vector<char> member(g.num_vertices(), 0);
    std::vector<VertexId> queue;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (o.out_degree[v] == k) {
            member[v] = 1;
            queue.push_back(v);
        }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const VertexId x = queue[head];
        if (o.out_degree[x] < k - 1) {
            throw certificate_error("vertex " + std::to_string(x) + " with out-degree " +
                                    std::to_string(o.out_degree[x]) +
                                    " is reachable from a peak of out-degree " + std::to_string(k));
        }
        for (const Incidence& inc : g.incidences(x)) {
            if (is_out_edge(o, x, inc) && !member[inc.neighbor]) {
                member[inc.neighbor] = 1;
                queue.push_back(inc.neighbor);
            }
        }
    }
    Certificate c;
    c.k = k;
    c.vertices = std::move(queue);
    std::sort(c.vertices.begin(), c.vertices.end());
    c.induced_edges = count_induced_edges(g, member);
    if (!(c.induced_edges > static_cast<std::int64_t>(k - 1) * static_cast<std::int64_t>(c.vertices.size()))) {
        throw certificate_error("reachable set has " + std::to_string(c.induced_edges) + " edges on " +
                                std::to_string(c.vertices.size()) + " vertices, not denser than " +
                                std::to_string(k - 1));
    }
    return c;
}

/// Removes improving paths from a copy of o with plain multi-source BFS
/// rounds (one path per source per round), then extracts the certificate of
/// the resulting fixed point. If o was optimal the certificate's k equals
/// max_out_degree(o); a smaller k exposes a non-optimal orientation.
inline std::optional<Certificate> certify(const UndirectedGraph& g, Orientation o) {
    const std::size_t n = g.num_vertices();
    std::vector<VertexId> parent(n), origin(n);
    std::vector<EdgeId> via(n);
    std::vector<std::uint32_t> seen(n, 0), used(n, 0);
    std::uint32_t round = 0;
    std::vector<VertexId> queue;
    while (true) {
        const std::int32_t k = max_out_degree(o);
        if (k < 2) break;
        ++round;
        queue.clear();
        for (VertexId v = 0; v < n; ++v) {
            if (o.out_degree[v] == k) {
                seen[v] = round;
                origin[v] = v;
                queue.push_back(v);
            }
        }
        std::size_t flips = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const VertexId x = queue[head];
            if (used[origin[x]] == round) continue;
            for (const Incidence& inc : g.incidences(x)) {
                const VertexId y = inc.neighbor;
                if (!is_out_edge(o, x, inc) || seen[y] == round) continue;
                seen[y] = round;
                parent[y] = x;
                via[y] = inc.edge;
                origin[y] = origin[x];
                if (o.out_degree[y] <= k - 2) {
                    for (VertexId w = y; w != origin[x]; w = parent[w]) o.direction[via[w]] ^= 1;
                    --o.out_degree[origin[x]];
                    ++o.out_degree[y];
                    used[origin[x]] = round;
                    ++flips;
                    break;
                }
                queue.push_back(y);
            }
        }
        if (flips == 0) break;
    }
    return extract_certificate(g, o);
}

}  // namespace eo
