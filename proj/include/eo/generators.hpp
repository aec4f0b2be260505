#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "eo/graph.hpp"

namespace eo::gen {

using PairList = std::vector<std::pair<VertexId, VertexId>>;

inline UndirectedGraph from_pairs(const PairList& pairs, std::size_t n = 0) {
    return build_graph(pairs, n).graph;
}

inline UndirectedGraph complete(std::size_t n) {
    PairList p;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) p.emplace_back(u, v);
    return from_pairs(p, n);
}

/// Center 0 joined to leaves 1..leaves.
inline UndirectedGraph star(std::size_t leaves) {
    PairList p;
    for (VertexId v = 1; v <= leaves; ++v) p.emplace_back(0, v);
    return from_pairs(p, leaves + 1);
}

inline UndirectedGraph cycle(std::size_t n) {
    PairList p;
    for (VertexId v = 0; v < n; ++v) p.emplace_back(v, static_cast<VertexId>((v + 1) % n));
    return from_pairs(p, n);
}

/// Two triangles sharing vertex 2.
inline UndirectedGraph bowtie() { return from_pairs({{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}); }

/// rows x cols grid, vertex (r, c) = r * cols + c.
inline UndirectedGraph grid(std::size_t rows, std::size_t cols) {
    PairList p;
    p.reserve(2 * rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            const auto v = static_cast<VertexId>(r * cols + c);
            if (c + 1 < cols) p.emplace_back(v, v + 1);
            if (r + 1 < rows) p.emplace_back(v, static_cast<VertexId>(v + cols));
        }
    }
    return from_pairs(p, rows * cols);
}

/// Planar triangulation of a rows x cols point grid: every cell gets one
/// diagonal chosen at random, and vertex labels are shuffled so that id order
/// carries no geometry.
inline UndirectedGraph random_triangulation(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<VertexId> label(rows * cols);
    std::iota(label.begin(), label.end(), VertexId{0});
    std::shuffle(label.begin(), label.end(), rng);
    auto at = [&](std::size_t r, std::size_t c) { return label[r * cols + c]; };
    PairList p;
    p.reserve(3 * rows * cols);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (c + 1 < cols) p.emplace_back(at(r, c), at(r, c + 1));
            if (r + 1 < rows) p.emplace_back(at(r, c), at(r + 1, c));
            if (r + 1 < rows && c + 1 < cols) {
                if (coin(rng)) {
                    p.emplace_back(at(r, c), at(r + 1, c + 1));
                } else {
                    p.emplace_back(at(r, c + 1), at(r + 1, c));
                }
            }
        }
    }
    return from_pairs(p, rows * cols);
}

inline UndirectedGraph gnp(std::size_t n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    PairList pairs;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (coin(rng)) pairs.emplace_back(u, v);
    return from_pairs(pairs, n);
}

/// Graph whose edge set is the bit pattern `mask` over the pairs (u, v),
/// u < v, in lexicographic order.
inline UndirectedGraph from_mask(std::size_t n, std::uint64_t mask) {
    PairList pairs;
    std::size_t bit = 0;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1) pairs.emplace_back(u, v);
    return from_pairs(pairs, n);
}

inline bool is_connected(const UndirectedGraph& g) {
    const std::size_t n = g.num_vertices();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (const Incidence& inc : g.incidences(v)) {
            if (!seen[inc.neighbor]) {
                seen[inc.neighbor] = 1;
                ++count;
                stack.push_back(inc.neighbor);
            }
        }
    }
    return count == n;
}

/// One representative per isomorphism class of graphs on n <= 8 vertices,
/// each given as its canonical (lexicographically smallest over all vertex
/// permutations) edge mask.
inline std::vector<std::uint64_t> nonisomorphic_masks(std::size_t n) {
    if (n > 8) return {};
    if (n <= 1) return {0};
    const std::size_t pairs = n * (n - 1) / 2;
    std::vector<std::vector<std::size_t>> index(n, std::vector<std::size_t>(n, 0));
    {
        std::size_t bit = 0;
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v, ++bit) index[u][v] = index[v][u] = bit;
    }
    // Per permutation, where each bit moves to.
    std::vector<std::vector<std::uint8_t>> moves;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<std::uint8_t> mv(pairs);
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                mv[index[u][v]] = static_cast<std::uint8_t>(index[perm[u]][perm[v]]);
        moves.push_back(std::move(mv));
    } while (std::next_permutation(perm.begin(), perm.end()));

    auto canonical = [&](std::uint64_t mask) {
        std::uint64_t best = mask;
        for (const auto& mv : moves) {
            std::uint64_t image = 0;
            for (std::size_t b = 0; b < pairs; ++b)
                if (mask >> b & 1) image |= std::uint64_t{1} << mv[b];
            best = std::min(best, image);
        }
        return best;
    };

    // Grow from the classes on n - 1 vertices by adding vertex n - 1 with
    // every possible neighborhood.
    const std::vector<std::uint64_t> smaller = nonisomorphic_masks(n - 1);
    std::vector<std::uint64_t> found;
    for (std::uint64_t base : smaller) {
        // Re-index the (n-1)-vertex mask into the n-vertex pair order.
        std::uint64_t lifted = 0;
        {
            std::size_t bit = 0;
            for (std::size_t u = 0; u + 1 < n; ++u)
                for (std::size_t v = u + 1; v + 1 < n; ++v, ++bit)
                    if (base >> bit & 1) lifted |= std::uint64_t{1} << index[u][v];
        }
        for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (n - 1)); ++nb) {
            std::uint64_t mask = lifted;
            for (std::size_t u = 0; u + 1 < n; ++u)
                if (nb >> u & 1) mask |= std::uint64_t{1} << index[u][n - 1];
            found.push_back(canonical(mask));
        }
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

}  // namespace eo::gen
