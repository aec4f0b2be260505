#pragma once

// Small helpers shared by the test suites.

#include <utility>
#include <vector>

#include "eo/generators.hpp"
#include "eo/graph.hpp"

namespace eo::testing {

using ArcList = std::vector<std::pair<VertexId, VertexId>>;

/// Graph on the arcs' endpoints, oriented exactly as the arcs say.
inline std::pair<UndirectedGraph, Orientation> oriented(const ArcList& arcs, std::size_t n = 0) {
    UndirectedGraph g = build_graph(arcs, n).graph;
    Orientation o(g);
    for (auto [from, to] : arcs) {
        for (const Incidence& inc : g.incidences(from)) {
            if (inc.neighbor == to) o.direction[inc.edge] = from < to ? 0 : 1;
        }
    }
    o.out_degree = recount_out_degrees(g, o);
    return {std::move(g), std::move(o)};
}

/// Every orientation of g with edge bits taken from `mask`.
inline Orientation from_bits(const UndirectedGraph& g, std::uint64_t mask) {
    Orientation o(g);
    for (EdgeId e = 0; e < g.num_edges(); ++e) o.direction[e] = static_cast<std::uint8_t>(mask >> e & 1);
    o.out_degree = recount_out_degrees(g, o);
    return o;
}

}  // namespace eo::testing
