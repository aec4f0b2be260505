#pragma once

#include <cstddef>

#include "eo/graph.hpp"

namespace eo {

/// Every edge points from its higher-id endpoint to the lower one, so a
/// vertex's out-degree is the number of neighbors with a smaller id.
inline Orientation initial_orientation(const UndirectedGraph& g) {
    Orientation o;
    o.direction.assign(g.num_edges(), 1);
    o.out_degree.assign(g.num_vertices(), 0);
    for (const EdgeEnds& e : g.edges()) ++o.out_degree[e.v];
    return o;
}

namespace detail {
struct NoFlipObserver {
    void operator()(EdgeId) const {}
};
}  // namespace detail

/// One local-improvement pass in vertex-id order. For each vertex v, out-edges
/// v->u are flipped while d(u) < d(v) - 1, then in-edges u->v while
/// d(u) - 1 > d(v). Degrees update as edges flip. Each incidence is inspected
/// once per loop. Returns the number of flipped edges; `on_flip` sees every
/// flipped edge id after the flip.
template <typename FlipObserver = detail::NoFlipObserver>
std::size_t fast_improve(const UndirectedGraph& g, Orientation& o, FlipObserver&& on_flip = {}) {
    std::size_t flips = 0;
    auto& d = o.out_degree;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        const auto incs = g.incidences(v);
        for (const Incidence& inc : incs) {
            if (is_out_edge(o, v, inc) && d[inc.neighbor] < d[v] - 1) {
                o.direction[inc.edge] ^= 1;
                --d[v];
                ++d[inc.neighbor];
                ++flips;
                on_flip(inc.edge);
            }
        }
        for (const Incidence& inc : incs) {
            if (!is_out_edge(o, v, inc) && d[inc.neighbor] - 1 > d[v]) {
                o.direction[inc.edge] ^= 1;
                --d[inc.neighbor];
                ++d[v];
                ++flips;
                on_flip(inc.edge);
            }
        }
    }
    return flips;
}

}  // namespace eo
