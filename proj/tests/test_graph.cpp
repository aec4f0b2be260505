#include <gtest/gtest.h>

#include <random>

#include "eo/density.hpp"
#include "eo/generators.hpp"
#include "eo/graph.hpp"
#include "eo/initialization.hpp"

using namespace eo;

namespace {

Orientation directed_cycle_triangle(const UndirectedGraph& g) {
    // 0->1, 1->2, 2->0
    Orientation o(g);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const EdgeEnds& ends = g.ends(e);
        const bool forward = (ends.u == 0 && ends.v == 1) || (ends.u == 1 && ends.v == 2);
        o.direction[e] = forward ? 0 : 1;
    }
    o.out_degree = recount_out_degrees(g, o);
    return o;
}

}  // namespace

TEST(BuildGraph, Triangle) {
    const BuildResult r = build_graph({{0, 1}, {1, 2}, {0, 2}});
    EXPECT_EQ(r.graph.num_vertices(), 3u);
    EXPECT_EQ(r.graph.num_edges(), 3u);
    for (VertexId v = 0; v < 3; ++v) EXPECT_EQ(r.graph.degree(v), 2u);
}

TEST(BuildGraph, CollapsesDuplicatesAndDropsSelfLoops) {
    const BuildResult r = build_graph({{0, 1}, {1, 0}, {2, 2}});
    EXPECT_EQ(r.graph.num_vertices(), 3u);
    EXPECT_EQ(r.graph.num_edges(), 1u);
    EXPECT_EQ(r.dropped_duplicates, 1u);
    EXPECT_EQ(r.dropped_self_loops, 1u);
    EXPECT_EQ(r.graph.degree(2), 0u);
}

TEST(BuildGraph, Empty) {
    const BuildResult r = build_graph(std::vector<std::pair<VertexId, VertexId>>{});
    EXPECT_EQ(r.graph.num_vertices(), 0u);
    EXPECT_EQ(r.graph.num_edges(), 0u);
}

TEST(BuildGraph, EndpointsCanonicalAndIncidencesConsistent) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const UndirectedGraph g = gen::gnp(15, 0.3, rng);
        std::size_t incidence_total = 0;
        for (EdgeId e = 0; e < g.num_edges(); ++e) EXPECT_LT(g.ends(e).u, g.ends(e).v);
        for (VertexId v = 0; v < g.num_vertices(); ++v) {
            for (const Incidence& inc : g.incidences(v)) {
                const EdgeEnds& ends = g.ends(inc.edge);
                EXPECT_TRUE((ends.u == v && ends.v == inc.neighbor) || (ends.v == v && ends.u == inc.neighbor));
                ++incidence_total;
            }
        }
        EXPECT_EQ(incidence_total, 2 * g.num_edges());
    }
}

TEST(FlipPath, TriangleSingleFlip) {
    const UndirectedGraph g = gen::from_pairs({{0, 1}, {1, 2}, {0, 2}});
    Orientation o = initial_orientation(g);
    EXPECT_EQ(o.out_degree, (std::vector<std::int32_t>{0, 1, 2}));
    Path p;
    p.vertices = {2, 0};
    for (const Incidence& inc : g.incidences(2))
        if (inc.neighbor == 0) p.edges.push_back(inc.edge);
    flip_path(g, o, p);
    EXPECT_EQ(o.out_degree, (std::vector<std::int32_t>{1, 1, 1}));
    EXPECT_EQ(o.out_degree, recount_out_degrees(g, o));
}

TEST(FlipPath, SingleVertexPathIsNoOp) {
    const UndirectedGraph g = gen::from_pairs({{0, 1}, {1, 2}, {0, 2}});
    Orientation o = initial_orientation(g);
    const Orientation before = o;
    Path p;
    p.vertices = {1};
    flip_path(g, o, p);
    EXPECT_EQ(o, before);
}

TEST(FlipPath, InteriorDegreeConserved) {
    // a=0 -> b=1 -> c=2 on a path graph.
    const UndirectedGraph g = gen::from_pairs({{0, 1}, {1, 2}});
    Orientation o(g);  // every edge u -> v, so 0->1 and 1->2
    Path p;
    p.vertices = {0, 1, 2};
    p.edges = {0, 1};
    const std::int32_t before = o.out_degree[1];
    flip_path(g, o, p);
    EXPECT_EQ(o.out_degree[1], before);
    EXPECT_EQ(o.out_degree[0], 0);
    EXPECT_EQ(o.out_degree[2], 1);
    EXPECT_EQ(tail(g, o, 0), 1u);  // b now points back to a
}

TEST(FlipPath, RejectsNonDirectedPath) {
    const UndirectedGraph g = gen::from_pairs({{0, 1}, {1, 2}});
    Orientation o(g);
    Path p;
    p.vertices = {2, 1};
    p.edges = {1};  // edge 1->2 traversed backwards
    EXPECT_THROW(flip_path(g, o, p), std::invalid_argument);
    p.vertices = {0, 1, 0};
    p.edges = {0, 0};
    EXPECT_THROW(flip_path(g, o, p), std::invalid_argument);
}

TEST(MaxOutDegree, Examples) {
    const UndirectedGraph tri = gen::from_pairs({{0, 1}, {1, 2}, {0, 2}});
    EXPECT_EQ(max_out_degree(directed_cycle_triangle(tri)), 1);

    const UndirectedGraph star = gen::star(5);
    Orientation o(star);  // center 0 has the smaller id, so all edges leave it
    EXPECT_EQ(max_out_degree(o), 5);

    const UndirectedGraph empty;
    EXPECT_EQ(max_out_degree(Orientation(empty)), 0);
}

TEST(Density, ExactComparisonAndCeil) {
    EXPECT_TRUE((Density{5, 6} < Density{6, 5}));
    EXPECT_TRUE((Density{6, 4} == Density{3, 2}));
    EXPECT_EQ((Density{6, 4}.ceil()), 2);
    EXPECT_EQ((Density{6, 3}.ceil()), 2);
    EXPECT_EQ((Density{0, 3}.ceil()), 0);
}

TEST(Generators, NonisomorphicConnectedCounts) {
    const std::size_t expected[] = {1, 1, 2, 6, 21, 112, 853};
    for (std::size_t n = 1; n <= 7; ++n) {
        std::size_t connected = 0;
        for (std::uint64_t mask : gen::nonisomorphic_masks(n)) connected += gen::is_connected(gen::from_mask(n, mask));
        EXPECT_EQ(connected, expected[n - 1]) << "n=" << n;
    }
}
