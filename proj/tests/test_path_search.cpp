#include <gtest/gtest.h>

#include <random>

#include "eo/generators.hpp"
#include "eo/initialization.hpp"
#include "eo/path_search.hpp"
#include "eo/verify.hpp"
#include "support.hpp"

using namespace eo;
using eo::testing::oriented;

namespace {

// Records every flip an engine performs and checks the path contract on it.
struct FlipAudit {
    const UndirectedGraph* g = nullptr;
    std::size_t paths = 0;
    bool all_valid = true;
    bool peak_monotone = true;
    std::int32_t last_peak = 0;

    SearchControl control() {
        SearchControl c;
        c.on_path = [this](const Orientation& o, const Path& p) {
            ++paths;
            const std::int32_t peak = max_out_degree(o);
            if (paths > 1 && peak > last_peak) peak_monotone = false;
            last_peak = peak;
            all_valid = all_valid && p.length() >= 1 && check_path(*g, o, p).empty() &&
                        o.out_degree[p.target()] + 2 <= o.out_degree[p.source()];
        };
        return c;
    }
};

}  // namespace

TEST(FindImprovingPath, TriangleDirectHit) {
    const UndirectedGraph g = gen::from_pairs({{0, 1}, {1, 2}, {0, 2}});
    const Orientation o = initial_orientation(g);
    SearchState state(g.num_vertices());
    Path path;
    ASSERT_TRUE(find_improving_path(g, o, 2, 0, state, kNoSkip, DfsOptions{}, path));
    EXPECT_EQ(path.vertices, (std::vector<VertexId>{2, 0}));
    EXPECT_EQ(path.length(), 1u);
}

TEST(FindImprovingPath, NegativeBoundFindsNothing) {
    auto [g, o] = oriented({{0, 1}, {1, 2}, {2, 0}});
    SearchState state(g.num_vertices());
    Path path;
    for (VertexId s = 0; s < 3; ++s) {
        state.new_epoch();
        EXPECT_FALSE(find_improving_path(g, o, s, -1, state, kNoSkip, DfsOptions{}, path));
    }
}

TEST(FindImprovingPath, IndependentPathsSkipOtherPeaks) {
    // a=0 -> p=1 -> t=2 with a and p both at out-degree 2; a's other arc
    // enters the dead cycle 3 -> 4 -> 5 -> 3, and so does p's.
    auto [g, o] = oriented({{0, 1}, {1, 2}, {0, 3}, {1, 4}, {3, 4}, {4, 5}, {5, 3}});
    ASSERT_EQ(o.out_degree[0], 2);
    ASSERT_EQ(o.out_degree[1], 2);
    ASSERT_EQ(o.out_degree[2], 0);
    SearchState state(g.num_vertices());
    Path path;
    EXPECT_FALSE(find_improving_path(g, o, 0, 0, state, 2, DfsOptions{}, path));

    state.new_epoch();
    DfsOptions through_peaks;
    through_peaks.independent_paths = false;
    ASSERT_TRUE(find_improving_path(g, o, 0, 0, state, 2, through_peaks, path));
    EXPECT_EQ(path.vertices, (std::vector<VertexId>{0, 1, 2}));
}

TEST(FindImprovingPath, VisitedVerticesNotReentered) {
    // Source 0 reaches the target 2 only through 1; mark 1 visited first.
    auto [g, o] = oriented({{0, 1}, {1, 2}, {0, 3}, {3, 1}});
    SearchState state(g.num_vertices());
    state.visit(1);
    Path path;
    DfsOptions opts;
    EXPECT_FALSE(find_improving_path(g, o, 0, 0, state, kNoSkip, opts, path));
    state.new_epoch();
    EXPECT_TRUE(find_improving_path(g, o, 0, 0, state, kNoSkip, opts, path));
}

TEST(ExhaustiveDfs, SmallGraphs) {
    {
        const UndirectedGraph g = gen::from_pairs({{0, 1}, {1, 2}, {0, 2}});
        Orientation o = initial_orientation(g);
        EXPECT_EQ(exhaustive_dfs(g, o).dstar, 1);
    }
    {
        const UndirectedGraph g = gen::complete(4);
        for (std::uint64_t mask = 0; mask < 64; ++mask) {
            Orientation o = eo::testing::from_bits(g, mask);
            EXPECT_EQ(exhaustive_dfs(g, o).dstar, 2) << mask;
            EXPECT_EQ(max_out_degree(o), 2);
        }
    }
    {
        const UndirectedGraph g = gen::bowtie();
        Orientation o = initial_orientation(g);
        EXPECT_EQ(exhaustive_dfs(g, o).dstar, 2);
    }
}

TEST(ExhaustiveDfs, EveryToggleCombinationIsExact) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 150; ++trial) {
        const UndirectedGraph g = gen::gnp(2 + rng() % 11, 0.2 + 0.3 * (rng() % 3), rng);
        const std::int32_t expected = brute_force_dstar(g);
        for (int bits = 0; bits < 8; ++bits) {
            const DfsOptions opts{(bits & 1) != 0, (bits & 2) != 0, (bits & 4) != 0};
            Orientation o = initial_orientation(g);
            FlipAudit audit{&g};
            const SearchStats s = exhaustive_dfs(g, o, opts, audit.control());
            EXPECT_EQ(s.dstar, expected);
            EXPECT_TRUE(audit.all_valid);
            EXPECT_TRUE(audit.peak_monotone);
            EXPECT_LE(s.paths_flipped, g.num_edges());
            EXPECT_EQ(o.out_degree, recount_out_degrees(g, o));
        }
    }
}

TEST(ExhaustiveDfs, SharedVisitedSkipsExhaustedRegion) {
    // Two peaks a=0, b=1 (out-degree 3) both lead into a closed region: a
    // 5-vertex regular tournament where every vertex has out-degree 2.
    eo::testing::ArcList arcs;
    const VertexId base = 2;
    for (VertexId i = 0; i < 5; ++i) {
        arcs.emplace_back(base + i, base + (i + 1) % 5);
        arcs.emplace_back(base + i, base + (i + 2) % 5);
    }
    for (VertexId i = 0; i < 3; ++i) {
        arcs.emplace_back(0, base + i);
        arcs.emplace_back(1, base + 2 + i);
    }
    auto [g, o] = oriented(arcs);
    ASSERT_EQ(max_out_degree(o), 3);

    Orientation shared_o = o;
    const SearchStats shared = exhaustive_dfs(g, shared_o, DfsOptions{});
    Orientation fresh_o = o;
    DfsOptions fresh_opts;
    fresh_opts.shared_visited = false;
    const SearchStats fresh = exhaustive_dfs(g, fresh_o, fresh_opts);

    EXPECT_EQ(shared.dstar, 3);
    EXPECT_EQ(fresh.dstar, 3);
    EXPECT_EQ(shared.paths_flipped, 0u);
    // One pass each. With shared marks the region is explored once.
    EXPECT_EQ(shared.vertices_visited, 7u);
    EXPECT_EQ(fresh.vertices_visited, 12u);
    // Within one epoch no vertex is marked twice.
    EXPECT_LE(shared.max_epoch_visits, g.num_vertices());
}

TEST(BatchedBfs, StarWorstCase) {
    const UndirectedGraph g = gen::star(5);
    Orientation o(g);
    const SearchStats s = batched_bfs(g, o);
    EXPECT_EQ(s.dstar, 1);
    EXPECT_EQ(s.paths_flipped, 4u);
    EXPECT_EQ(s.passes, 4u);  // one path per round, the center is the only root
}

TEST(BatchedBfs, TriangleAndCycle) {
    {
        const UndirectedGraph g = gen::from_pairs({{0, 1}, {1, 2}, {0, 2}});
        Orientation o = initial_orientation(g);
        EXPECT_EQ(batched_bfs(g, o).dstar, 1);
    }
    {
        auto [g, o] = oriented({{0, 1}, {1, 2}, {2, 0}});
        const SearchStats s = batched_bfs(g, o);
        EXPECT_EQ(s.dstar, 1);
        EXPECT_EQ(s.paths_flipped, 0u);
    }
}

TEST(BatchedBfs, ExactWithValidFlips) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 300; ++trial) {
        const UndirectedGraph g = gen::gnp(2 + rng() % 11, 0.2 + 0.3 * (rng() % 3), rng);
        Orientation o = eo::testing::from_bits(g, rng());
        FlipAudit audit{&g};
        const SearchStats s = batched_bfs(g, o, audit.control());
        EXPECT_EQ(s.dstar, brute_force_dstar(g));
        EXPECT_TRUE(audit.all_valid);
        EXPECT_TRUE(audit.peak_monotone);
        EXPECT_EQ(o.out_degree, recount_out_degrees(g, o));
    }
}

TEST(EagerLayerCount, Formula) {
    SolverConfig cfg;
    EXPECT_EQ(eager_layer_count(5, 5.0 / 6.0, cfg), 2);
    EXPECT_EQ(eager_layer_count(4, 4.0, cfg), 1);
    EXPECT_EQ(eager_layer_count(1, 0.5, cfg), 1);
    EXPECT_EQ(eager_layer_count(100, 0.0, cfg), 10);
    cfg.eager_layers = 5;
    EXPECT_EQ(eager_layer_count(5, 5.0 / 6.0, cfg), 5);
    EXPECT_EQ(eager_layer_count(50, 3.0, cfg), 5);
}

TEST(EagerPathSearch, StarAfterFastImproveIsNoOp) {
    const UndirectedGraph g = gen::star(5);
    Orientation o(g);
    fast_improve(g, o);
    const Orientation before = o;
    const SearchStats s = eager_path_search(g, o, SolverConfig{});
    EXPECT_EQ(s.paths_flipped, 0u);
    EXPECT_EQ(o, before);
}

TEST(EagerPathSearch, UniformDegreeBehavesLikeOnePass) {
    // 4-regular circulant, each vertex pointing at its next two neighbors:
    // every out-degree is 2, which is optimal.
    eo::testing::ArcList arcs;
    for (VertexId i = 0; i < 9; ++i) {
        arcs.emplace_back(i, (i + 1) % 9);
        arcs.emplace_back(i, (i + 2) % 9);
    }
    auto [g, o] = oriented(arcs);
    const Orientation before = o;
    const SearchStats s = eager_path_search(g, o, SolverConfig{});
    EXPECT_EQ(s.paths_flipped, 0u);
    EXPECT_EQ(o, before);
    EXPECT_EQ(s.dstar, 2);
}

TEST(EagerPathSearch, LowersPeakThroughSharedRegion) {
    // Peak 0 (out-degree 4) and a layer-3 vertex 1 feed the same region.
    eo::testing::ArcList arcs = {{0, 5}, {0, 6}, {0, 7}, {0, 8}, {1, 5}, {1, 6}, {1, 7},
                                 {5, 9}, {6, 9}, {7, 9}, {8, 9}, {5, 6}, {7, 8}};
    auto [g, o] = oriented(arcs);
    ASSERT_EQ(o.out_degree[0], 4);
    ASSERT_EQ(o.out_degree[1], 3);
    SolverConfig cfg;
    cfg.eager_layers = 2;
    FlipAudit audit{&g};
    const SearchStats s = eager_path_search(g, o, cfg, audit.control());
    EXPECT_TRUE(audit.all_valid);
    EXPECT_LT(o.out_degree[0], 4);
    EXPECT_LE(s.dstar, 3);
    EXPECT_EQ(o.out_degree, recount_out_degrees(g, o));
}

TEST(EagerPathSearch, NeverRaisesPeakAndFinisherCompletes) {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 200; ++trial) {
        const UndirectedGraph g = gen::gnp(2 + rng() % 15, 0.15 + 0.15 * (rng() % 5), rng);
        Orientation o = eo::testing::from_bits(g, rng());
        const std::int32_t before = max_out_degree(o);
        SolverConfig cfg;
        if (trial % 2) cfg.eager_layers = 1 + static_cast<std::int32_t>(rng() % 5);
        cfg.eager_size = 1 + static_cast<std::int32_t>(rng() % 8);
        FlipAudit audit{&g};
        eager_path_search(g, o, cfg, audit.control());
        EXPECT_TRUE(audit.all_valid);
        EXPECT_TRUE(audit.peak_monotone);
        EXPECT_LE(max_out_degree(o), before);
        EXPECT_EQ(exhaustive_dfs(g, o).dstar, brute_force_dstar(g));
    }
}

TEST(SearchControl, DeadlineStopsEngines) {
    const UndirectedGraph g = gen::random_triangulation(120, 120, 3);
    Orientation o = initial_orientation(g);
    SearchControl c;
    c.deadline = Clock::now() - std::chrono::seconds(1);
    EXPECT_THROW(exhaustive_dfs(g, o, DfsOptions::naive(), c), timeout_error);
}

TEST(SearchControl, KnownLowerBoundStopsEarly) {
    const UndirectedGraph g = gen::star(5);
    Orientation o(g);
    SearchControl c;
    c.known_lower_bound = 3;
    const SearchStats s = exhaustive_dfs(g, o, DfsOptions{}, c);
    EXPECT_EQ(s.dstar, 3);
}
