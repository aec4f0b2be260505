#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "eo/config.hpp"
#include "eo/control.hpp"
#include "eo/density.hpp"
#include "eo/graph.hpp"
#include "eo/initialization.hpp"
#include "eo/kowalik.hpp"
#include "eo/path_search.hpp"
#include "eo/reduction.hpp"
#include "eo/report.hpp"
#include "eo/verify.hpp"

namespace eo {

struct SolveResult {
    Orientation orientation;
    SolveReport report;
    std::optional<Certificate> certificate;
};

namespace detail {

inline std::int32_t whole_graph_bound(const UndirectedGraph& g) {
    if (g.num_vertices() == 0) return 0;
    return static_cast<std::int32_t>(
        Density{static_cast<std::int64_t>(g.num_edges()), static_cast<std::int64_t>(g.num_vertices())}
            .ceil());
}

inline std::size_t improve(const UndirectedGraph& g, Orientation& o, const SolverConfig& cfg) {
    std::size_t flips = 0;
    for (std::int32_t pass = 0; pass < cfg.fast_improve_passes; ++pass) {
        const std::size_t now = fast_improve(g, o);
        flips += now;
        if (now == 0) break;
    }
    return flips;
}

inline void absorb(SolveReport& report, const SearchStats& stats) {
    report.paths_flipped += stats.paths_flipped;
    report.vertices_visited += stats.vertices_visited;
}

}  // namespace detail

/// Full pipeline: conditional reduction, id-order start plus FastImprove,
/// eager path search, then an exact finisher (optimized DFS below the
/// finisher threshold, batched BFS otherwise), merged with the forced part.
/// Phases are skipped once the max out-degree meets a proven lower bound.
inline SolveResult solve_rpo(const UndirectedGraph& g, const SolverConfig& cfg,
                             const SearchControl& outer = {}) {
    SolveResult result;
    SolveReport& report = result.report;
    report.config = cfg;
    report.n = g.num_vertices();
    report.m = g.num_edges();

    auto start = Clock::now();
    ReductionOutcome reduction = maybe_reduce(g, cfg);
    report.timings.reduce_ms = elapsed_ms(start);
    const UndirectedGraph& h = reduction.graph_to_solve(g);

    SearchControl control = outer;
    control.known_lower_bound = std::max({outer.known_lower_bound, reduction.lower_bound,
                                          detail::whole_graph_bound(h)});
    report.lower_bound = control.known_lower_bound;

    start = Clock::now();
    Orientation o = initial_orientation(h);
    if (max_out_degree(o) > control.known_lower_bound) {
        report.fast_improve_flips = detail::improve(h, o, cfg);
    }
    report.timings.init_ms = elapsed_ms(start);

    start = Clock::now();
    if (max_out_degree(o) > control.known_lower_bound) {
        detail::absorb(report, eager_path_search(h, o, cfg, control));
    }
    report.timings.eps_ms = elapsed_ms(start);

    start = Clock::now();
    const std::int32_t after_eps = max_out_degree(o);
    if (after_eps > control.known_lower_bound) {
        if (after_eps < cfg.finisher_threshold) {
            detail::absorb(report, exhaustive_dfs(h, o, DfsOptions{}, control));
        } else {
            detail::absorb(report, batched_bfs(h, o, control));
        }
    }
    result.orientation = merge_orientation(g, reduction, o);
    report.timings.finish_ms = elapsed_ms(start);
    report.dstar = max_out_degree(result.orientation);
    return result;
}

/// Runs the engine selected by cfg.algorithm. The dfs, bfs and naive engines
/// start from the id-order orientation improved by FastImprove; kowalik
/// does the same before its binary search.
inline SolveResult solve(const UndirectedGraph& g, const SolverConfig& cfg,
                         const SearchControl& control = {}) {
    cfg.validate();
    if (cfg.algorithm == Algorithm::rpo) return solve_rpo(g, cfg, control);

    SolveResult result;
    SolveReport& report = result.report;
    report.config = cfg;
    report.n = g.num_vertices();
    report.m = g.num_edges();

    auto start = Clock::now();
    Orientation o = initial_orientation(g);
    report.fast_improve_flips = detail::improve(g, o, cfg);
    report.timings.init_ms = elapsed_ms(start);

    start = Clock::now();
    switch (cfg.algorithm) {
        case Algorithm::dfs: detail::absorb(report, exhaustive_dfs(g, o, DfsOptions{}, control)); break;
        case Algorithm::naive:
            detail::absorb(report, exhaustive_dfs(g, o, DfsOptions::naive(), control));
            break;
        case Algorithm::bfs: detail::absorb(report, batched_bfs(g, o, control)); break;
        case Algorithm::kowalik: {
            report.lower_bound = detail::whole_graph_bound(g);
            kowalik_search(g, o, control);
            break;
        }
        case Algorithm::rpo: break;
    }
    report.timings.finish_ms = elapsed_ms(start);
    report.dstar = max_out_degree(o);
    result.orientation = std::move(o);
    return result;
}

/// Computes a fresh optimality certificate for the solved orientation and
/// records its summary in the report. Throws certificate_error when the
/// orientation turns out not to be optimal.
inline void attach_certificate(const UndirectedGraph& g, SolveResult& result) {
    std::optional<Certificate> cert;
    try {
        cert = extract_certificate(g, result.orientation);
    } catch (const certificate_error&) {
        // Optimal orientations may still contain improving paths (several
        // peaks); settle them on a copy first.
        cert = certify(g, result.orientation);
    }
    if (cert && cert->k != result.report.dstar) {
        throw certificate_error("orientation has max out-degree " + std::to_string(result.report.dstar) +
                                " but only d* >= " + std::to_string(cert->k) + " is certified");
    }
    if (cert && !check_certificate(g, *cert)) throw certificate_error("certificate failed recount");
    result.certificate = cert;
    if (cert) {
        result.report.certificate =
            CertificateSummary{cert->induced_edges, static_cast<std::int64_t>(cert->vertices.size())};
    } else {
        result.report.certificate.reset();
    }
}

}  // namespace eo
