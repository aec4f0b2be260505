#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "eo/io.hpp"
#include "eo/solve.hpp"

namespace eo {

struct BenchInstance {
    std::filesystem::path path;
    std::optional<GraphFormat> format;
};

struct BenchOptions {
    std::vector<BenchInstance> instances;
    std::vector<Algorithm> algorithms{Algorithm::rpo, Algorithm::kowalik};
    std::size_t repeats = 5;
    std::optional<double> timeout_s;
    SolverConfig config;
    std::size_t jobs = 1;  // instances solved concurrently
};

/// Reads an instance list: one path per line, '#' comments, paths relative
/// to the list file's directory.
inline std::vector<BenchInstance> read_instance_list(const std::filesystem::path& list) {
    std::ifstream in(list);
    if (!in) throw std::runtime_error("cannot open instance list " + list.string());
    std::vector<BenchInstance> out;
    std::string line;
    while (std::getline(in, line)) {
        const auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos || line[begin] == '#') continue;
        const auto end = line.find_last_not_of(" \t\r");
        std::filesystem::path p = line.substr(begin, end - begin + 1);
        if (p.is_relative()) p = list.parent_path() / p;
        out.push_back({p, std::nullopt});
    }
    return out;
}

namespace detail {

// Run lines followed by one summary line per algorithm, for one instance.
inline std::vector<std::string> bench_instance(const BenchInstance& inst, const BenchOptions& opts) {
    std::vector<std::string> lines;
    const std::string name = inst.path.filename().string();
    BuildResult built;
    try {
        built = load_graph(inst.path, inst.format);
    } catch (const std::exception& e) {
        for (Algorithm alg : opts.algorithms) {
            nlohmann::json j{{"kind", "summary"}, {"instance", name}, {"algorithm", std::string(to_string(alg))},
                             {"runs", 0}, {"completed", 0}, {"complete", false}, {"mean_ms", nullptr},
                             {"error", e.what()}};
            lines.push_back(j.dump());
        }
        return lines;
    }
    const UndirectedGraph& g = built.graph;
    for (Algorithm alg : opts.algorithms) {
        SolverConfig cfg = opts.config;
        cfg.algorithm = alg;
        double total = 0;
        std::size_t completed = 0;
        std::size_t attempted = 0;
        std::optional<std::int32_t> dstar;
        bool consistent = true;
        for (std::size_t run = 0; run < opts.repeats; ++run) {
            ++attempted;
            SearchControl control;
            if (opts.timeout_s) control = SearchControl::with_budget(std::chrono::duration<double>(*opts.timeout_s));
            nlohmann::json j;
            const auto start = Clock::now();
            try {
                SolveResult r = solve(g, cfg, control);
                const double wall = elapsed_ms(start);
                r.report.instance = name;
                j = report_to_json(r.report);
                j["status"] = "ok";
                j["wall_ms"] = wall;
                total += wall;
                ++completed;
                if (dstar && *dstar != r.report.dstar) consistent = false;
                dstar = r.report.dstar;
            } catch (const timeout_error&) {
                j = {{"instance", name}, {"algorithm", std::string(to_string(alg))}, {"n", g.num_vertices()},
                     {"m", g.num_edges()}, {"config", config_to_json(cfg)}, {"status", "timeout"},
                     {"wall_ms", elapsed_ms(start)}};
            }
            j["kind"] = "run";
            j["run"] = run;
            lines.push_back(j.dump());
            if (j["status"] != "ok") break;  // a timed-out pair is not repeated
        }
        nlohmann::json s{{"kind", "summary"}, {"instance", name}, {"algorithm", std::string(to_string(alg))},
                         {"runs", attempted}, {"completed", completed}};
        const bool complete = completed == opts.repeats && opts.repeats > 0;
        s["complete"] = complete;
        s["mean_ms"] = complete ? nlohmann::json(total / static_cast<double>(completed)) : nlohmann::json(nullptr);
        if (dstar) s["dstar"] = *dstar;
        s["dstar_consistent"] = consistent;
        lines.push_back(s.dump());
    }
    return lines;
}

}  // namespace detail

/// Runs every (instance, algorithm) pair `repeats` times. Only the solve is
/// timed; loading is excluded. Returns the report lines in instance order.
inline std::vector<std::string> run_bench(const BenchOptions& opts) {
    std::vector<std::vector<std::string>> per_instance(opts.instances.size());
    const std::size_t jobs = std::max<std::size_t>(1, std::min(opts.jobs, opts.instances.size()));
    if (jobs == 1) {
        for (std::size_t i = 0; i < opts.instances.size(); ++i) {
            per_instance[i] = detail::bench_instance(opts.instances[i], opts);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        for (std::size_t w = 0; w < jobs; ++w) {
            workers.emplace_back([&] {
                for (std::size_t i = next++; i < opts.instances.size(); i = next++) {
                    per_instance[i] = detail::bench_instance(opts.instances[i], opts);
                }
            });
        }
        for (auto& t : workers) t.join();
    }
    std::vector<std::string> lines;
    for (auto& block : per_instance) lines.insert(lines.end(), block.begin(), block.end());
    return lines;
}

}  // namespace eo
