#pragma once

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eo/bench.hpp"
#include "eo/io.hpp"
#include "eo/profile.hpp"
#include "eo/report.hpp"
#include "eo/solve.hpp"
#include "eo/verify.hpp"

namespace eo::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitVerifyFailed = 2;

struct SolveArgs {
    std::string input;
    std::string format;  // empty: by extension
    std::string algorithm = "rpo";
    double density_threshold = 10.0;
    std::string eager_layers = "dynamic";
    std::int32_t eager_size = 100;
    std::int32_t finisher_threshold = 10;
    bool check = false;
    bool one_indexed = false;
    std::string out;
    std::string report;
};

struct BenchArgs {
    std::string list;
    std::string algorithms = "rpo,kowalik";
    std::size_t repeats = 5;
    std::optional<double> timeout;
    std::string report_dir = ".";
    std::size_t jobs = 1;
    std::string format;
};

struct ProfileArgs {
    std::vector<std::string> reports;
    std::string out;
};

inline std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) parts.push_back(item);
    }
    return parts;
}

inline int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
    SolverConfig cfg;
    std::optional<GraphFormat> format;
    try {
        cfg.algorithm = parse_algorithm(args.algorithm);
        cfg.density_threshold = args.density_threshold;
        if (args.eager_layers != "dynamic") cfg.eager_layers = std::stoi(args.eager_layers);
        cfg.eager_size = args.eager_size;
        cfg.finisher_threshold = args.finisher_threshold;
        cfg.validate();
        if (!args.format.empty()) format = parse_format_name(args.format);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }

    BuildResult built;
    try {
        built = load_graph(args.input, format, args.one_indexed);
    } catch (const std::exception& e) {
        err << "error: " << args.input << ": " << e.what() << '\n';
        return kExitInputError;
    }
    if (built.dropped_self_loops + built.dropped_duplicates > 0) {
        err << "note: dropped " << built.dropped_self_loops << " self-loops and " << built.dropped_duplicates
            << " duplicate edges\n";
    }
    const UndirectedGraph& g = built.graph;

    SolveResult result = solve(g, cfg);
    result.report.instance = std::filesystem::path(args.input).filename().string();

    int code = kExitOk;
    if (args.check) {
        const ValidationResult valid = validate(g, result.orientation);
        if (!valid.ok) {
            err << "verification failed: " << valid.message << '\n';
            code = kExitVerifyFailed;
        } else {
            try {
                attach_certificate(g, result);
            } catch (const certificate_error& e) {
                err << "verification failed: " << e.what() << '\n';
                code = kExitVerifyFailed;
            }
        }
    }

    const std::string line = write_report(result.report);
    out << line << '\n';
    if (!args.report.empty()) {
        std::ofstream rep(args.report);
        if (!rep) {
            err << "error: cannot write " << args.report << '\n';
            return kExitInputError;
        }
        rep << line << '\n';
    }
    if (!args.out.empty()) {
        std::ofstream orient(args.out);
        if (!orient) {
            err << "error: cannot write " << args.out << '\n';
            return kExitInputError;
        }
        orient << write_orientation(result.orientation, g, args.one_indexed);
    }
    return code;
}

inline int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
    BenchOptions opts;
    try {
        opts.instances = read_instance_list(args.list);
        std::optional<GraphFormat> format;
        if (!args.format.empty()) format = parse_format_name(args.format);
        for (auto& inst : opts.instances) inst.format = format;
        opts.algorithms.clear();
        for (const std::string& name : split_commas(args.algorithms)) opts.algorithms.push_back(parse_algorithm(name));
        if (opts.algorithms.empty()) throw std::invalid_argument("no algorithms given");
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    opts.repeats = args.repeats;
    opts.timeout_s = args.timeout;
    opts.jobs = args.jobs;

    std::error_code ec;
    std::filesystem::create_directories(args.report_dir, ec);
    const std::filesystem::path target = std::filesystem::path(args.report_dir) / "bench.jsonl";
    std::ofstream file(target, std::ios::app);
    if (!file) {
        err << "error: cannot write " << target.string() << '\n';
        return kExitInputError;
    }
    for (const std::string& line : run_bench(opts)) {
        file << line << '\n';
        const auto j = nlohmann::json::parse(line);
        if (j.value("kind", "") != "summary") continue;
        out << j.at("instance").get<std::string>() << ' ' << j.at("algorithm").get<std::string>() << ' ';
        if (j.value("complete", false)) {
            out << "mean_ms=" << j["mean_ms"].get<double>() << " dstar=" << j.value("dstar", -1) << '\n';
        } else {
            out << "incomplete (" << j.value("completed", 0) << '/' << j.value("runs", 0) << " runs ok)\n";
        }
    }
    return kExitOk;
}

inline int cmd_profile(const ProfileArgs& args, std::ostream& out, std::ostream& err) {
    std::vector<ProfileRecord> records;
    try {
        for (const std::string& path : args.reports) {
            std::ifstream in(path);
            if (!in) throw std::runtime_error("cannot open " + path);
            auto part = read_profile_records(in);
            records.insert(records.end(), part.begin(), part.end());
        }
        const std::string csv = profile_csv(compute_profile(records));
        if (args.out.empty()) {
            out << csv;
        } else {
            std::ofstream file(args.out);
            if (!file) throw std::runtime_error("cannot write " + args.out);
            file << csv;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitOk;
}

/// Parses a full command line (without the program name) and dispatches.
inline int run(const std::vector<std::string>& argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Exact minimum max-out-degree edge orientation"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "Solve one instance");
    solve_cmd->add_option("input", solve_args.input, "Graph file")->required();
    solve_cmd->add_option("--format", solve_args.format, "el | metis | mtx (default: by extension)");
    solve_cmd->add_option("--algorithm", solve_args.algorithm, "rpo | dfs | bfs | kowalik | naive");
    solve_cmd->add_option("--density-threshold", solve_args.density_threshold,
                          "Reduce when m/n exceeds this (0 forces reduction)");
    solve_cmd->add_option("--eager-layers", solve_args.eager_layers, "dynamic or a layer count");
    solve_cmd->add_option("--eager-size", solve_args.eager_size, "Layers smaller than this get extra searches");
    solve_cmd->add_option("--finisher-threshold", solve_args.finisher_threshold,
                          "Finish with DFS below this out-degree, BFS otherwise");
    solve_cmd->add_flag("--check", solve_args.check, "Validate and certify the result");
    solve_cmd->add_flag("--one-indexed", solve_args.one_indexed, "Edge-list vertices start at 1");
    solve_cmd->add_option("--out", solve_args.out, "Write the orientation here");
    solve_cmd->add_option("--report", solve_args.report, "Write the report line here");

    BenchArgs bench_args;
    double timeout = 0;
    auto* bench_cmd = app.add_subcommand("bench", "Time algorithms over an instance list");
    bench_cmd->add_option("list", bench_args.list, "Instance list file")->required();
    bench_cmd->add_option("--algorithms", bench_args.algorithms, "Comma-separated algorithm names");
    bench_cmd->add_option("--repeats", bench_args.repeats, "Runs per pair");
    auto* timeout_opt = bench_cmd->add_option("--timeout", timeout, "Per-run limit in seconds");
    bench_cmd->add_option("--report-dir", bench_args.report_dir, "Directory for bench.jsonl");
    bench_cmd->add_option("--jobs", bench_args.jobs, "Instances solved concurrently");
    bench_cmd->add_option("--format", bench_args.format, "Graph format override");

    ProfileArgs profile_args;
    auto* profile_cmd = app.add_subcommand("profile", "Performance profile CSV from report files");
    profile_cmd->add_option("reports", profile_args.reports, "Report files")->required();
    profile_cmd->add_option("--out", profile_args.out, "Write CSV here instead of stdout");

    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }

    if (solve_cmd->parsed()) return cmd_solve(solve_args, out, err);
    if (bench_cmd->parsed()) {
        if (timeout_opt->count() > 0) bench_args.timeout = timeout;
        return cmd_bench(bench_args, out, err);
    }
    return cmd_profile(profile_args, out, err);
}

}  // namespace eo::cli
