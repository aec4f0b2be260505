#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace eo {

/// Mean running time of one algorithm on one instance; nullopt when any run
/// timed out or failed.
struct ProfileRecord {
    std::string instance;
    std::string algorithm;
    std::optional<double> mean_ms;
};

/// Performance profile: for each tau, the share of instances an algorithm
/// solved within tau times the best mean on that instance.
struct Profile {
    std::vector<std::string> algorithms;
    std::vector<double> taus;
    std::vector<std::vector<double>> fractions;  // [tau][algorithm]
};

inline constexpr std::size_t kProfileGridPoints = 64;
inline constexpr double kProfileMaxTau = 1e4;
inline constexpr double kProfileMinTimeMs = 1e-6;

inline Profile compute_profile(const std::vector<ProfileRecord>& records) {
    std::map<std::string, std::map<std::string, std::optional<double>>> table;  // alg -> instance -> time
    std::set<std::string> instances;
    for (const ProfileRecord& r : records) {
        table[r.algorithm][r.instance] = r.mean_ms;
        instances.insert(r.instance);
    }
    if (table.empty()) throw std::invalid_argument("no timing records");

    std::string missing;
    for (const auto& [alg, times] : table) {
        for (const std::string& inst : instances) {
            if (!times.count(inst)) missing += " " + alg + ":" + inst;
        }
    }
    if (!missing.empty()) throw std::invalid_argument("instance sets differ; missing" + missing);

    Profile p;
    for (const auto& entry : table) p.algorithms.push_back(entry.first);

    // ratio[alg][instance], nullopt = never solved
    std::vector<std::vector<std::optional<double>>> ratios(p.algorithms.size());
    double max_ratio = 1.0;
    for (const std::string& inst : instances) {
        std::optional<double> best;
        for (const auto& alg : p.algorithms) {
            const auto& t = table[alg][inst];
            if (t) best = best ? std::min(*best, *t) : *t;
        }
        for (std::size_t a = 0; a < p.algorithms.size(); ++a) {
            const auto& t = table[p.algorithms[a]][inst];
            if (!t || !best) {
                ratios[a].push_back(std::nullopt);
                continue;
            }
            const double ratio = std::max(*t, kProfileMinTimeMs) / std::max(*best, kProfileMinTimeMs);
            ratios[a].push_back(ratio);
            max_ratio = std::max(max_ratio, ratio);
        }
    }
    max_ratio = std::min(max_ratio, kProfileMaxTau);

    if (max_ratio <= 1.0) {
        p.taus.push_back(1.0);
    } else {
        for (std::size_t i = 0; i < kProfileGridPoints; ++i) {
            p.taus.push_back(std::pow(max_ratio, static_cast<double>(i) / (kProfileGridPoints - 1)));
        }
        p.taus.front() = 1.0;
        p.taus.back() = max_ratio;
    }
    const double count = static_cast<double>(instances.size());
    for (double tau : p.taus) {
        std::vector<double> row;
        for (const auto& per_instance : ratios) {
            std::size_t within = 0;
            for (const auto& r : per_instance) within += r && *r <= tau;
            row.push_back(static_cast<double>(within) / count);
        }
        p.fractions.push_back(std::move(row));
    }
    return p;
}

inline std::string profile_csv(const Profile& p) {
    std::ostringstream out;
    out << "tau";
    for (const auto& a : p.algorithms) out << ',' << a;
    out << '\n';
    char buf[64];
    for (std::size_t i = 0; i < p.taus.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.6g", p.taus[i]);
        out << buf;
        for (double f : p.fractions[i]) {
            std::snprintf(buf, sizeof buf, "%.6g", f);
            out << ',' << buf;
        }
        out << '\n';
    }
    return out.str();
}

/// Collects records from report lines. Summary lines (kind "summary") carry
/// a ready mean; otherwise run lines and plain solve reports are averaged per
/// (instance, algorithm), and any non-ok run marks the pair unsolved.
inline std::vector<ProfileRecord> read_profile_records(std::istream& in) {
    struct Accum {
        double total = 0;
        std::size_t runs = 0;
        bool failed = false;
    };
    std::map<std::pair<std::string, std::string>, std::optional<double>> summaries;
    std::map<std::pair<std::string, std::string>, Accum> runs;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument("report line " + std::to_string(number) + ": " + e.what());
        }
        const auto key = std::make_pair(j.at("instance").get<std::string>(), j.at("algorithm").get<std::string>());
        const std::string kind = j.value("kind", "run");
        if (kind == "summary") {
            summaries[key] = j.value("complete", false) && j.contains("mean_ms") && !j["mean_ms"].is_null()
                                 ? std::optional<double>(j["mean_ms"].get<double>())
                                 : std::nullopt;
            continue;
        }
        Accum& acc = runs[key];
        if (j.value("status", "ok") != "ok") {
            acc.failed = true;
            continue;
        }
        double wall = 0;
        if (j.contains("wall_ms")) {
            wall = j["wall_ms"].get<double>();
        } else {
            for (const auto& [phase, ms] : j.at("timings_ms").items()) wall += ms.get<double>();
        }
        acc.total += wall;
        ++acc.runs;
    }
    std::vector<ProfileRecord> records;
    for (const auto& [key, mean] : summaries) records.push_back({key.first, key.second, mean});
    for (const auto& [key, acc] : runs) {
        if (summaries.count(key)) continue;
        std::optional<double> mean;
        if (!acc.failed && acc.runs > 0) mean = acc.total / static_cast<double>(acc.runs);
        records.push_back({key.first, key.second, mean});
    }
    return records;
}

}  // namespace eo
