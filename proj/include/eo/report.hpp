#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "eo/config.hpp"

namespace eo {

struct PhaseTimings {
    double reduce_ms = 0;
    double init_ms = 0;
    double eps_ms = 0;
    double finish_ms = 0;

    double total_ms() const { return reduce_ms + init_ms + eps_ms + finish_ms; }
};

struct CertificateSummary {
    std::int64_t numerator = 0;    // induced edges
    std::int64_t denominator = 0;  // vertices
};

struct SolveReport {
    std::string instance;
    std::size_t n = 0;
    std::size_t m = 0;
    std::int32_t dstar = 0;
    SolverConfig config;
    PhaseTimings timings;
    std::size_t paths_flipped = 0;
    std::size_t vertices_visited = 0;
    std::size_t fast_improve_flips = 0;
    std::int32_t lower_bound = 0;
    std::optional<CertificateSummary> certificate;
};

inline nlohmann::json config_to_json(const SolverConfig& cfg) {
    nlohmann::json j;
    j["algorithm"] = std::string(to_string(cfg.algorithm));
    j["density_threshold"] = cfg.density_threshold;
    if (cfg.eager_layers) {
        j["eager_layers"] = *cfg.eager_layers;
    } else {
        j["eager_layers"] = "dynamic";
    }
    j["eager_size"] = cfg.eager_size;
    j["finisher_threshold"] = cfg.finisher_threshold;
    j["fast_improve_passes"] = cfg.fast_improve_passes;
    return j;
}

inline SolverConfig config_from_json(const nlohmann::json& j) {
    SolverConfig cfg;
    cfg.algorithm = parse_algorithm(j.at("algorithm").get<std::string>());
    cfg.density_threshold = j.at("density_threshold").get<double>();
    if (j.at("eager_layers").is_string()) {
        cfg.eager_layers.reset();
    } else {
        cfg.eager_layers = j.at("eager_layers").get<std::int32_t>();
    }
    cfg.eager_size = j.at("eager_size").get<std::int32_t>();
    cfg.finisher_threshold = j.at("finisher_threshold").get<std::int32_t>();
    cfg.fast_improve_passes = j.value("fast_improve_passes", 1);
    return cfg;
}

inline nlohmann::json report_to_json(const SolveReport& r) {
    nlohmann::json j;
    j["instance"] = r.instance;
    j["n"] = r.n;
    j["m"] = r.m;
    j["dstar"] = r.dstar;
    j["algorithm"] = std::string(to_string(r.config.algorithm));
    j["config"] = config_to_json(r.config);
    j["timings_ms"] = {{"reduce", r.timings.reduce_ms},
                       {"init", r.timings.init_ms},
                       {"eps", r.timings.eps_ms},
                       {"finish", r.timings.finish_ms}};
    j["counters"] = {{"paths_flipped", r.paths_flipped},
                     {"vertices_visited", r.vertices_visited},
                     {"fast_improve_flips", r.fast_improve_flips}};
    j["lower_bound"] = r.lower_bound;
    if (r.certificate) {
        j["certificate"] = {{"present", true},
                            {"numerator", r.certificate->numerator},
                            {"denominator", r.certificate->denominator}};
    } else {
        j["certificate"] = {{"present", false}};
    }
    return j;
}

/// One JSON object per line, no trailing newline.
inline std::string write_report(const SolveReport& r) { return report_to_json(r).dump(); }

inline SolveReport report_from_json(const nlohmann::json& j) {
    SolveReport r;
    r.instance = j.at("instance").get<std::string>();
    r.n = j.at("n").get<std::size_t>();
    r.m = j.at("m").get<std::size_t>();
    r.dstar = j.at("dstar").get<std::int32_t>();
    r.config = config_from_json(j.at("config"));
    const auto& t = j.at("timings_ms");
    r.timings = {t.at("reduce").get<double>(), t.at("init").get<double>(), t.at("eps").get<double>(),
                 t.at("finish").get<double>()};
    const auto& c = j.at("counters");
    r.paths_flipped = c.at("paths_flipped").get<std::size_t>();
    r.vertices_visited = c.at("vertices_visited").get<std::size_t>();
    r.fast_improve_flips = c.value("fast_improve_flips", std::size_t{0});
    r.lower_bound = j.value("lower_bound", 0);
    const auto& cert = j.at("certificate");
    if (cert.at("present").get<bool>()) {
        r.certificate = CertificateSummary{cert.at("numerator").get<std::int64_t>(),
                                           cert.at("denominator").get<std::int64_t>()};
    }
    return r;
}

}  // namespace eo
