#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace eo {

enum class Algorithm { rpo, dfs, bfs, kowalik, naive };

inline std::string_view to_string(Algorithm a) {
    switch (a) {
        case Algorithm::rpo: return "rpo";
        case Algorithm::dfs: return "dfs";
        case Algorithm::bfs: return "bfs";
        case Algorithm::kowalik: return "kowalik";
        case Algorithm::naive: return "naive";
    }
    return "?";
}

inline Algorithm parse_algorithm(std::string_view name) {
    if (name == "rpo") return Algorithm::rpo;
    if (name == "dfs") return Algorithm::dfs;
    if (name == "bfs") return Algorithm::bfs;
    if (name == "kowalik") return Algorithm::kowalik;
    if (name == "naive") return Algorithm::naive;
    throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

/// Tuned parameters of the solver pipeline. Defaults are the final
/// configuration: reduction above average density 10, dynamic eager layer
/// count, eager size 100, DFS finisher below out-degree 10.
struct SolverConfig {
    Algorithm algorithm = Algorithm::rpo;
    double density_threshold = 10.0;
    std::optional<std::int32_t> eager_layers;  // nullopt: sqrt(max d - rho)
    std::int32_t eager_size = 100;
    std::int32_t finisher_threshold = 10;
    std::int32_t fast_improve_passes = 1;

    void validate() const {
        if (density_threshold < 0) throw std::invalid_argument("density threshold must be >= 0");
        if (eager_layers && *eager_layers < 0) throw std::invalid_argument("eager layers must be >= 0");
        if (eager_size < 1) throw std::invalid_argument("eager size must be >= 1");
        if (finisher_threshold < 0) throw std::invalid_argument("finisher threshold must be >= 0");
        if (fast_improve_passes < 0) throw std::invalid_argument("fast improve passes must be >= 0");
    }
};

}  // namespace eo
