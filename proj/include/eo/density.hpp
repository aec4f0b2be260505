#pragma once

#include <cstdint>
#include <numeric>

namespace eo {

/// Edge-to-vertex ratio kept as an exact fraction.
struct Density {
    std::int64_t edges = 0;
    std::int64_t vertices = 1;

    double value() const { return vertices == 0 ? 0.0 : static_cast<double>(edges) / vertices; }

    /// Smallest integer >= edges / vertices.
    std::int64_t ceil() const {
        if (vertices == 0 || edges <= 0) return 0;
        return (edges + vertices - 1) / vertices;
    }

    friend bool operator<(const Density& a, const Density& b) {
        return static_cast<__int128>(a.edges) * b.vertices < static_cast<__int128>(b.edges) * a.vertices;
    }
    friend bool operator==(const Density& a, const Density& b) {
        return static_cast<__int128>(a.edges) * b.vertices == static_cast<__int128>(b.edges) * a.vertices;
    }
};

}  // namespace eo
