#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <stdexcept>

#include "eo/graph.hpp"

namespace eo {

using Clock = std::chrono::steady_clock;

class timeout_error : public std::runtime_error {
public:
    timeout_error() : std::runtime_error("solve exceeded its time budget") {}
};

/// Cooperative cancellation plus optional hooks. Engines poll the deadline
/// every few thousand steps and throw timeout_error once it has passed.
struct SearchControl {
    std::optional<Clock::time_point> deadline;
    // Engines stop as soon as the max out-degree reaches this value.
    std::int32_t known_lower_bound = 0;
    // Called with each improving path right before it is flipped.
    std::function<void(const Orientation&, const Path&)> on_path;

    static SearchControl with_budget(std::chrono::duration<double> budget) {
        SearchControl c;
        c.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(budget);
        return c;
    }

    void check_deadline() const {
        if (deadline && Clock::now() > *deadline) throw timeout_error();
    }
};

inline double elapsed_ms(Clock::time_point since) {
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

}  // namespace eo
