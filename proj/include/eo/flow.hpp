#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "eo/control.hpp"

namespace eo {

/// Capacitated directed network with paired residual arcs (arc a and a ^ 1
/// are mutual reverses). Maximum flow by Dinic's blocking-flow method.
class FlowNetwork {
public:
    using Capacity = std::int64_t;

    struct Arc {
        std::uint32_t from;
        std::uint32_t to;
        Capacity capacity;
        Capacity flow;
        Capacity residual() const { return capacity - flow; }
    };

    FlowNetwork(std::size_t nodes, std::uint32_t source, std::uint32_t sink)
        : nodes_(nodes), source_(source), sink_(sink) {}

    std::size_t num_nodes() const { return nodes_; }
    std::uint32_t source() const { return source_; }
    std::uint32_t sink() const { return sink_; }

    void reserve(std::size_t arcs) { arcs_.reserve(2 * arcs); }

    /// Returns the id of the forward arc.
    std::size_t add_arc(std::uint32_t from, std::uint32_t to, Capacity capacity) {
        const std::size_t id = arcs_.size();
        arcs_.push_back({from, to, capacity, 0});
        arcs_.push_back({to, from, 0, 0});
        built_ = false;
        return id;
    }

    const Arc& arc(std::size_t id) const { return arcs_[id]; }
    std::size_t num_arcs() const { return arcs_.size() / 2; }

    /// Integral max s-t flow added on top of the current flow.
    Capacity max_flow(const SearchControl& control = {}) {
        build_adjacency();
        Capacity total = 0;
        while (build_levels()) {
            control.check_deadline();
            std::copy(first_.begin(), first_.end() - 1, cursor_.begin());
            total += blocking_flow();
        }
        return total;
    }

    /// Net flow out of the source.
    Capacity flow_value() const {
        Capacity total = 0;
        for (std::size_t a = 0; a < arcs_.size(); a += 2) {
            if (arcs_[a].from == source_) total += arcs_[a].flow;
            if (arcs_[a].to == source_) total -= arcs_[a].flow;
        }
        return total;
    }

private:
    void push(std::size_t a, Capacity amount) {
        arcs_[a].flow += amount;
        arcs_[a ^ 1].flow -= amount;
    }

    void build_adjacency() {
        if (built_) return;
        first_.assign(nodes_ + 1, 0);
        for (const Arc& a : arcs_) ++first_[a.from + 1];
        for (std::size_t v = 0; v < nodes_; ++v) first_[v + 1] += first_[v];
        adjacency_.resize(arcs_.size());
        std::vector<std::size_t> fill(first_.begin(), first_.end() - 1);
        for (std::size_t a = 0; a < arcs_.size(); ++a) {
            adjacency_[fill[arcs_[a].from]++] = static_cast<std::uint32_t>(a);
        }
        level_.assign(nodes_, -1);
        cursor_.assign(nodes_, 0);
        built_ = true;
    }

    bool build_levels() {
        std::fill(level_.begin(), level_.end(), -1);
        queue_.clear();
        level_[source_] = 0;
        queue_.push_back(source_);
        for (std::size_t head = 0; head < queue_.size(); ++head) {
            const std::uint32_t v = queue_[head];
            for (std::size_t i = first_[v]; i < first_[v + 1]; ++i) {
                const Arc& a = arcs_[adjacency_[i]];
                if (a.residual() > 0 && level_[a.to] < 0) {
                    level_[a.to] = level_[v] + 1;
                    queue_.push_back(a.to);
                }
            }
        }
        return level_[sink_] >= 0;
    }

    // Iterative augmenting walk over the level graph with current-arc pointers.
    Capacity blocking_flow() {
        Capacity total = 0;
        std::vector<std::uint32_t>& path = path_;
        path.clear();
        std::uint32_t v = source_;
        while (true) {
            if (v == sink_) {
                Capacity bottleneck = std::numeric_limits<Capacity>::max();
                for (std::uint32_t a : path) bottleneck = std::min(bottleneck, arcs_[a].residual());
                std::size_t cut = path.size();
                for (std::size_t i = 0; i < path.size(); ++i) {
                    push(path[i], bottleneck);
                    if (cut == path.size() && arcs_[path[i]].residual() == 0) cut = i;
                }
                total += bottleneck;
                v = arcs_[path[cut]].from;
                path.resize(cut);
                continue;
            }
            bool advanced = false;
            for (std::size_t& i = cursor_[v]; i < first_[v + 1]; ++i) {
                const std::uint32_t a = adjacency_[i];
                const Arc& arc = arcs_[a];
                if (arc.residual() > 0 && level_[arc.to] == level_[v] + 1) {
                    path.push_back(a);
                    v = arc.to;
                    advanced = true;
                    break;
                }
            }
            if (advanced) continue;
            // Dead end: retire v from this phase and back up.
            level_[v] = -1;
            if (path.empty()) break;
            v = arcs_[path.back()].from;
            path.pop_back();
            ++cursor_[v];
        }
        return total;
    }

    std::size_t nodes_;
    std::uint32_t source_;
    std::uint32_t sink_;
    std::vector<Arc> arcs_;
    bool built_ = false;
    std::vector<std::size_t> first_;
    std::vector<std::uint32_t> adjacency_;
    std::vector<std::int32_t> level_;
    std::vector<std::size_t> cursor_;
    std::vector<std::uint32_t> queue_;
    std::vector<std::uint32_t> path_;
};

}  // namespace eo
