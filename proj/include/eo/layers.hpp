#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "eo/graph.hpp"

namespace eo {

/// Vertices grouped by current out-degree. The bucket of the max degree is
/// the peak set. Callers report every degree change through `moved`.
class LayerBuckets {
public:
    explicit LayerBuckets(const Orientation& o) : position_(o.out_degree.size()) {
        std::int32_t top = 0;
        for (std::int32_t d : o.out_degree) top = std::max(top, d);
        buckets_.resize(static_cast<std::size_t>(top) + 1);
        degree_ = o.out_degree;
        for (VertexId v = 0; v < degree_.size(); ++v) insert(v);
        max_ = degree_.empty() ? 0 : top;
        while (max_ > 0 && buckets_[max_].empty()) --max_;
    }

    std::int32_t max_degree() const { return max_; }
    std::int32_t degree(VertexId v) const { return degree_[v]; }

    std::span<const VertexId> layer(std::int32_t d) const {
        if (d < 0 || static_cast<std::size_t>(d) >= buckets_.size()) return {};
        return buckets_[d];
    }

    /// Members of layer d in ascending vertex id.
    std::vector<VertexId> sorted_layer(std::int32_t d) const {
        auto members = layer(d);
        std::vector<VertexId> out(members.begin(), members.end());
        std::sort(out.begin(), out.end());
        return out;
    }

    void moved(VertexId v, std::int32_t new_degree) {
        if (degree_[v] == new_degree) return;
        erase(v);
        degree_[v] = new_degree;
        if (static_cast<std::size_t>(new_degree) >= buckets_.size()) buckets_.resize(new_degree + 1);
        insert(v);
        if (new_degree > max_) max_ = new_degree;
        while (max_ > 0 && buckets_[max_].empty()) --max_;
    }

    /// Syncs both endpoints after a path flip.
    void path_flipped(const Orientation& o, const Path& p) {
        if (p.edges.empty()) return;
        moved(p.source(), o.out_degree[p.source()]);
        moved(p.target(), o.out_degree[p.target()]);
    }

private:
    void insert(VertexId v) {
        auto& b = buckets_[degree_[v]];
        position_[v] = static_cast<std::uint32_t>(b.size());
        b.push_back(v);
    }
    void erase(VertexId v) {
        auto& b = buckets_[degree_[v]];
        VertexId last = b.back();
        b[position_[v]] = last;
        position_[last] = position_[v];
        b.pop_back();
    }

    std::vector<std::vector<VertexId>> buckets_;
    std::vector<std::uint32_t> position_;
    std::vector<std::int32_t> degree_;
    std::int32_t max_ = 0;
};

}  // namespace eo
