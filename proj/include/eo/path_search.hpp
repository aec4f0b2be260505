#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "eo/config.hpp"
#include "eo/control.hpp"
#include "eo/graph.hpp"
#include "eo/layers.hpp"

namespace eo {

/// Toggles for the three DFS refinements. The defaults are the tuned DFS;
/// `naive()` turns all of them off.
struct DfsOptions {
    bool early_check = true;        // test out-neighbor degrees before descending
    bool independent_paths = true;  // never pass through another peak vertex
    bool shared_visited = true;     // keep visited marks for a whole pass

    static DfsOptions naive() { return {false, false, false}; }
};

struct SearchStats {
    std::int32_t dstar = 0;
    std::size_t paths_flipped = 0;
    std::size_t vertices_visited = 0;
    std::size_t passes = 0;
    std::size_t max_epoch_visits = 0;  // most vertices marked under a single epoch

    SearchStats& operator+=(const SearchStats& other) {
        paths_flipped += other.paths_flipped;
        vertices_visited += other.vertices_visited;
        passes += other.passes;
        max_epoch_visits = std::max(max_epoch_visits, other.max_epoch_visits);
        return *this;
    }
};

/// Scratch space reused across searches. A vertex counts as visited when its
/// stamp equals the current epoch, so starting a new epoch clears every mark.
class SearchState {
public:
    struct Frame {
        VertexId vertex;
        EdgeId via;  // edge used to reach `vertex`, kNoEdge for the source
        std::size_t cursor;
    };

    explicit SearchState(std::size_t n = 0) { resize(n); }

    void resize(std::size_t n) {
        if (stamp_.size() < n) {
            stamp_.resize(n, 0);
            consumed_.resize(n, 0);
            parent_edge_.resize(n, kNoEdge);
            parent_.resize(n, kNoVertex);
            root_.resize(n, kNoVertex);
        }
    }

    void new_epoch() {
        max_epoch_visits_ = std::max(max_epoch_visits_, epoch_visits_);
        epoch_visits_ = 0;
        if (++epoch_ == 0) {
            std::fill(stamp_.begin(), stamp_.end(), 0);
            std::fill(consumed_.begin(), consumed_.end(), 0);
            epoch_ = 1;
        }
    }
    std::uint32_t epoch() const { return epoch_; }

    bool visited(VertexId v) const { return stamp_[v] == epoch_; }
    void visit(VertexId v) {
        stamp_[v] = epoch_;
        ++epoch_visits_;
        ++total_visits_;
    }

    std::size_t total_visits() const { return total_visits_; }
    std::size_t max_epoch_visits() const { return std::max(max_epoch_visits_, epoch_visits_); }

    std::vector<Frame> frames;
    std::vector<VertexId> queue;

    // Batched BFS bookkeeping, valid for vertices visited in the current epoch.
    bool consumed(VertexId root) const { return consumed_[root] == epoch_; }
    void consume(VertexId root) { consumed_[root] = epoch_; }
    std::vector<EdgeId>& parent_edge() { return parent_edge_; }
    std::vector<VertexId>& parent() { return parent_; }
    std::vector<VertexId>& root() { return root_; }

private:
    std::vector<std::uint32_t> stamp_;
    std::vector<std::uint32_t> consumed_;
    std::vector<EdgeId> parent_edge_;
    std::vector<VertexId> parent_;
    std::vector<VertexId> root_;
    std::uint32_t epoch_ = 1;
    std::size_t epoch_visits_ = 0;
    std::size_t max_epoch_visits_ = 0;
    std::size_t total_visits_ = 0;
};

inline constexpr std::int32_t kNoSkip = -1;

/// Depth-first search along oriented edges from `source` for a vertex with
/// out-degree <= target_bound. Vertices already visited in the current epoch
/// are never entered; the caller decides when a new epoch starts. With
/// independent paths, vertices of out-degree `skip_degree` are not used as
/// interior vertices. On success `path` holds the simple path found.
inline bool find_improving_path(const UndirectedGraph& g, const Orientation& o, VertexId source,
                                std::int32_t target_bound, SearchState& state,
                                std::int32_t skip_degree, const DfsOptions& opts, Path& path,
                                const SearchControl& control = {}) {
    path.clear();
    if (target_bound < 0) return false;
    const auto& d = o.out_degree;
    const std::int32_t skip = opts.independent_paths ? skip_degree : kNoSkip;
    auto& frames = state.frames;
    frames.clear();

    auto emit = [&](VertexId last, EdgeId via) {
        for (const auto& f : frames) {
            path.vertices.push_back(f.vertex);
            if (f.via != kNoEdge) path.edges.push_back(f.via);
        }
        path.vertices.push_back(last);
        path.edges.push_back(via);
        return true;
    };
    // Early check: any unvisited out-neighbor that already qualifies ends the path.
    auto scan = [&](VertexId x) -> const Incidence* {
        for (const Incidence& inc : g.incidences(x)) {
            if (is_out_edge(o, x, inc) && d[inc.neighbor] <= target_bound &&
                !state.visited(inc.neighbor)) {
                return &inc;
            }
        }
        return nullptr;
    };

    state.visit(source);
    frames.push_back({source, kNoEdge, 0});
    if (opts.early_check) {
        if (const Incidence* hit = scan(source)) return emit(hit->neighbor, hit->edge);
    }

    std::size_t steps = 0;
    while (!frames.empty()) {
        if ((++steps & 0x3FFF) == 0) control.check_deadline();
        const VertexId x = frames.back().vertex;
        const auto incs = g.incidences(x);
        bool descended = false;
        for (std::size_t& cursor = frames.back().cursor; cursor < incs.size();) {
            const Incidence& inc = incs[cursor++];
            if (!is_out_edge(o, x, inc)) continue;
            const VertexId u = inc.neighbor;
            if (state.visited(u) || d[u] == skip) continue;
            state.visit(u);
            if (!opts.early_check && d[u] <= target_bound) return emit(u, inc.edge);
            frames.push_back({u, inc.edge, 0});
            if (opts.early_check) {
                if (const Incidence* hit = scan(u)) return emit(hit->neighbor, hit->edge);
            }
            descended = true;
            break;
        }
        if (!descended) frames.pop_back();
    }
    return false;
}

namespace detail {
inline void apply_path(Orientation& o, LayerBuckets& buckets, const Path& path,
                       const SearchControl& control, SearchStats& stats) {
    if (control.on_path) control.on_path(o, path);
    flip_path_unchecked(o, path);
    buckets.path_flipped(o, path);
    ++stats.paths_flipped;
}

inline bool done(const LayerBuckets& buckets, const SearchControl& control) {
    // Below 2 no vertex can sit two under the peak.
    return buckets.max_degree() < 2 || buckets.max_degree() <= control.known_lower_bound;
}
}  // namespace detail

/// Repeated passes over the current peak vertices, one DFS each, flipping
/// every path found. Stops after a pass without flips; the orientation is
/// then optimal.
inline SearchStats exhaustive_dfs(const UndirectedGraph& g, Orientation& o,
                                  const DfsOptions& opts = {}, const SearchControl& control = {}) {
    SearchStats stats;
    LayerBuckets buckets(o);
    SearchState state(g.num_vertices());
    Path path;
    while (!detail::done(buckets, control)) {
        const std::int32_t k = buckets.max_degree();
        const std::vector<VertexId> peaks = buckets.sorted_layer(k);
        if (opts.shared_visited) state.new_epoch();
        std::size_t flipped = 0;
        for (VertexId p : peaks) {
            if (o.out_degree[p] != k) continue;
            if (!opts.shared_visited) state.new_epoch();
            if (find_improving_path(g, o, p, k - 2, state, k, opts, path, control)) {
                detail::apply_path(o, buckets, path, control, stats);
                ++flipped;
            }
        }
        ++stats.passes;
        control.check_deadline();
        if (flipped == 0) break;
    }
    stats.dstar = buckets.max_degree();
    stats.vertices_visited = state.total_visits();
    stats.max_epoch_visits = state.max_epoch_visits();
    return stats;
}

/// Multi-source BFS seeded with every peak vertex. Each improving path found
/// is flipped at once and its root retires for the rest of the round; visited
/// marks stay consumed. Rounds repeat until one finds nothing.
inline SearchStats batched_bfs(const UndirectedGraph& g, Orientation& o,
                               const SearchControl& control = {}) {
    SearchStats stats;
    LayerBuckets buckets(o);
    SearchState state(g.num_vertices());
    auto& parent = state.parent();
    auto& parent_edge = state.parent_edge();
    auto& root = state.root();
    auto& queue = state.queue;
    const auto& d = o.out_degree;
    Path path;

    while (!detail::done(buckets, control)) {
        const std::int32_t k = buckets.max_degree();
        const std::int32_t target_bound = k - 2;
        state.new_epoch();
        queue.clear();
        for (VertexId s : buckets.sorted_layer(k)) {
            state.visit(s);
            root[s] = s;
            parent[s] = kNoVertex;
            queue.push_back(s);
        }
        std::size_t live_roots = queue.size();
        std::size_t found = 0;
        for (std::size_t head = 0; head < queue.size() && live_roots > 0; ++head) {
            if ((head & 0xFFF) == 0) control.check_deadline();
            const VertexId x = queue[head];
            const VertexId r = root[x];
            if (state.consumed(r)) continue;
            for (const Incidence& inc : g.incidences(x)) {
                if (!is_out_edge(o, x, inc) || state.visited(inc.neighbor)) continue;
                const VertexId u = inc.neighbor;
                state.visit(u);
                parent[u] = x;
                parent_edge[u] = inc.edge;
                root[u] = r;
                if (d[u] <= target_bound) {
                    path.clear();
                    for (VertexId w = u; w != r; w = parent[w]) {
                        path.vertices.push_back(w);
                        path.edges.push_back(parent_edge[w]);
                    }
                    path.vertices.push_back(r);
                    std::reverse(path.vertices.begin(), path.vertices.end());
                    std::reverse(path.edges.begin(), path.edges.end());
                    detail::apply_path(o, buckets, path, control, stats);
                    state.consume(r);
                    --live_roots;
                    ++found;
                    break;
                }
                queue.push_back(u);
            }
        }
        ++stats.passes;
        if (found == 0) break;
    }
    stats.dstar = buckets.max_degree();
    stats.vertices_visited = state.total_visits();
    stats.max_epoch_visits = state.max_epoch_visits();
    return stats;
}

/// Number of layers below the peak handled eagerly. Dynamic mode uses
/// round(sqrt(max_d - rho)), clamped to [1, max_d].
inline std::int32_t eager_layer_count(std::int32_t max_d, double rho, const SolverConfig& cfg) {
    if (cfg.eager_layers) return *cfg.eager_layers;
    const double gap = std::max(static_cast<double>(max_d) - rho, 0.0);
    auto i = static_cast<std::int32_t>(std::floor(std::sqrt(gap) + 0.5));
    i = std::max(i, 1);
    return std::min(i, max_d);
}

/// Heuristic pass over the layers d-i, ..., d (d is the max out-degree at
/// entry), outer layers first, sharing visited marks within a layer. Layers
/// with fewer than eager_size members get up to k improvements per vertex for
/// layer d-i+k. May leave a non-optimal orientation; run a finisher after it.
inline SearchStats eager_path_search(const UndirectedGraph& g, Orientation& o,
                                     const SolverConfig& cfg, const SearchControl& control = {}) {
    SearchStats stats;
    LayerBuckets buckets(o);
    SearchState state(g.num_vertices());
    Path path;
    const DfsOptions opts;
    const std::int32_t d = buckets.max_degree();
    const double rho = g.num_vertices() == 0
                           ? 0.0
                           : static_cast<double>(g.num_edges()) / static_cast<double>(g.num_vertices());
    const std::int32_t layers = eager_layer_count(d, rho, cfg);

    for (std::int32_t k = 0; k <= layers; ++k) {
        const std::int32_t layer = d - layers + k;
        if (layer < 2) continue;
        if (buckets.max_degree() <= control.known_lower_bound) break;
        const std::vector<VertexId> members = buckets.sorted_layer(layer);
        const bool small = members.size() < static_cast<std::size_t>(cfg.eager_size);
        const std::int32_t budget = small ? std::max(k, 1) : 1;
        state.new_epoch();
        for (VertexId v : members) {
            if (o.out_degree[v] != layer) continue;
            for (std::int32_t attempt = 0; attempt < budget; ++attempt) {
                if (!find_improving_path(g, o, v, o.out_degree[v] - 2, state, layer, opts, path,
                                         control)) {
                    break;
                }
                detail::apply_path(o, buckets, path, control, stats);
            }
        }
        ++stats.passes;
        control.check_deadline();
    }
    stats.dstar = buckets.max_degree();
    stats.vertices_visited = state.total_visits();
    stats.max_epoch_visits = state.max_epoch_visits();
    return stats;
}

}  // namespace eo
