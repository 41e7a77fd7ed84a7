// oracle.hpp — ground-truth Hamilton path / cycle decisions for balanced
// bipartite graphs, and the weak Hamilton-connectedness oracle built on them.
//
// Primary backend: dynamic programming over (visited X set, visited Y set,
// last vertex). A path starting in X alternates parts, so |visited X| is
// either |visited Y| or |visited Y| + 1, and the last vertex lives in X
// exactly in the unbalanced case; two tables indexed by the two masks hold
// the feasible last-vertex sets. One DP run from a start x answers every
// endpoint y at once. Used for 2n <= 24.
//
// Fallback backend: depth-first search with fail-first neighbour ordering
// (ascending degree) and a dead-vertex prune, for 24 < 2n <= 32. Larger
// inputs are refused.
//
// Path encoding: vertex v < n is x_v, vertex v >= n is y_{v-n}.
#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "whc/bipartite_graph.hpp"

namespace whc {

enum class HamiltonBackend { Auto, BitmaskDp, PruningDfs };

struct OperationCancelled : std::runtime_error {
    OperationCancelled() : std::runtime_error("operation cancelled") {}
};

struct OracleResult {
    bool weakly_hc = false;
    // Present when witnesses were requested and the decision is positive:
    // (x, y) -> Hamilton path as a vertex sequence from x to y.
    std::optional<std::map<std::pair<int, int>, std::vector<int>>> witness_paths;
    std::optional<std::pair<int, int>> failing_pair;
};

namespace detail {

inline void check_oracle_size(const BipartiteGraph& g) {
    const int n = g.balanced_n();
    if (2 * n > 32)
        throw std::invalid_argument("oracle refuses graphs with more than 32 vertices");
    (void)n;
}

inline void poll_cancel(const std::atomic<bool>* cancel) {
    if (cancel && cancel->load(std::memory_order_relaxed)) throw OperationCancelled();
}

// DP tables for one start vertex x0. dp_x[xm][ym] is the set of feasible
// last X vertices over paths covering exactly (xm, ym) (|xm| = |ym| + 1);
// dp_y[xm][ym] likewise for last Y vertices (|xm| = |ym|).
struct HamiltonDp {
    int n = 0;
    std::vector<std::uint16_t> dp_x;
    std::vector<std::uint16_t> dp_y;

    std::size_t idx(std::uint32_t xm, std::uint32_t ym) const {
        return (static_cast<std::size_t>(xm) << n) | ym;
    }

    void run(const BipartiteGraph& g, int x0, const std::atomic<bool>* cancel) {
        n = g.part_x();
        const std::size_t cells = std::size_t{1} << (2 * n);
        dp_x.assign(cells, 0);
        dp_y.assign(cells, 0);
        const std::uint32_t full = (n == 32) ? 0xFFFFFFFFu : ((1u << n) - 1);

        std::vector<std::uint32_t> x_nbr(static_cast<std::size_t>(n)), y_nbr(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) x_nbr[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(g.row(i));
        for (int j = 0; j < n; ++j) y_nbr[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(g.column(j));

        dp_x[idx(1u << x0, 0)] = static_cast<std::uint16_t>(1u << x0);
        for (std::uint32_t xm = 1; xm <= full; ++xm) {
            if (!((xm >> x0) & 1)) continue;
            poll_cancel(cancel);
            for (std::uint32_t ym = 0; ym <= full; ++ym) {
                const std::size_t cell = idx(xm, ym);
                // last in X: extend to an unvisited Y neighbour
                std::uint32_t lasts = dp_x[cell];
                while (lasts) {
                    const int i = std::countr_zero(lasts);
                    lasts &= lasts - 1;
                    std::uint32_t ext = x_nbr[static_cast<std::size_t>(i)] & ~ym;
                    while (ext) {
                        const int j = std::countr_zero(ext);
                        ext &= ext - 1;
                        dp_y[idx(xm, ym | (1u << j))] |= static_cast<std::uint16_t>(1u << j);
                    }
                }
                // last in Y: extend to an unvisited X neighbour
                lasts = dp_y[cell];
                while (lasts) {
                    const int j = std::countr_zero(lasts);
                    lasts &= lasts - 1;
                    std::uint32_t ext = y_nbr[static_cast<std::size_t>(j)] & ~xm;
                    while (ext) {
                        const int i = std::countr_zero(ext);
                        ext &= ext - 1;
                        dp_x[idx(xm | (1u << i), ym)] |= static_cast<std::uint16_t>(1u << i);
                    }
                }
            }
        }
    }

    std::uint16_t reachable_endpoints() const {
        const std::uint32_t full = (1u << n) - 1;
        return dp_y[idx(full, full)];
    }

    // Walk the tables backwards from (full, full, y); smallest feasible
    // predecessor keeps reconstruction deterministic.
    std::vector<int> reconstruct(const BipartiteGraph& g, int x0, int y) const {
        const std::uint32_t full = (1u << n) - 1;
        std::vector<int> rev;
        std::uint32_t xm = full, ym = full;
        bool last_is_y = true;
        int last = y;
        for (;;) {
            rev.push_back(last_is_y ? n + last : last);
            if (!last_is_y && xm == (1u << x0) && ym == 0) break;
            if (last_is_y) {
                const std::uint32_t prev_ym = ym & ~(1u << last);
                std::uint32_t cand =
                    static_cast<std::uint32_t>(g.column(last)) & dp_x[idx(xm, prev_ym)];
                const int i = std::countr_zero(cand);
                ym = prev_ym;
                last = i;
                last_is_y = false;
            } else {
                const std::uint32_t prev_xm = xm & ~(1u << last);
                std::uint32_t cand =
                    static_cast<std::uint32_t>(g.row(last)) & dp_y[idx(prev_xm, ym)];
                const int j = std::countr_zero(cand);
                xm = prev_xm;
                last = j;
                last_is_y = true;
            }
        }
        return {rev.rbegin(), rev.rend()};
    }
};

// DFS backend. Global vertex ids: x_i = i, y_j = n + j.
class HamiltonDfs {
public:
    HamiltonDfs(const BipartiteGraph& g, const std::atomic<bool>* cancel)
        : n_(g.balanced_n()), cancel_(cancel) {
        nbr_.assign(static_cast<std::size_t>(2 * n_), {});
        for (int i = 0; i < n_; ++i) {
            auto r = g.row(i);
            while (r) {
                const int j = std::countr_zero(r);
                r &= r - 1;
                nbr_[static_cast<std::size_t>(i)].push_back(n_ + j);
                nbr_[static_cast<std::size_t>(n_ + j)].push_back(i);
            }
        }
        // fail-first: scarce vertices before rich ones
        for (auto& list : nbr_)
            std::sort(list.begin(), list.end(), [&](int u, int v) {
                const auto du = nbr_[static_cast<std::size_t>(u)].size();
                const auto dv = nbr_[static_cast<std::size_t>(v)].size();
                return du != dv ? du < dv : u < v;
            });
        adj_.assign(static_cast<std::size_t>(2 * n_), 0);
        for (int v = 0; v < 2 * n_; ++v)
            for (int u : nbr_[static_cast<std::size_t>(v)])
                adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }

    std::optional<std::vector<int>> find_path(int x, int y) {
        target_ = n_ + y;
        path_.clear();
        path_.push_back(x);
        visited_ = std::uint64_t{1} << x;
        if (extend(x)) return path_;
        return std::nullopt;
    }

private:
    bool extend(int v) {
        poll_cancel(cancel_);
        if (static_cast<int>(path_.size()) == 2 * n_) return v == target_;
        if (v == target_) return false; // target may only be last
        // Every other unvisited vertex still needs two free connections
        // (it is interior), the target needs one.
        for (int u = 0; u < 2 * n_; ++u) {
            if ((visited_ >> u) & 1) continue;
            const int avail =
                std::popcount(adj_[static_cast<std::size_t>(u)] & ~visited_) +
                (((adj_[static_cast<std::size_t>(u)] >> v) & 1) ? 1 : 0) - (u == target_ ? 0 : 1);
            if (avail < 1) return false;
        }
        for (int u : nbr_[static_cast<std::size_t>(v)]) {
            if ((visited_ >> u) & 1) continue;
            visited_ |= std::uint64_t{1} << u;
            path_.push_back(u);
            if (extend(u)) return true;
            path_.pop_back();
            visited_ &= ~(std::uint64_t{1} << u);
        }
        return false;
    }

    int n_;
    int target_ = 0;
    const std::atomic<bool>* cancel_;
    std::vector<std::vector<int>> nbr_;
    std::vector<std::uint64_t> adj_;
    std::vector<int> path_;
    std::uint64_t visited_ = 0;
};

inline bool use_dp(const BipartiteGraph& g, HamiltonBackend backend) {
    switch (backend) {
        case HamiltonBackend::BitmaskDp: return true;
        case HamiltonBackend::PruningDfs: return false;
        case HamiltonBackend::Auto: return 2 * g.part_x() <= 24;
    }
    return true;
}

} // namespace detail

inline std::optional<std::vector<int>> hamilton_path_between(
    const BipartiteGraph& g, int x, int y,
    HamiltonBackend backend = HamiltonBackend::Auto,
    const std::atomic<bool>* cancel = nullptr) {
    detail::check_oracle_size(g);
    const int n = g.part_x();
    if (x < 0 || x >= n || y < 0 || y >= n)
        throw std::invalid_argument("hamilton_path_between: endpoint out of range");
    if (n == 1) {
        if (g.has_edge(0, 0)) return std::vector<int>{0, 1};
        return std::nullopt;
    }
    if (detail::use_dp(g, backend)) {
        detail::HamiltonDp dp;
        dp.run(g, x, cancel);
        if ((dp.reachable_endpoints() >> y) & 1) return dp.reconstruct(g, x, y);
        return std::nullopt;
    }
    detail::HamiltonDfs dfs(g, cancel);
    return dfs.find_path(x, y);
}

inline OracleResult is_weakly_hc(const BipartiteGraph& g, bool collect_witnesses = false,
                                 HamiltonBackend backend = HamiltonBackend::Auto,
                                 const std::atomic<bool>* cancel = nullptr) {
    detail::check_oracle_size(g);
    const int n = g.part_x();
    OracleResult result;
    if (collect_witnesses) result.witness_paths.emplace();

    if (n == 1) {
        if (!g.has_edge(0, 0)) {
            result.failing_pair = {0, 0};
            return result;
        }
        if (collect_witnesses) (*result.witness_paths)[{0, 0}] = {0, 1};
        result.weakly_hc = true;
        return result;
    }

    const bool dp_backend = detail::use_dp(g, backend);
    for (int x = 0; x < n; ++x) {
        if (dp_backend) {
            detail::HamiltonDp dp;
            dp.run(g, x, cancel);
            const std::uint16_t ends = dp.reachable_endpoints();
            const std::uint16_t all = static_cast<std::uint16_t>((1u << n) - 1);
            if (ends != all) {
                result.failing_pair = {x, std::countr_zero(static_cast<unsigned>(~ends & all))};
                result.witness_paths.reset();
                return result;
            }
            if (collect_witnesses)
                for (int y = 0; y < n; ++y)
                    (*result.witness_paths)[{x, y}] = dp.reconstruct(g, x, y);
        } else {
            detail::HamiltonDfs dfs(g, cancel);
            for (int y = 0; y < n; ++y) {
                auto path = dfs.find_path(x, y);
                if (!path) {
                    result.failing_pair = {x, y};
                    result.witness_paths.reset();
                    return result;
                }
                if (collect_witnesses) (*result.witness_paths)[{x, y}] = std::move(*path);
            }
        }
    }
    result.weakly_hc = true;
    return result;
}

// True iff some Hamilton cycle of g uses the edge (x, y). Removing that
// cycle edge leaves a Hamilton path between its ends, and a Hamilton path
// between adjacent ends closes into such a cycle, so for n >= 2 this is a
// path query; a 2-vertex graph has no cycle at all.
inline bool hamilton_cycle_through_edge(const BipartiteGraph& g, int x, int y,
                                        HamiltonBackend backend = HamiltonBackend::Auto,
                                        const std::atomic<bool>* cancel = nullptr) {
    detail::check_oracle_size(g);
    if (x < 0 || x >= g.part_x() || y < 0 || y >= g.part_y() || !g.has_edge(x, y))
        throw std::invalid_argument("hamilton_cycle_through_edge: edge not in graph");
    if (g.part_x() == 1) return false;
    return hamilton_path_between(g, x, y, backend, cancel).has_value();
}

} // namespace whc
