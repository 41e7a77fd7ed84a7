// families.hpp — canonical constructors for the extremal families used by
// the condition checkers and the verification harness:
//   K_{m,n}  complete bipartite graph
//   Q_n^t    K_{n,n} minus all edges between fixed sets of t-1 X vertices
//            and n-t Y vertices
//   R_n^t    two complete blocks K_{t,t} and K_{n-t+1,n-t+1} sharing one
//            cross pair (x_{t-1}, y_{t-1})
//   S_n^t    R_n^t minus the shared cut edge
// The index sets are pinned so outputs are reproducible byte for byte;
// isomorphism checks absorb every other labeling.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "whc/bipartite_graph.hpp"

namespace whc {

enum class Family { K, Q, R, S };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::K: return "K";
        case Family::Q: return "Q";
        case Family::R: return "R";
        case Family::S: return "S";
    }
    return "?";
}

struct FamilySpec {
    Family family = Family::K;
    int n = 0; // part size (|Y| for K)
    int t = 0; // block parameter (unused for K)
    int m = 0; // |X|, K only

    static FamilySpec complete(int m, int n) { return {Family::K, n, 0, m}; }
    static FamilySpec q(int n, int t) { return {Family::Q, n, t, 0}; }
    static FamilySpec r(int n, int t) { return {Family::R, n, t, 0}; }
    static FamilySpec s(int n, int t) { return {Family::S, n, t, 0}; }
};

inline int q_max_t(int n) { return (n + 1) / 2; }

inline void validate_family(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::K:
            if (spec.m < 1 || spec.n < 1)
                throw std::invalid_argument("K_{m,n} requires m >= 1 and n >= 1");
            break;
        case Family::Q:
            if (spec.n < 3 || spec.t < 2 || spec.t > q_max_t(spec.n))
                throw std::invalid_argument("Q_n^t requires 2 <= t <= (n+1)/2 (got n=" +
                                            std::to_string(spec.n) + ", t=" +
                                            std::to_string(spec.t) + ")");
            break;
        case Family::R:
        case Family::S:
            if (spec.n < 3 || spec.t < 2 || spec.t > spec.n - 1)
                throw std::invalid_argument(std::string(family_name(spec.family)) +
                                            "_n^t requires 2 <= t <= n-1 (got n=" +
                                            std::to_string(spec.n) + ", t=" +
                                            std::to_string(spec.t) + ")");
            break;
    }
}

inline BipartiteGraph make_complete(int m, int n) {
    validate_family(FamilySpec::complete(m, n));
    std::vector<BipartiteGraph::Row> rows(static_cast<std::size_t>(m));
    const BipartiteGraph::Row full =
        (n == 64) ? ~BipartiteGraph::Row{0} : ((BipartiteGraph::Row{1} << n) - 1);
    for (auto& r : rows) r = full;
    return BipartiteGraph(m, n, std::move(rows));
}

// Deletion sets: X_del = {x_0..x_{t-2}}, Y_del = {y_0..y_{n-t-1}}.
// e = n(n-t+1) + t(t-1).
inline BipartiteGraph make_q(int n, int t) {
    validate_family(FamilySpec::q(n, t));
    std::vector<BipartiteGraph::Row> rows(static_cast<std::size_t>(n));
    const BipartiteGraph::Row full = (BipartiteGraph::Row{1} << n) - 1;
    const BipartiteGraph::Row deleted = (BipartiteGraph::Row{1} << (n - t)) - 1;
    for (int i = 0; i < n; ++i)
        rows[static_cast<std::size_t>(i)] = (i < t - 1) ? (full & ~deleted) : full;
    return BipartiteGraph(n, n, std::move(rows));
}

// Blocks {x_0..x_{t-1}} x {y_0..y_{t-1}} and {x_{t-1}..x_{n-1}} x
// {y_{t-1}..y_{n-1}}, sharing the cut pair (x_{t-1}, y_{t-1}).
// e = t^2 + (n-t+1)^2 - 1.
inline BipartiteGraph make_r(int n, int t) {
    validate_family(FamilySpec::r(n, t));
    std::vector<BipartiteGraph::Row> rows(static_cast<std::size_t>(n));
    const BipartiteGraph::Row low = (BipartiteGraph::Row{1} << t) - 1;
    const BipartiteGraph::Row high = ((BipartiteGraph::Row{1} << n) - 1) &
                                     ~((BipartiteGraph::Row{1} << (t - 1)) - 1);
    for (int i = 0; i < n; ++i) {
        if (i < t - 1)
            rows[static_cast<std::size_t>(i)] = low;
        else if (i == t - 1)
            rows[static_cast<std::size_t>(i)] = low | high;
        else
            rows[static_cast<std::size_t>(i)] = high;
    }
    return BipartiteGraph(n, n, std::move(rows));
}

// R_n^t minus the cut edge (x_{t-1}, y_{t-1}). e = t^2 + (n-t+1)^2 - 2.
inline BipartiteGraph make_s(int n, int t) {
    validate_family(FamilySpec::s(n, t));
    return make_r(n, t).without_edge(t - 1, t - 1);
}

inline BipartiteGraph make_family(const FamilySpec& spec) {
    validate_family(spec);
    switch (spec.family) {
        case Family::K: return make_complete(spec.m, spec.n);
        case Family::Q: return make_q(spec.n, spec.t);
        case Family::R: return make_r(spec.n, spec.t);
        case Family::S: return make_s(spec.n, spec.t);
    }
    throw std::logic_error("unreachable");
}

} // namespace whc
