// closure.hpp — degree-sum closure of a balanced bipartite graph: repeatedly
// join nonadjacent cross pairs whose degree sum is at least n+2 until no such
// pair remains. The fixed point does not depend on processing order; the
// default operator scans pairs lexicographically so traces are reproducible,
// and a seeded variant processes eligible pairs in random order for the
// order-independence checks.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "whc/bipartite_graph.hpp"
#include "whc/prng.hpp"

namespace whc {

struct ClosureTrace {
    BipartiteGraph result;
    std::vector<std::pair<int, int>> added_edges; // in order of addition
    int rounds = 0;                               // scan passes that added an edge
};

inline ClosureTrace b_closure(const BipartiteGraph& g) {
    const int n = g.balanced_n();
    std::vector<BipartiteGraph::Row> rows = g.rows();
    std::vector<int> dx(static_cast<std::size_t>(n)), dy(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) dx[static_cast<std::size_t>(i)] = g.degree_x(i);
    for (int j = 0; j < n; ++j) dy[static_cast<std::size_t>(j)] = g.degree_y(j);

    ClosureTrace trace{g, {}, 0};
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if ((rows[static_cast<std::size_t>(i)] >> j) & 1) continue;
                if (dx[static_cast<std::size_t>(i)] + dy[static_cast<std::size_t>(j)] < n + 2) continue;
                rows[static_cast<std::size_t>(i)] |= BipartiteGraph::Row{1} << j;
                ++dx[static_cast<std::size_t>(i)];
                ++dy[static_cast<std::size_t>(j)];
                trace.added_edges.emplace_back(i, j);
                changed = true;
            }
        }
        if (changed) ++trace.rounds;
    }
    trace.result = BipartiteGraph(n, n, std::move(rows));
    return trace;
}

// Each step collects every currently eligible pair and joins one chosen
// uniformly at random. Exists to test that the fixed point is order-free.
inline ClosureTrace b_closure_shuffled(const BipartiteGraph& g, std::uint64_t seed) {
    const int n = g.balanced_n();
    SplitMix64 rng(seed);
    std::vector<BipartiteGraph::Row> rows = g.rows();
    std::vector<int> dx(static_cast<std::size_t>(n)), dy(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) dx[static_cast<std::size_t>(i)] = g.degree_x(i);
    for (int j = 0; j < n; ++j) dy[static_cast<std::size_t>(j)] = g.degree_y(j);

    ClosureTrace trace{g, {}, 0};
    for (;;) {
        std::vector<std::pair<int, int>> eligible;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!((rows[static_cast<std::size_t>(i)] >> j) & 1) &&
                    dx[static_cast<std::size_t>(i)] + dy[static_cast<std::size_t>(j)] >= n + 2)
                    eligible.emplace_back(i, j);
        if (eligible.empty()) break;
        const auto [i, j] = eligible[static_cast<std::size_t>(rng.next_below(eligible.size()))];
        rows[static_cast<std::size_t>(i)] |= BipartiteGraph::Row{1} << j;
        ++dx[static_cast<std::size_t>(i)];
        ++dy[static_cast<std::size_t>(j)];
        trace.added_edges.emplace_back(i, j);
        ++trace.rounds;
    }
    trace.result = BipartiteGraph(n, n, std::move(rows));
    return trace;
}

inline bool is_closed(const BipartiteGraph& g) {
    const int n = g.balanced_n();
    for (int i = 0; i < n; ++i) {
        BipartiteGraph::Row non = ~g.row(i) & g.row_mask();
        while (non) {
            const int j = std::countr_zero(non);
            non &= non - 1;
            if (g.degree_x(i) + g.degree_y(j) >= n + 2) return false;
        }
    }
    return true;
}

} // namespace whc
