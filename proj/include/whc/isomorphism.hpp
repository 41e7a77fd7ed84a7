// isomorphism.hpp — part-respecting (optionally part-swapping) isomorphism
// between bipartite graphs. Backtracking over the X-part assignment, pruned
// by per-vertex signatures (degree + sorted neighbour degrees); once X is
// fixed, the Y side is forced up to permuting vertices with identical mapped
// neighbourhoods, so it reduces to a multiset match. Intended for n <= ~10
// with skewed degree sequences, where the signature pruning bites hard.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "whc/bipartite_graph.hpp"

namespace whc {

struct IsoMapping {
    // When part_swapped is false: x_i of G maps to x_{x_image[i]} of H and
    // y_j maps to y_{y_image[j]}. When true, images land in the other part.
    bool part_swapped = false;
    std::vector<int> x_image;
    std::vector<int> y_image;
};

namespace detail {

using Signature = std::pair<int, std::vector<int>>; // (degree, sorted neighbour degrees)

inline std::vector<Signature> x_signatures(const BipartiteGraph& g) {
    std::vector<Signature> sig(static_cast<std::size_t>(g.part_x()));
    for (int i = 0; i < g.part_x(); ++i) {
        std::vector<int> nbr;
        auto r = g.row(i);
        while (r) {
            nbr.push_back(g.degree_y(std::countr_zero(r)));
            r &= r - 1;
        }
        std::sort(nbr.begin(), nbr.end());
        sig[static_cast<std::size_t>(i)] = {g.degree_x(i), std::move(nbr)};
    }
    return sig;
}

// Part-respecting isomorphism G -> H, or nullopt.
inline std::optional<std::pair<std::vector<int>, std::vector<int>>>
find_part_respecting(const BipartiteGraph& g, const BipartiteGraph& h) {
    if (g.part_x() != h.part_x() || g.part_y() != h.part_y()) return std::nullopt;
    if (g.edge_count() != h.edge_count()) return std::nullopt;
    const int a = g.part_x();
    const int b = g.part_y();

    const auto sig_g = x_signatures(g);
    const auto sig_h = x_signatures(h);
    {
        auto sg = sig_g, sh = sig_h;
        std::sort(sg.begin(), sg.end());
        std::sort(sh.begin(), sh.end());
        if (sg != sh) return std::nullopt;
    }
    {
        auto dy_g = g.degree_sequence().y_degrees;
        auto dy_h = h.degree_sequence().y_degrees;
        if (dy_g != dy_h) return std::nullopt;
    }

    std::vector<std::vector<int>> candidates(static_cast<std::size_t>(a));
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < a; ++j)
            if (sig_g[static_cast<std::size_t>(i)] == sig_h[static_cast<std::size_t>(j)])
                candidates[static_cast<std::size_t>(i)].push_back(j);

    // Assign the most constrained vertices first.
    std::vector<int> order(static_cast<std::size_t>(a));
    for (int i = 0; i < a; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int u, int v) {
        const auto cu = candidates[static_cast<std::size_t>(u)].size();
        const auto cv = candidates[static_cast<std::size_t>(v)].size();
        return cu != cv ? cu < cv : u < v;
    });

    std::vector<int> x_map(static_cast<std::size_t>(a), -1);
    std::uint64_t used = 0;

    // Once X is mapped, each G-column key must appear among H columns with
    // the same multiplicity; pair keys in sorted order to fix y_image.
    auto complete_y_side = [&]() -> std::optional<std::vector<int>> {
        std::vector<std::pair<std::uint64_t, int>> gk, hk;
        gk.reserve(static_cast<std::size_t>(b));
        hk.reserve(static_cast<std::size_t>(b));
        for (int j = 0; j < b; ++j) {
            std::uint64_t key = 0;
            auto c = g.column(j);
            while (c) {
                key |= std::uint64_t{1} << x_map[static_cast<std::size_t>(std::countr_zero(c))];
                c &= c - 1;
            }
            gk.emplace_back(key, j);
            hk.emplace_back(h.column(j), j);
        }
        std::sort(gk.begin(), gk.end());
        std::sort(hk.begin(), hk.end());
        for (int j = 0; j < b; ++j)
            if (gk[static_cast<std::size_t>(j)].first != hk[static_cast<std::size_t>(j)].first)
                return std::nullopt;
        std::vector<int> y_map(static_cast<std::size_t>(b), -1);
        for (int j = 0; j < b; ++j)
            y_map[static_cast<std::size_t>(gk[static_cast<std::size_t>(j)].second)] =
                hk[static_cast<std::size_t>(j)].second;
        return y_map;
    };

    std::optional<std::vector<int>> y_result;
    auto backtrack = [&](auto&& self, int depth) -> bool {
        if (depth == a) {
            y_result = complete_y_side();
            return y_result.has_value();
        }
        const int i = order[static_cast<std::size_t>(depth)];
        for (int j : candidates[static_cast<std::size_t>(i)]) {
            if ((used >> j) & 1) continue;
            x_map[static_cast<std::size_t>(i)] = j;
            used |= std::uint64_t{1} << j;
            if (self(self, depth + 1)) return true;
            used &= ~(std::uint64_t{1} << j);
            x_map[static_cast<std::size_t>(i)] = -1;
        }
        return false;
    };

    if (!backtrack(backtrack, 0)) return std::nullopt;
    return std::make_pair(x_map, *y_result);
}

} // namespace detail

inline std::optional<IsoMapping> is_isomorphic(const BipartiteGraph& g,
                                               const BipartiteGraph& h,
                                               bool allow_part_swap = false) {
    if (auto m = detail::find_part_respecting(g, h)) {
        IsoMapping iso;
        iso.part_swapped = false;
        iso.x_image = std::move(m->first);
        iso.y_image = std::move(m->second);
        return iso;
    }
    if (allow_part_swap && g.part_x() == h.part_y() && g.part_y() == h.part_x()) {
        if (auto m = detail::find_part_respecting(g, h.transposed())) {
            IsoMapping iso;
            iso.part_swapped = true;
            iso.x_image = std::move(m->first); // indices into H's Y part
            iso.y_image = std::move(m->second); // indices into H's X part
            return iso;
        }
    }
    return std::nullopt;
}

} // namespace whc
