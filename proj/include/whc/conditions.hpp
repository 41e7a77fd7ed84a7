// conditions.hpp — one checker per sufficient condition for weak Hamilton-
// connectedness, each returning a structured Verdict, plus the S/R sandwich
// matcher and the aggregate report with optional oracle confirmation.
//
// A checker never takes the parameter k from the caller: it scans every
// admissible k (and t) and reports the best outcome with the witnessing
// value in its detail string.
//
// Spectral comparisons are banded: values within eq_tol of the threshold
// count as numerically equal (both sides carry eigensolver error, and the
// stated conditions are inclusive); values beyond eq_tol but inside the
// decision band are inconclusive and never certify.
#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "whc/bipartite_graph.hpp"
#include "whc/closure.hpp"
#include "whc/families.hpp"
#include "whc/isomorphism.hpp"
#include "whc/oracle.hpp"
#include "whc/spectral.hpp"

namespace whc {

enum class ConditionId {
    PairSum,              // nonadjacent cross degree sums >= n+2
    Gamma,                // low-degree subset adjacency condition
    DegreeCount,          // few low-degree vertices per part
    ClosureComplete,      // closure is complete bipartite
    DegreeSequence,       // ascending degree sequence condition
    EdgeCountT,           // edge count above the t-scan threshold
    EdgeCountK,           // edge count above n(n-k)+k(k+1) for some k
    SpectralRho,          // rho(G) >= rho(Q_n^k)
    SpectralQ,            // q(G) >= q(Q_n^k)
    SpectralRhoComplement, // rho(G^) <= sqrt((k-1)(n-k)), sandwich excepted
    SpectralQComplement,  // q(G^) <= n-1, sandwich excepted
    ClosedFormRho,        // rho(G) >= sqrt(n(n-k+1)), n > k(k+1)
    ClosedFormQ,          // q(G) >= 2n-k+1, n > k(k+1)
};

inline constexpr std::array<ConditionId, 13> kAllConditions = {
    ConditionId::PairSum,        ConditionId::Gamma,
    ConditionId::DegreeCount,    ConditionId::ClosureComplete,
    ConditionId::DegreeSequence, ConditionId::EdgeCountT,
    ConditionId::EdgeCountK,     ConditionId::SpectralRho,
    ConditionId::SpectralQ,      ConditionId::SpectralRhoComplement,
    ConditionId::SpectralQComplement, ConditionId::ClosedFormRho,
    ConditionId::ClosedFormQ,
};

inline const char* condition_name(ConditionId id) {
    switch (id) {
        case ConditionId::PairSum: return "pair_sum";
        case ConditionId::Gamma: return "gamma";
        case ConditionId::DegreeCount: return "degree_count";
        case ConditionId::ClosureComplete: return "closure_complete";
        case ConditionId::DegreeSequence: return "degree_sequence";
        case ConditionId::EdgeCountT: return "edge_count_t";
        case ConditionId::EdgeCountK: return "edge_count_k";
        case ConditionId::SpectralRho: return "spectral_rho";
        case ConditionId::SpectralQ: return "spectral_q";
        case ConditionId::SpectralRhoComplement: return "spectral_rho_complement";
        case ConditionId::SpectralQComplement: return "spectral_q_complement";
        case ConditionId::ClosedFormRho: return "closed_form_rho";
        case ConditionId::ClosedFormQ: return "closed_form_q";
    }
    return "?";
}

inline std::optional<ConditionId> condition_from_name(std::string_view name) {
    for (ConditionId id : kAllConditions)
        if (name == condition_name(id)) return id;
    return std::nullopt;
}

enum class Confidence { Exact, NumericWithBand, Inconclusive };

inline const char* confidence_name(Confidence c) {
    switch (c) {
        case Confidence::Exact: return "exact";
        case Confidence::NumericWithBand: return "numeric_with_band";
        case Confidence::Inconclusive: return "inconclusive";
    }
    return "?";
}

struct Verdict {
    ConditionId id = ConditionId::PairSum;
    bool applicable = false;
    bool satisfied = false;
    bool certified_whc = false;
    Confidence confidence = Confidence::Exact;
    std::string detail;
};

struct SpectralOptions {
    double eigen_tol = kDefaultEigenTol;
    double band_rel = 1e-7; // band = band_rel * max(1, |threshold|)
    double eq_tol = 1e-9;   // |value - threshold| below this counts as equality
};

namespace detail {

inline std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

struct BandedOutcome {
    bool satisfied = false;
    Confidence confidence = Confidence::NumericWithBand;
};

inline BandedOutcome banded_at_least(double value, double threshold, const SpectralOptions& o) {
    const double band = o.band_rel * std::max(1.0, std::abs(threshold));
    const double diff = value - threshold;
    if (std::abs(diff) <= o.eq_tol) return {true, Confidence::NumericWithBand};
    if (std::abs(diff) <= band) return {true, Confidence::Inconclusive};
    return {diff > 0.0, Confidence::NumericWithBand};
}

inline BandedOutcome banded_at_most(double value, double threshold, const SpectralOptions& o) {
    const double band = o.band_rel * std::max(1.0, std::abs(threshold));
    const double diff = value - threshold;
    if (std::abs(diff) <= o.eq_tol) return {true, Confidence::NumericWithBand};
    if (std::abs(diff) <= band) return {true, Confidence::Inconclusive};
    return {diff < 0.0, Confidence::NumericWithBand};
}

inline Verdict make_verdict(ConditionId id, bool applicable, bool satisfied,
                            Confidence confidence, std::string detail) {
    Verdict v;
    v.id = id;
    v.applicable = applicable;
    v.satisfied = satisfied;
    v.confidence = confidence;
    v.certified_whc = applicable && satisfied && confidence != Confidence::Inconclusive;
    v.detail = std::move(detail);
    return v;
}

// Enumerate (k-1)-subsets of `pool` and test each against `low_other`:
// every low-degree vertex on the other side must have a neighbour in the
// subset. neighbour_mask(j) gives the subset-side neighbours of vertex j.
template <class NeighbourMask>
inline bool gamma_side_holds(const std::vector<int>& pool, int k,
                             const std::vector<int>& low_other,
                             NeighbourMask&& neighbour_mask) {
    const int take = k - 1;
    if (static_cast<int>(pool.size()) < take) return true; // vacuous for this k
    std::vector<int> pick(static_cast<std::size_t>(take));
    for (int i = 0; i < take; ++i) pick[static_cast<std::size_t>(i)] = i;
    for (;;) {
        std::uint64_t subset = 0;
        for (int i : pick) subset |= std::uint64_t{1} << pool[static_cast<std::size_t>(i)];
        for (int j : low_other)
            if (!(neighbour_mask(j) & subset)) return false;
        // next combination
        int pos = take - 1;
        while (pos >= 0 &&
               pick[static_cast<std::size_t>(pos)] ==
                   static_cast<int>(pool.size()) - take + pos)
            --pos;
        if (pos < 0) break;
        ++pick[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < take; ++i)
            pick[static_cast<std::size_t>(i)] = pick[static_cast<std::size_t>(i - 1)] + 1;
    }
    return true;
}

} // namespace detail

// Caches numerically computed spectra of Q_n^k, keyed by (n, k). Not thread
// safe: sweep workers each own one.
class FamilySpectrumCache {
public:
    explicit FamilySpectrumCache(double eigen_tol = kDefaultEigenTol) : tol_(eigen_tol) {}

    const SpectralSummary& q_family(int n, int k) {
        const auto key = std::make_pair(n, k);
        auto it = cache_.find(key);
        if (it == cache_.end())
            it = cache_.emplace(key, spectral_summary(make_q(n, k), tol_)).first;
        return it->second;
    }

private:
    double tol_;
    std::map<std::pair<int, int>, SpectralSummary> cache_;
};

// --------------------------------------------------------------------------
// Exact (arithmetic) checkers

inline Verdict check_pair_sum(const BipartiteGraph& g) {
    const int n = g.balanced_n();
    const auto s = g.sigma();
    if (!s)
        return detail::make_verdict(ConditionId::PairSum, true, true, Confidence::Exact,
                                    "complete bipartite, no nonadjacent cross pair");
    const bool ok = *s >= n + 2;
    return detail::make_verdict(ConditionId::PairSum, true, ok, Confidence::Exact,
                                "sigma=" + std::to_string(*s) + (ok ? " >= " : " < ") +
                                    "n+2=" + std::to_string(n + 2));
}

inline Verdict check_gamma(const BipartiteGraph& g) {
    const int n = g.balanced_n();
    const int kmax = (n + 1) / 2;
    if (kmax < 2)
        return detail::make_verdict(ConditionId::Gamma, false, false, Confidence::Exact,
                                    "no admissible k for n=" + std::to_string(n));
    for (int k = 2; k <= kmax; ++k) {
        std::vector<int> low_x, low_y, low_x_other, low_y_other;
        for (int i = 0; i < n; ++i) {
            if (g.degree_x(i) <= k) low_x.push_back(i);
            if (g.degree_x(i) <= n - k + 1) low_x_other.push_back(i);
        }
        for (int j = 0; j < n; ++j) {
            if (g.degree_y(j) <= k) low_y.push_back(j);
            if (g.degree_y(j) <= n - k + 1) low_y_other.push_back(j);
        }
        const bool x_side = detail::gamma_side_holds(
            low_x, k, low_y_other, [&](int j) { return static_cast<std::uint64_t>(g.column(j)); });
        if (!x_side)
            return detail::make_verdict(
                ConditionId::Gamma, true, false, Confidence::Exact,
                "k=" + std::to_string(k) +
                    ": some low-degree Y vertex misses a (k-1)-subset of low-degree X");
        const bool y_side = detail::gamma_side_holds(
            low_y, k, low_x_other, [&](int i) { return static_cast<std::uint64_t>(g.row(i)); });
        if (!y_side)
            return detail::make_verdict(
                ConditionId::Gamma, true, false, Confidence::Exact,
                "k=" + std::to_string(k) +
                    ": some low-degree X vertex misses a (k-1)-subset of low-degree Y");
    }
    return detail::make_verdict(ConditionId::Gamma, true, true, Confidence::Exact,
                                "holds for every k in [2," + std::to_string(kmax) + "]");
}

inline Verdict check_degree_count(const BipartiteGraph& g) {
    const int n = g.balanced_n();
    const int kmax = (n + 1) / 2;
    if (kmax < 2)
        return detail::make_verdict(ConditionId::DegreeCount, false, false, Confidence::Exact,
                                    "no admissible k for n=" + std::to_string(n));
    for (int k = 2; k <= kmax; ++k) {
        int cx = 0, cy = 0;
        for (int i = 0; i < n; ++i) cx += (g.degree_x(i) <= k);
        for (int j = 0; j < n; ++j) cy += (g.degree_y(j) <= k);
        if (cx >= k - 1 || cy >= k - 1)
            return detail::make_verdict(
                ConditionId::DegreeCount, true, false, Confidence::Exact,
                "k=" + std::to_string(k) + ": counts (" + std::to_string(cx) + "," +
                    std::to_string(cy) + ") not both < " + std::to_string(k - 1));
    }
    return detail::make_verdict(ConditionId::DegreeCount, true, true, Confidence::Exact,
                                "low-degree counts below k-1 for every k in [2," +
                                    std::to_string(kmax) + "] (k=1 excluded: count < 0 is unsatisfiable)");
}

inline Verdict check_closure_complete(const BipartiteGraph& g) {
    g.balanced_n();
    const auto trace = b_closure(g);
    const bool ok = trace.result.is_complete_bipartite();
    return detail::make_verdict(ConditionId::ClosureComplete, true, ok, Confidence::Exact,
                                "closure added " + std::to_string(trace.added_edges.size()) +
                                    " edge(s), result " + (ok ? "complete" : "incomplete"));
}

inline Verdict check_degree_sequence(const BipartiteGraph& g) {
    const int n = g.balanced_n();
    if (n < 3)
        return detail::make_verdict(ConditionId::DegreeSequence, false, false, Confidence::Exact,
                                    "needs n >= 3 (index n-1 degenerates below)");
    const auto seq = g.degree_sequence();
    for (int k = 2; k <= (n + 1) / 2; ++k) {
        if (seq.d(k - 1) <= k && seq.d(n - 1) <= n - k + 1)
            return detail::make_verdict(
                ConditionId::DegreeSequence, true, false, Confidence::Exact,
                "k=" + std::to_string(k) + ": d_" + std::to_string(k - 1) + "=" +
                    std::to_string(seq.d(k - 1)) + " <= k and d_" + std::to_string(n - 1) +
                    "=" + std::to_string(seq.d(n - 1)) + " <= n-k+1=" +
                    std::to_string(n - k + 1));
    }
    return detail::make_verdict(ConditionId::DegreeSequence, true, true, Confidence::Exact,
                                "no k in [2," + std::to_string((n + 1) / 2) +
                                    "] has d_{k-1} <= k and d_{n-1} <= n-k+1");
}

inline Verdict check_edge_count_t(const BipartiteGraph& g) {
    const int n = g.balanced_n();
    const int k = std::min(g.min_degree(), (n + 1) / 2);
    if (k < 2)
        return detail::make_verdict(ConditionId::EdgeCountT, false, false, Confidence::Exact,
                                    "needs min degree >= 2 (k=" + std::to_string(k) + ")");
    long best = -1;
    int best_t = k;
    for (int t = k; t <= (n + 1) / 2; ++t) {
        const long v = static_cast<long>(n) * (n - t + 1) + static_cast<long>(t) * (t + 1);
        if (v > best) {
            best = v;
            best_t = t;
        }
    }
    const bool ok = g.edge_count() > best;
    return detail::make_verdict(ConditionId::EdgeCountT, true, ok, Confidence::Exact,
                                "e=" + std::to_string(g.edge_count()) + (ok ? " > " : " <= ") +
                                    "max threshold " + std::to_string(best) + " (at t=" +
                                    std::to_string(best_t) + ", k=" + std::to_string(k) + ")");
}

inline Verdict check_edge_count_k(const BipartiteGraph& g) {
    const int n = g.balanced_n();
    const int kmax = std::min(g.min_degree(), n / 2);
    for (int k = 1; k <= kmax; ++k) {
        const long threshold = static_cast<long>(n) * (n - k) + static_cast<long>(k) * (k + 1);
        if (g.edge_count() > threshold)
            return detail::make_verdict(ConditionId::EdgeCountK, true, true, Confidence::Exact,
                                        "k=" + std::to_string(k) + ": e=" +
                                            std::to_string(g.edge_count()) + " > " +
                                            std::to_string(threshold));
    }
    return detail::make_verdict(ConditionId::EdgeCountK, true, false, Confidence::Exact,
                                kmax < 1 ? std::string("no admissible k (min degree 0 or n < 2)")
                                         : "e=" + std::to_string(g.edge_count()) +
                                               " below threshold for every k in [1," +
                                               std::to_string(kmax) + "]");
}

// --------------------------------------------------------------------------
// Sandwich matcher: smallest t in [2, n-1] with G isomorphic to S_n^t or
// R_n^t. The two graphs differ by one edge, so the subgraph sandwich
// S_n^t <= G <= R_n^t collapses to exactly these up to labeling.

inline std::optional<int> matches_sandwich(const BipartiteGraph& g) {
    const int n = g.balanced_n();
    if (n < 3) return std::nullopt;
    const int e = g.edge_count();
    for (int t = 2; t <= n - 1; ++t) {
        const int block = (n - t + 1) * (n - t + 1) + t * t;
        if (e == block - 1 && is_isomorphic(g, make_r(n, t), true)) return t;
        if (e == block - 2 && is_isomorphic(g, make_s(n, t), true)) return t;
    }
    return std::nullopt;
}

// --------------------------------------------------------------------------
// Spectral checkers

namespace detail {

struct BestScan {
    bool applicable = false;
    bool satisfied = false;
    Confidence confidence = Confidence::NumericWithBand;
    std::string detail = "not applicable for any k";

    // Keep the strongest outcome: certified > inconclusive-satisfied >
    // applicable-unsatisfied > inapplicable.
    void offer(bool app, bool sat, Confidence conf, std::string d) {
        auto rank = [](bool a, bool s, Confidence c) {
            if (!a) return 0;
            if (s && c != Confidence::Inconclusive) return 3;
            if (s) return 2;
            return 1;
        };
        if (rank(app, sat, conf) > rank(applicable, satisfied, confidence)) {
            applicable = app;
            satisfied = sat;
            confidence = conf;
            detail = std::move(d);
        }
    }
};

} // namespace detail

inline std::vector<Verdict> check_spectral(const BipartiteGraph& g,
                                           const SpectralOptions& opts = {},
                                           FamilySpectrumCache* cache = nullptr) {
    const int n = g.balanced_n();
    const int delta = g.min_degree();
    detail::BestScan rho_scan, q_scan, rho_comp_scan, q_comp_scan;

    if (delta >= 2) {
        FamilySpectrumCache local(opts.eigen_tol);
        FamilySpectrumCache& spectra = cache ? *cache : local;

        std::optional<SpectralSummary> own, comp;
        std::optional<std::optional<int>> sandwich; // evaluated at most once
        auto own_summary = [&]() -> const SpectralSummary& {
            if (!own) own = spectral_summary(g, opts.eigen_tol);
            return *own;
        };
        auto comp_summary = [&]() -> const SpectralSummary& {
            if (!comp) comp = spectral_summary(g.quasi_complement(), opts.eigen_tol);
            return *comp;
        };
        auto sandwich_match = [&]() -> const std::optional<int>& {
            if (!sandwich) sandwich = matches_sandwich(g);
            return *sandwich;
        };

        for (int k = 2; k <= delta; ++k) {
            if (n >= k * (k + 1)) {
                const auto& qf = spectra.q_family(n, k);
                if (own_summary().rho.converged && qf.rho.converged) {
                    const auto cmp =
                        detail::banded_at_least(own_summary().rho.value, qf.rho.value, opts);
                    rho_scan.offer(true, cmp.satisfied, cmp.confidence,
                                   "k=" + std::to_string(k) + ": rho(G)=" +
                                       detail::fmt(own_summary().rho.value) + " vs rho(Q)=" +
                                       detail::fmt(qf.rho.value));
                } else {
                    rho_scan.offer(true, false, Confidence::Inconclusive,
                                   "k=" + std::to_string(k) + ": eigensolver did not converge");
                }
                if (own_summary().q.converged && qf.q.converged) {
                    const auto cmp =
                        detail::banded_at_least(own_summary().q.value, qf.q.value, opts);
                    q_scan.offer(true, cmp.satisfied, cmp.confidence,
                                 "k=" + std::to_string(k) + ": q(G)=" +
                                     detail::fmt(own_summary().q.value) + " vs q(Q)=" +
                                     detail::fmt(qf.q.value));
                } else {
                    q_scan.offer(true, false, Confidence::Inconclusive,
                                 "k=" + std::to_string(k) + ": eigensolver did not converge");
                }
            }
            if (n >= 2 * k - 1) {
                const double rho_threshold = std::sqrt(static_cast<double>(k - 1) * (n - k));
                const double q_threshold = n - 1;
                if (comp_summary().rho.converged) {
                    auto cmp = detail::banded_at_most(comp_summary().rho.value, rho_threshold, opts);
                    std::string d = "k=" + std::to_string(k) + ": rho(comp)=" +
                                    detail::fmt(comp_summary().rho.value) + " vs " +
                                    detail::fmt(rho_threshold);
                    if (cmp.satisfied && sandwich_match()) {
                        cmp.satisfied = false;
                        d += "; matches S/R exception class (t=" +
                             std::to_string(*sandwich_match()) + ")";
                    }
                    rho_comp_scan.offer(true, cmp.satisfied, cmp.confidence, std::move(d));
                } else {
                    rho_comp_scan.offer(true, false, Confidence::Inconclusive,
                                        "k=" + std::to_string(k) +
                                            ": eigensolver did not converge");
                }
                if (comp_summary().q.converged) {
                    auto cmp = detail::banded_at_most(comp_summary().q.value, q_threshold, opts);
                    std::string d = "k=" + std::to_string(k) + ": q(comp)=" +
                                    detail::fmt(comp_summary().q.value) + " vs " +
                                    detail::fmt(q_threshold);
                    if (cmp.satisfied && sandwich_match()) {
                        cmp.satisfied = false;
                        d += "; matches S/R exception class (t=" +
                             std::to_string(*sandwich_match()) + ")";
                    }
                    q_comp_scan.offer(true, cmp.satisfied, cmp.confidence, std::move(d));
                } else {
                    q_comp_scan.offer(true, false, Confidence::Inconclusive,
                                      "k=" + std::to_string(k) + ": eigensolver did not converge");
                }
            }
        }
    } else {
        const std::string why = "needs min degree >= 2 (delta=" + std::to_string(delta) + ")";
        rho_scan.detail = q_scan.detail = rho_comp_scan.detail = q_comp_scan.detail = why;
    }

    auto finish = [](ConditionId id, const detail::BestScan& s) {
        return detail::make_verdict(id, s.applicable, s.satisfied, s.confidence, s.detail);
    };
    return {finish(ConditionId::SpectralRho, rho_scan),
            finish(ConditionId::SpectralQ, q_scan),
            finish(ConditionId::SpectralRhoComplement, rho_comp_scan),
            finish(ConditionId::SpectralQComplement, q_comp_scan)};
}

inline std::vector<Verdict> check_spectral_closed(const BipartiteGraph& g,
                                                  const SpectralOptions& opts = {}) {
    const int n = g.balanced_n();
    const int delta = g.min_degree();
    detail::BestScan rho_scan, q_scan;

    bool any_k = false;
    if (delta >= 2) {
        std::optional<SpectralSummary> own;
        for (int k = 2; k <= delta; ++k) {
            if (n <= k * (k + 1)) continue;
            any_k = true;
            if (!own) own = spectral_summary(g, opts.eigen_tol);
            const double rho_threshold = std::sqrt(static_cast<double>(n) * (n - k + 1));
            const double q_threshold = 2.0 * n - k + 1;
            if (own->rho.converged) {
                const auto cmp = detail::banded_at_least(own->rho.value, rho_threshold, opts);
                rho_scan.offer(true, cmp.satisfied, cmp.confidence,
                               "k=" + std::to_string(k) + ": rho(G)=" +
                                   detail::fmt(own->rho.value) + " vs " +
                                   detail::fmt(rho_threshold));
            } else {
                rho_scan.offer(true, false, Confidence::Inconclusive,
                               "k=" + std::to_string(k) + ": eigensolver did not converge");
            }
            if (own->q.converged) {
                const auto cmp = detail::banded_at_least(own->q.value, q_threshold, opts);
                q_scan.offer(true, cmp.satisfied, cmp.confidence,
                             "k=" + std::to_string(k) + ": q(G)=" + detail::fmt(own->q.value) +
                                 " vs " + detail::fmt(q_threshold));
            } else {
                q_scan.offer(true, false, Confidence::Inconclusive,
                             "k=" + std::to_string(k) + ": eigensolver did not converge");
            }
        }
    }
    if (!rho_scan.applicable && !any_k) {
        const std::string why = delta < 2
                                    ? "needs min degree >= 2 (delta=" + std::to_string(delta) + ")"
                                    : "no k in [2,delta] with n > k(k+1)";
        rho_scan.detail = q_scan.detail = why;
    }
    return {detail::make_verdict(ConditionId::ClosedFormRho, rho_scan.applicable,
                                 rho_scan.satisfied, rho_scan.confidence, rho_scan.detail),
            detail::make_verdict(ConditionId::ClosedFormQ, q_scan.applicable, q_scan.satisfied,
                                 q_scan.confidence, q_scan.detail)};
}

// --------------------------------------------------------------------------
// Aggregate report

struct ConditionReport {
    int n = 0;
    int edge_count = 0;
    int min_degree = 0;
    std::optional<int> sigma;
    std::vector<int> degree_sequence; // ascending
    std::vector<Verdict> verdicts;
    std::optional<bool> oracle_weakly_hc;
    std::optional<std::pair<int, int>> oracle_failing_pair;

    bool any_certified() const {
        for (const auto& v : verdicts)
            if (v.certified_whc) return true;
        return false;
    }
};

class SoundnessViolation : public std::runtime_error {
public:
    explicit SoundnessViolation(ConditionReport report)
        : std::runtime_error(describe(report)), report_(std::move(report)) {}
    const ConditionReport& report() const { return report_; }

private:
    static std::string describe(const ConditionReport& r) {
        std::string ids;
        for (const auto& v : r.verdicts)
            if (v.certified_whc) ids += std::string(ids.empty() ? "" : ",") + condition_name(v.id);
        return "soundness violation: condition(s) [" + ids +
               "] certified a graph the oracle rejects";
    }
    ConditionReport report_;
};

inline std::vector<Verdict> evaluate_conditions(const BipartiteGraph& g,
                                                const std::vector<ConditionId>& which,
                                                const SpectralOptions& opts = {},
                                                FamilySpectrumCache* cache = nullptr) {
    std::optional<std::vector<Verdict>> spectral, closed;
    std::vector<Verdict> out;
    for (ConditionId id : which) {
        switch (id) {
            case ConditionId::PairSum: out.push_back(check_pair_sum(g)); break;
            case ConditionId::Gamma: out.push_back(check_gamma(g)); break;
            case ConditionId::DegreeCount: out.push_back(check_degree_count(g)); break;
            case ConditionId::ClosureComplete: out.push_back(check_closure_complete(g)); break;
            case ConditionId::DegreeSequence: out.push_back(check_degree_sequence(g)); break;
            case ConditionId::EdgeCountT: out.push_back(check_edge_count_t(g)); break;
            case ConditionId::EdgeCountK: out.push_back(check_edge_count_k(g)); break;
            case ConditionId::SpectralRho:
            case ConditionId::SpectralQ:
            case ConditionId::SpectralRhoComplement:
            case ConditionId::SpectralQComplement:
                if (!spectral) spectral = check_spectral(g, opts, cache);
                for (const auto& v : *spectral)
                    if (v.id == id) out.push_back(v);
                break;
            case ConditionId::ClosedFormRho:
            case ConditionId::ClosedFormQ:
                if (!closed) closed = check_spectral_closed(g, opts);
                for (const auto& v : *closed)
                    if (v.id == id) out.push_back(v);
                break;
        }
    }
    return out;
}

inline ConditionReport full_report(const BipartiteGraph& g, bool run_oracle,
                                   const SpectralOptions& opts = {},
                                   FamilySpectrumCache* cache = nullptr,
                                   const std::vector<ConditionId>* subset = nullptr,
                                   const std::atomic<bool>* cancel = nullptr) {
    ConditionReport report;
    report.n = g.balanced_n();
    report.edge_count = g.edge_count();
    report.min_degree = g.min_degree();
    report.sigma = g.sigma();
    report.degree_sequence = g.degree_sequence().all;

    const std::vector<ConditionId> all(kAllConditions.begin(), kAllConditions.end());
    report.verdicts = evaluate_conditions(g, subset ? *subset : all, opts, cache);

    if (run_oracle) {
        const OracleResult oracle = is_weakly_hc(g, false, HamiltonBackend::Auto, cancel);
        report.oracle_weakly_hc = oracle.weakly_hc;
        report.oracle_failing_pair = oracle.failing_pair;
        if (!oracle.weakly_hc && report.any_certified()) throw SoundnessViolation(report);
    }
    return report;
}

} // namespace whc
