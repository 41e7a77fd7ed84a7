// spectral.hpp — numerical spectral radius of the adjacency matrix and of the
// signless Laplacian D + A, via power iteration on a dense symmetric matrix.
//
// For the adjacency radius the iteration runs on the Gram matrix B B^T of the
// biadjacency block B: a bipartite adjacency spectrum is symmetric about 0,
// so its largest eigenvalue equals the largest singular value of B, and the
// Gram matrix is positive semidefinite with that value squared on top.
//
// The start vector is all-ones plus a small fixed pseudo-random offset, so a
// disconnected spectrum's top eigenspace always receives mass and runs are
// reproducible. If the residual has not met the tolerance by the iteration
// cap, the matrix is split into connected components and each is iterated
// separately (ties between identical components stall the global iteration).
#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "whc/bipartite_graph.hpp"
#include "whc/families.hpp"
#include "whc/prng.hpp"

namespace whc {

inline constexpr double kDefaultEigenTol = 1e-10;
inline constexpr long kPowerIterationCap = 100000;

struct EigenEstimate {
    double value = 0.0;
    long iterations = 0;
    double residual = 0.0;
    double tolerance = kDefaultEigenTol;
    bool converged = true;
};

namespace detail {

struct DenseSym {
    int dim = 0;
    std::vector<double> m; // row-major, dim*dim

    double& at(int i, int j) { return m[static_cast<std::size_t>(i) * dim + j]; }
    double at(int i, int j) const { return m[static_cast<std::size_t>(i) * dim + j]; }
};

inline DenseSym adjacency_gram(const BipartiteGraph& g) {
    // Use the smaller side; B B^T and B^T B share their nonzero spectrum.
    const bool use_x = g.part_x() <= g.part_y();
    const BipartiteGraph& h = g; // rows give X-side masks
    const int d = use_x ? h.part_x() : h.part_y();
    DenseSym out{d, std::vector<double>(static_cast<std::size_t>(d) * d, 0.0)};
    if (use_x) {
        for (int i = 0; i < d; ++i)
            for (int k = i; k < d; ++k) {
                const double v = static_cast<double>(std::popcount(h.row(i) & h.row(k)));
                out.at(i, k) = v;
                out.at(k, i) = v;
            }
    } else {
        for (int i = 0; i < d; ++i)
            for (int k = i; k < d; ++k) {
                const double v = static_cast<double>(std::popcount(h.column(i) & h.column(k)));
                out.at(i, k) = v;
                out.at(k, i) = v;
            }
    }
    return out;
}

inline DenseSym signless_laplacian(const BipartiteGraph& g) {
    const int a = g.part_x();
    const int d = a + g.part_y();
    DenseSym out{d, std::vector<double>(static_cast<std::size_t>(d) * d, 0.0)};
    for (int i = 0; i < a; ++i) out.at(i, i) = g.degree_x(i);
    for (int j = 0; j < g.part_y(); ++j) out.at(a + j, a + j) = g.degree_y(j);
    for (int i = 0; i < a; ++i) {
        auto r = g.row(i);
        while (r) {
            const int j = std::countr_zero(r);
            r &= r - 1;
            out.at(i, a + j) = 1.0;
            out.at(a + j, i) = 1.0;
        }
    }
    return out;
}

inline EigenEstimate power_iteration_raw(const DenseSym& mat, double tol, long cap) {
    EigenEstimate est;
    est.tolerance = tol;
    const int d = mat.dim;
    if (d == 0) return est;

    bool any_nonzero = false;
    for (double v : mat.m)
        if (v != 0.0) { any_nonzero = true; break; }
    if (!any_nonzero) return est; // zero matrix: eigenvalue 0 exactly

    SplitMix64 rng(0x5EC7A11CE5u);
    std::vector<double> v(static_cast<std::size_t>(d));
    for (auto& c : v) c = 1.0 + 1e-2 * rng.next_unit();
    double norm = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
    for (auto& c : v) c /= norm;

    std::vector<double> w(static_cast<std::size_t>(d));
    double theta = 0.0;
    for (long it = 1; it <= cap; ++it) {
        for (int i = 0; i < d; ++i) {
            double s = 0.0;
            for (int k = 0; k < d; ++k) s += mat.at(i, k) * v[static_cast<std::size_t>(k)];
            w[static_cast<std::size_t>(i)] = s;
        }
        theta = std::inner_product(v.begin(), v.end(), w.begin(), 0.0);
        double rr = 0.0;
        for (int i = 0; i < d; ++i) {
            const double diff = w[static_cast<std::size_t>(i)] - theta * v[static_cast<std::size_t>(i)];
            rr += diff * diff;
        }
        est.iterations = it;
        est.residual = std::sqrt(rr);
        if (est.residual <= tol) {
            est.value = theta;
            est.converged = true;
            return est;
        }
        const double wn = std::sqrt(std::inner_product(w.begin(), w.end(), w.begin(), 0.0));
        if (wn == 0.0) { // v landed exactly in the kernel; nudge and continue
            for (auto& c : v) c = 1.0 + 1e-2 * rng.next_unit();
            const double vn = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
            for (auto& c : v) c /= vn;
            continue;
        }
        for (int i = 0; i < d; ++i) v[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i)] / wn;
    }
    est.value = theta;
    est.converged = false;
    return est;
}

inline std::vector<int> component_labels(const DenseSym& mat) {
    std::vector<int> label(static_cast<std::size_t>(mat.dim), -1);
    int next = 0;
    std::vector<int> stack;
    for (int s = 0; s < mat.dim; ++s) {
        if (label[static_cast<std::size_t>(s)] != -1) continue;
        label[static_cast<std::size_t>(s)] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int k = 0; k < mat.dim; ++k)
                if (mat.at(u, k) != 0.0 && label[static_cast<std::size_t>(k)] == -1) {
                    label[static_cast<std::size_t>(k)] = next;
                    stack.push_back(k);
                }
        }
        ++next;
    }
    return label;
}

inline EigenEstimate power_iteration(const DenseSym& mat, double tol, long cap) {
    EigenEstimate est = power_iteration_raw(mat, tol, cap);
    if (est.converged) return est;

    // Equal top eigenvalues across components stall the whole-matrix
    // iteration; per component the dominant value is simple again.
    const auto label = component_labels(mat);
    int ncomp = 0;
    for (int l : label) ncomp = std::max(ncomp, l + 1);
    if (ncomp <= 1) return est;

    EigenEstimate best;
    best.tolerance = tol;
    best.iterations = est.iterations;
    best.converged = true;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<int> idx;
        for (int i = 0; i < mat.dim; ++i)
            if (label[static_cast<std::size_t>(i)] == c) idx.push_back(i);
        DenseSym sub{static_cast<int>(idx.size()),
                     std::vector<double>(idx.size() * idx.size(), 0.0)};
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t k = 0; k < idx.size(); ++k)
                sub.m[i * idx.size() + k] = mat.at(idx[i], idx[k]);
        EigenEstimate part = power_iteration_raw(sub, tol, cap);
        best.iterations += part.iterations;
        best.residual = std::max(best.residual, part.residual);
        best.converged = best.converged && part.converged;
        best.value = std::max(best.value, part.value);
    }
    return best;
}

} // namespace detail

// Largest adjacency eigenvalue. The estimate's residual bounds the error of
// the underlying Gram eigenvalue; the reported value is its square root.
inline EigenEstimate adjacency_spectral_radius(const BipartiteGraph& g,
                                               double tol = kDefaultEigenTol) {
    if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
    EigenEstimate est;
    est.tolerance = tol;
    if (g.edge_count() == 0) return est;
    const auto gram = detail::adjacency_gram(g);
    EigenEstimate inner = detail::power_iteration(gram, tol, kPowerIterationCap);
    est.iterations = inner.iterations;
    est.converged = inner.converged;
    est.value = std::sqrt(std::max(inner.value, 0.0));
    // |sqrt(t) - sqrt(l)| <= |t - l| / (2 sqrt(max)); nonzero radius is >= 1.
    est.residual = est.value >= 1.0 ? inner.residual / (2.0 * est.value) : inner.residual;
    return est;
}

inline EigenEstimate signless_laplacian_spectral_radius(const BipartiteGraph& g,
                                                        double tol = kDefaultEigenTol) {
    if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
    EigenEstimate est;
    est.tolerance = tol;
    if (g.edge_count() == 0) return est; // D + A vanishes
    const auto q = detail::signless_laplacian(g);
    return detail::power_iteration(q, tol, kPowerIterationCap);
}

struct SpectralSummary {
    EigenEstimate rho;
    EigenEstimate q;
    bool converged() const { return rho.converged && q.converged; }
};

inline SpectralSummary spectral_summary(const BipartiteGraph& g,
                                        double tol = kDefaultEigenTol) {
    return {adjacency_spectral_radius(g, tol), signless_laplacian_spectral_radius(g, tol)};
}

// ---------------------------------------------------------------------------
// Closed forms for the families (exact where known, strict lower bounds for
// Q_n^t itself, none for R/S).

enum class ClosedFormKind { None, Exact, StrictLowerBound };

struct ClosedFormValue {
    ClosedFormKind kind = ClosedFormKind::None;
    double value = 0.0;
};

struct ClosedFormReference {
    ClosedFormValue rho;
    ClosedFormValue q;
};

inline ClosedFormReference closed_form_reference(const FamilySpec& spec,
                                                 bool quasi_complement = false) {
    validate_family(spec);
    const double n = spec.n;
    const double t = spec.t;
    ClosedFormReference out;
    if (quasi_complement) {
        switch (spec.family) {
            case Family::K: // complement of a complete graph is edgeless
                out.rho = {ClosedFormKind::Exact, 0.0};
                out.q = {ClosedFormKind::Exact, 0.0};
                return out;
            case Family::Q:
            case Family::R:
            case Family::S:
                out.rho = {ClosedFormKind::Exact, std::sqrt((t - 1) * (n - t))};
                out.q = {ClosedFormKind::Exact, n - 1};
                return out;
        }
    }
    switch (spec.family) {
        case Family::K:
            out.rho = {ClosedFormKind::Exact, std::sqrt(static_cast<double>(spec.m) * n)};
            out.q = {ClosedFormKind::Exact, static_cast<double>(spec.m) + n};
            return out;
        case Family::Q:
            out.rho = {ClosedFormKind::StrictLowerBound, std::sqrt(n * (n - t + 1))};
            out.q = {ClosedFormKind::StrictLowerBound, 2 * n - t + 1};
            return out;
        case Family::R:
        case Family::S:
            return out; // no closed form
    }
    return out;
}

// ---------------------------------------------------------------------------
// The four general bounds checked against the computed values:
//   rho <= sqrt(e)                    (any bipartite graph)
//   q   <= e/n + n                    (balanced graphs)
//   rho >= min over edges sqrt(d(u) d(v))
//   q   >= min over edges d(u) + d(v)

struct BoundCheck {
    bool applicable = false;
    double bound = 0.0;
    bool holds = true;
};

struct SpectralBoundsReport {
    SpectralSummary summary;
    BoundCheck rho_upper_sqrt_edges;
    BoundCheck q_upper_edges_over_n;
    BoundCheck rho_lower_min_edge;
    BoundCheck q_lower_min_edge;
};

inline SpectralBoundsReport spectral_bounds_report(const BipartiteGraph& g,
                                                   double tol = kDefaultEigenTol) {
    SpectralBoundsReport rep;
    rep.summary = spectral_summary(g, tol);
    const double rho = rep.summary.rho.value;
    const double q = rep.summary.q.value;
    const double e = g.edge_count();
    const auto slack = [](double bound) { return 1e-8 * std::max(1.0, std::abs(bound)); };

    rep.rho_upper_sqrt_edges.applicable = true;
    rep.rho_upper_sqrt_edges.bound = std::sqrt(e);
    rep.rho_upper_sqrt_edges.holds =
        rho <= rep.rho_upper_sqrt_edges.bound + slack(rep.rho_upper_sqrt_edges.bound);

    if (g.balanced() && g.part_x() > 0) {
        rep.q_upper_edges_over_n.applicable = true;
        rep.q_upper_edges_over_n.bound = e / g.part_x() + g.part_x();
        rep.q_upper_edges_over_n.holds =
            q <= rep.q_upper_edges_over_n.bound + slack(rep.q_upper_edges_over_n.bound);
    }

    if (g.edge_count() > 0) {
        double min_prod = -1.0, min_sum = -1.0;
        for (const auto& [i, j] : g.edges()) {
            const double p = static_cast<double>(g.degree_x(i)) * g.degree_y(j);
            const double s = static_cast<double>(g.degree_x(i)) + g.degree_y(j);
            if (min_prod < 0 || p < min_prod) min_prod = p;
            if (min_sum < 0 || s < min_sum) min_sum = s;
        }
        rep.rho_lower_min_edge.applicable = true;
        rep.rho_lower_min_edge.bound = std::sqrt(min_prod);
        rep.rho_lower_min_edge.holds =
            rho >= rep.rho_lower_min_edge.bound - slack(rep.rho_lower_min_edge.bound);

        rep.q_lower_min_edge.applicable = true;
        rep.q_lower_min_edge.bound = min_sum;
        rep.q_lower_min_edge.holds =
            q >= rep.q_lower_min_edge.bound - slack(rep.q_lower_min_edge.bound);
    }
    return rep;
}

} // namespace whc
