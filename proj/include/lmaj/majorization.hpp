// majorization.hpp — log-/weak-majorization verdicts and unitarily invariant
// norms (Ky Fan family, Schatten p).
//
// Prefix products are compared in log scale with an eigenvalue floor of
// 1e-300: eigenvalues clamp to [0, inf) first, and any prefix containing a
// floored value compares as -inf (<= anything).

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "lmaj/eigen.hpp"
#include "lmaj/matrix.hpp"

namespace lmaj {

inline constexpr double kDefaultMajTol = 1e-9;   // log-scale prefix tolerance
inline constexpr double kDefaultDetTol = 1e-7;   // log-scale determinant gap tolerance
inline constexpr double kEigFloor = 1e-300;

struct PrefixComparison {
    double lhs;     // log prefix product of X (may be -inf)
    double rhs;     // log prefix product of Y (may be -inf)
    double margin;  // rhs - lhs; >= -tol means "<= holds at this k"
};

struct MajorizationVerdict {
    bool holds = false;
    std::vector<PrefixComparison> per_k;  // k = 1..n
    double det_gap = 0.0;                 // |log det X - log det Y|
    double tol_used = kDefaultMajTol;

    double worst_margin() const {
        double w = std::numeric_limits<double>::infinity();
        for (const auto& p : per_k) w = std::min(w, p.margin);
        return w;
    }
};

// Eigenvalues of a PSD matrix in decreasing order, clamped to [0, inf).
inline std::vector<double> eigen_desc(const HermitianMatrix& m) {
    std::vector<double> eigs = spectral_decompose(m).eigenvalues;
    for (double& lam : eigs) lam = std::max(lam, 0.0);
    return eigs;
}

namespace detail {

inline std::vector<double> log_prefix_sums(const std::vector<double>& eigs_desc) {
    std::vector<double> out(eigs_desc.size());
    double acc = 0.0;
    bool floored = false;
    for (std::size_t i = 0; i < eigs_desc.size(); ++i) {
        if (eigs_desc[i] < kEigFloor) floored = true;
        if (!floored) acc += std::log(eigs_desc[i]);
        out[i] = floored ? -std::numeric_limits<double>::infinity() : acc;
    }
    return out;
}

inline double inf_aware_diff(double rhs, double lhs) {
    const bool li = std::isinf(lhs), ri = std::isinf(rhs);
    if (li && ri) return 0.0;
    if (li) return std::numeric_limits<double>::infinity();
    if (ri) return -std::numeric_limits<double>::infinity();
    return rhs - lhs;
}

inline MajorizationVerdict majorization_verdict(const HermitianMatrix& x, const HermitianMatrix& y,
                                                double tol, bool require_det) {
    if (x.dim() != y.dim()) throw DimensionMismatch("majorization: dimensions differ");
    const std::vector<double> px = log_prefix_sums(eigen_desc(x));
    const std::vector<double> py = log_prefix_sums(eigen_desc(y));

    MajorizationVerdict v;
    v.tol_used = tol;
    v.per_k.resize(px.size());
    bool ok = true;
    for (std::size_t k = 0; k < px.size(); ++k) {
        const double margin = inf_aware_diff(py[k], px[k]);
        v.per_k[k] = {px[k], py[k], margin};
        if (!(margin >= -tol)) ok = false;
    }
    const double dx = px.back(), dy = py.back();
    v.det_gap = (std::isinf(dx) && std::isinf(dy)) ? 0.0 : std::abs(dx - dy);
    if (require_det && !(v.det_gap <= kDefaultDetTol)) ok = false;
    v.holds = ok;
    return v;
}

}  // namespace detail

// X prec_log Y: prefix products of eigenvalues dominated at every k, with
// equal determinants (det gap <= 1e-7 in log scale).
inline MajorizationVerdict log_majorizes(const HermitianMatrix& x, const HermitianMatrix& y,
                                         double tol = kDefaultMajTol) {
    return detail::majorization_verdict(x, y, tol, true);
}

// Prefix-only relaxation (no determinant condition); usable for singular input.
inline MajorizationVerdict weak_log_majorizes(const HermitianMatrix& x, const HermitianMatrix& y,
                                              double tol = kDefaultMajTol) {
    return detail::majorization_verdict(x, y, tol, false);
}

namespace detail {

inline std::vector<double> singular_values_desc(const HermitianMatrix& m) {
    std::vector<double> s = spectral_decompose(m).eigenvalues;
    for (double& v : s) v = std::abs(v);
    std::sort(s.begin(), s.end(), std::greater<>());
    return s;
}

}  // namespace detail

// Sum of the k largest singular values.
inline double ky_fan_norm(const HermitianMatrix& m, int k) {
    if (k < 1 || k > m.dim()) throw DomainError("ky_fan_norm: k out of range");
    const std::vector<double> s = detail::singular_values_desc(m);
    double acc = 0.0;
    for (int i = 0; i < k; ++i) acc += s[static_cast<std::size_t>(i)];
    return acc;
}

inline double schatten_norm(const HermitianMatrix& m, double p) {
    if (!(p >= 1.0)) throw DomainError("schatten_norm: p must be >= 1");
    const std::vector<double> s = detail::singular_values_desc(m);
    if (std::isinf(p)) return s.front();
    double acc = 0.0;
    for (double v : s) acc += std::pow(v, p);
    return std::pow(acc, 1.0 / p);
}

inline double trace_norm(const HermitianMatrix& m) { return ky_fan_norm(m, m.dim()); }
inline double op_norm(const HermitianMatrix& m) { return ky_fan_norm(m, 1); }

struct NormDominanceReport {
    bool all_ordered = true;
    double worst_margin = std::numeric_limits<double>::infinity();
    std::vector<double> ky_fan_lhs;
    std::vector<double> ky_fan_rhs;
};

// Ky Fan dominance: given X prec_w Y (eigenvalue partial sums), every Ky Fan
// norm of X must not exceed that of Y. Margins are ||Y||_(k) - ||X||_(k).
inline NormDominanceReport weak_majorization_implies_norms(const HermitianMatrix& x,
                                                           const HermitianMatrix& y,
                                                           double tol = kDefaultMajTol) {
    if (x.dim() != y.dim()) throw DimensionMismatch("norm dominance: dimensions differ");
    NormDominanceReport rep;
    const int n = x.dim();
    for (int k = 1; k <= n; ++k) {
        const double lx = ky_fan_norm(x, k);
        const double ly = ky_fan_norm(y, k);
        rep.ky_fan_lhs.push_back(lx);
        rep.ky_fan_rhs.push_back(ly);
        const double margin = ly - lx;
        rep.worst_margin = std::min(rep.worst_margin, margin);
        if (!(margin >= -tol * std::max(1.0, ly))) rep.all_ordered = false;
    }
    return rep;
}

}  // namespace lmaj
