// divergences.hpp — the Renyi-type divergence family built on Tr P_alpha and
// Tr Q_{alpha,z}, plus the alpha -> 1 limits (Umegaki, Belavkin-Staszewski)
// and the standard/maximal f-divergences.
//
// All logs are natural; every D is of the form
//   (alpha - 1)^{-1} log( Tr kernel(A,B) / Tr A ).

#pragma once

#include <cmath>
#include <optional>

#include "lmaj/majorization.hpp"
#include "lmaj/operators.hpp"

namespace lmaj {

inline constexpr double kDefaultDivTol = 1e-8;  // absolute, trace-normalized inputs

namespace detail {

inline double checked_trace_a(const HermitianMatrix& a) {
    const double tr = a.trace();
    if (!(tr > 0.0)) throw ZeroMatrix("divergence: Tr A must be positive");
    return tr;
}

inline void check_alpha(double alpha) {
    if (!(alpha > 0.0)) throw DomainError("divergence: alpha must be positive");
    if (alpha == 1.0) throw DomainError("divergence: alpha = 1; use umegaki/belavkin_staszewski");
}

}  // namespace detail

// D_{alpha,z}(A||B); z = 1 is the Petz divergence, z = alpha the sandwiched one.
inline double renyi_alpha_z(const HermitianMatrix& a, const HermitianMatrix& b, double alpha,
                            double z) {
    detail::check_alpha(alpha);
    const double tr_a = detail::checked_trace_a(a);
    const double tr_q = q_alpha_z(a, b, alpha, z).trace();
    if (!(tr_q > 0.0)) throw DomainError("divergence: Tr Q is not positive");
    return std::log(tr_q / tr_a) / (alpha - 1.0);
}

inline double renyi_petz(const HermitianMatrix& a, const HermitianMatrix& b, double alpha) {
    return renyi_alpha_z(a, b, alpha, 1.0);
}

inline double renyi_sandwiched(const HermitianMatrix& a, const HermitianMatrix& b, double alpha) {
    detail::check_alpha(alpha);
    return renyi_alpha_z(a, b, alpha, alpha);
}

// Maximal divergence: kernel Tr P_alpha(A,B).
inline double renyi_maximal(const HermitianMatrix& a, const HermitianMatrix& b, double alpha) {
    detail::check_alpha(alpha);
    const double tr_a = detail::checked_trace_a(a);
    const double tr_p = p_alpha(a, b, alpha).trace();
    if (!(tr_p > 0.0)) throw DomainError("divergence: Tr P is not positive");
    return std::log(tr_p / tr_a) / (alpha - 1.0);
}

// Tr A (log A - log B). A may be singular: 0 log 0 = 0 on A's spectrum.
inline double umegaki(const HermitianMatrix& a, const HermitianMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("umegaki: dimensions differ");
    detail::checked_trace_a(a);
    const SpectralDecomposition da = spectral_decompose(a);
    const double tau = psd_threshold(da.eigenvalues);
    double tr_a_log_a = 0.0;
    for (double lam : da.eigenvalues) {
        if (lam <= -tau) throw DomainError("umegaki: A is not positive semidefinite");
        if (lam > tau) tr_a_log_a += lam * std::log(lam);
    }
    const double tr_a_log_b = (a.raw() * matrix_log(b).raw()).trace().real();
    return tr_a_log_a - tr_a_log_b;
}

// Tr A log(A^{1/2} B^{-1} A^{1/2}); requires A > 0.
inline double belavkin_staszewski(const HermitianMatrix& a, const HermitianMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("belavkin_staszewski: dimensions differ");
    const SpectralDecomposition da = detail::decompose_pd(a, "belavkin_staszewski");
    const HermitianMatrix a_half = fractional_power(da, 0.5);
    const HermitianMatrix b_inv = fractional_power(detail::decompose_pd(b, "belavkin_staszewski"), -1.0);
    const HermitianMatrix core = matrix_log(sandwich(a_half, b_inv));
    return (a.raw() * core.raw()).trace().real();
}

// S_f(A||B) = sum_{i,j} b_j f(a_i / b_j) |<u_i, v_j>|^2 over the joint
// eigenbases of A and B (both positive definite).
template <typename F>
double standard_f_divergence(F&& f, const HermitianMatrix& a, const HermitianMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("standard_f_divergence: dimensions differ");
    const SpectralDecomposition da = detail::decompose_pd(a, "standard_f_divergence");
    const SpectralDecomposition db = detail::decompose_pd(b, "standard_f_divergence");
    const int n = a.dim();
    double acc = 0.0;
    for (int j = 0; j < n; ++j) {
        const double bj = db.eigenvalues[static_cast<std::size_t>(j)];
        for (int i = 0; i < n; ++i) {
            const double ai = da.eigenvalues[static_cast<std::size_t>(i)];
            cplx ip = 0.0;
            for (int r = 0; r < n; ++r)
                ip += std::conj(da.eigenvectors(r, i)) * db.eigenvectors(r, j);
            acc += bj * f(ai / bj) * std::norm(ip);
        }
    }
    return acc;
}

// \hat S_f(A||B) = Tr P_f(A,B).
template <typename F>
double maximal_f_divergence(F&& f, const HermitianMatrix& a, const HermitianMatrix& b) {
    return operator_perspective(std::forward<F>(f), a, b).trace();
}

struct DivergenceReport {
    double d_petz = 0.0;
    double d_sandwiched = 0.0;
    double d_maximal = 0.0;
    std::optional<double> d_alpha_z;
    double alpha = 0.0;
    std::optional<double> z;
    bool ordering_satisfied = false;
};

// Ordering of the three divergences:
//   0 < alpha <= 2:  sandwiched <= petz <= maximal
//   alpha >= 2:      sandwiched <= maximal <= petz
inline DivergenceReport divergence_ordering(const HermitianMatrix& a, const HermitianMatrix& b,
                                            double alpha, std::optional<double> z = std::nullopt,
                                            double tol = kDefaultDivTol) {
    DivergenceReport rep;
    rep.alpha = alpha;
    rep.z = z;
    rep.d_petz = renyi_petz(a, b, alpha);
    rep.d_sandwiched = renyi_sandwiched(a, b, alpha);
    rep.d_maximal = renyi_maximal(a, b, alpha);
    if (z) rep.d_alpha_z = renyi_alpha_z(a, b, alpha, *z);
    if (alpha <= 2.0) {
        rep.ordering_satisfied = rep.d_sandwiched <= rep.d_petz + tol &&
                                 rep.d_petz <= rep.d_maximal + tol;
    } else {
        rep.ordering_satisfied = rep.d_sandwiched <= rep.d_maximal + tol &&
                                 rep.d_maximal <= rep.d_petz + tol;
    }
    return rep;
}

}  // namespace lmaj
