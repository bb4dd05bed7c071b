// operators.hpp — the two-variable matrix functions under study.
//
//   P_alpha(A,B)   = B^{1/2} (B^{-1/2} A B^{-1/2})^alpha B^{1/2}
//   Q_{alpha,z}(A,B) = (B^{(1-alpha)/2z} A^{alpha/z} B^{(1-alpha)/2z})^z
//   P_{alpha,r}(A,B) = P_alpha(A^{1/r}, B^{1/r})^r
//
// plus the operator-perspective generalization of P, the weighted geometric
// mean B #_alpha A (= P_alpha for 0 < alpha < 1), the log-Euclidean mix
// exp(alpha log A + (1-alpha) log B), and the symmetrized word products
// behind the extended Araki relation ((AB)^m A)^r vs (A^r B^r)^m A^r.

#pragma once

#include <cmath>
#include <utility>

#include "lmaj/matrix.hpp"
#include "lmaj/spectral.hpp"

namespace lmaj {

// Parameter bundle for the (alpha, z, r) family. alpha = 1 is excluded here;
// P and Q themselves are still defined at alpha = 1 (both reduce to A).
struct AlphaZ {
    double alpha;
    double z;
    double r;

    explicit AlphaZ(double alpha_, double z_, double r_ = 1.0) : alpha(alpha_), z(z_), r(r_) {
        if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
        if (alpha == 1.0) throw DomainError("alpha = 1 is excluded");
        if (!(z > 0.0)) throw DomainError("z must be positive");
        if (!(r > 0.0)) throw DomainError("r must be positive");
    }
};

namespace detail {

inline SpectralDecomposition decompose_pd(const HermitianMatrix& b, const char* who) {
    SpectralDecomposition d = spectral_decompose(b);
    if (d.eigenvalues.back() <= psd_threshold(d.eigenvalues))
        throw SingularPower(std::string(who) + ": matrix argument must be positive definite");
    return d;
}

}  // namespace detail

inline HermitianMatrix p_alpha(const HermitianMatrix& a, const HermitianMatrix& b, double alpha) {
    if (!(alpha > 0.0)) throw DomainError("p_alpha: alpha must be positive");
    if (a.dim() != b.dim()) throw DimensionMismatch("p_alpha: dimensions differ");
    const SpectralDecomposition db = detail::decompose_pd(b, "p_alpha");
    const HermitianMatrix b_half = fractional_power(db, 0.5);
    const HermitianMatrix b_minus_half = fractional_power(db, -0.5);
    const HermitianMatrix inner = fractional_power(sandwich(b_minus_half, a), alpha);
    return sandwich(b_half, inner);
}

// (F-2.7) route: A^{1/2} (A^{1/2} B^{-1} A^{1/2})^{alpha-1} A^{1/2}.
// Needs A > 0 as well, since alpha - 1 may be negative.
inline HermitianMatrix p_alpha_alt(const HermitianMatrix& a, const HermitianMatrix& b, double alpha) {
    if (!(alpha > 0.0)) throw DomainError("p_alpha_alt: alpha must be positive");
    if (a.dim() != b.dim()) throw DimensionMismatch("p_alpha_alt: dimensions differ");
    const SpectralDecomposition da = detail::decompose_pd(a, "p_alpha_alt");
    const SpectralDecomposition db = detail::decompose_pd(b, "p_alpha_alt");
    const HermitianMatrix a_half = fractional_power(da, 0.5);
    const HermitianMatrix b_inv = fractional_power(db, -1.0);
    const HermitianMatrix inner = fractional_power(sandwich(a_half, b_inv), alpha - 1.0);
    return sandwich(a_half, inner);
}

inline HermitianMatrix q_alpha_z(const HermitianMatrix& a, const HermitianMatrix& b, double alpha,
                                 double z) {
    if (!(alpha > 0.0)) throw DomainError("q_alpha_z: alpha must be positive");
    if (!(z > 0.0)) throw DomainError("q_alpha_z: z must be positive");
    if (a.dim() != b.dim()) throw DimensionMismatch("q_alpha_z: dimensions differ");
    const SpectralDecomposition db = detail::decompose_pd(b, "q_alpha_z");
    const HermitianMatrix b_outer = fractional_power(db, (1.0 - alpha) / (2.0 * z));
    const HermitianMatrix a_pow = fractional_power(a, alpha / z);
    return fractional_power(sandwich(b_outer, a_pow), z);
}

inline HermitianMatrix p_alpha_r(const HermitianMatrix& a, const HermitianMatrix& b, double alpha,
                                 double r) {
    if (!(r > 0.0)) throw DomainError("p_alpha_r: r must be positive");
    if (r == 1.0) return p_alpha(a, b, alpha);
    return fractional_power(
        p_alpha(fractional_power(a, 1.0 / r), fractional_power(b, 1.0 / r), alpha), r);
}

// B #_alpha A for alpha in [0, 1].
inline HermitianMatrix weighted_geometric_mean(const HermitianMatrix& b, const HermitianMatrix& a,
                                               double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw DomainError("weighted_geometric_mean: alpha must lie in [0, 1]");
    if (alpha == 0.0) return b;
    if (alpha == 1.0) return a;
    return p_alpha(a, b, alpha);
}

// P_f(A,B) = B^{1/2} f(B^{-1/2} A B^{-1/2}) B^{1/2}
template <typename F>
HermitianMatrix operator_perspective(F&& f, const HermitianMatrix& a, const HermitianMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("operator_perspective: dimensions differ");
    const SpectralDecomposition db = detail::decompose_pd(b, "operator_perspective");
    const HermitianMatrix b_half = fractional_power(db, 0.5);
    const HermitianMatrix b_minus_half = fractional_power(db, -0.5);
    const HermitianMatrix inner =
        apply_spectral_function(sandwich(b_minus_half, a), std::forward<F>(f));
    return sandwich(b_half, inner);
}

// exp(alpha log A + (1-alpha) log B); the z -> infinity Lie-Trotter limit of Q.
inline HermitianMatrix log_euclidean_mix(const HermitianMatrix& a, const HermitianMatrix& b,
                                         double alpha) {
    if (a.dim() != b.dim()) throw DimensionMismatch("log_euclidean_mix: dimensions differ");
    return matrix_exp(alpha * matrix_log(a) + (1.0 - alpha) * matrix_log(b));
}

// Hermitian representatives of the word products ((AB)^m A)^r and
// (A^r B^r)^m A^r. The telescoping A^{1/2}(A^{1/2} B A^{1/2})^m A^{1/2}
// equals (AB)^m A exactly, so both come out Hermitian PSD with the same
// spectra as the plain products.
inline std::pair<HermitianMatrix, HermitianMatrix> word_products(const HermitianMatrix& a,
                                                                 const HermitianMatrix& b, int m,
                                                                 double r) {
    if (m < 1) throw DomainError("word_products: m must be >= 1");
    if (!(r >= 1.0)) throw DomainError("word_products: r must be >= 1");
    if (a.dim() != b.dim()) throw DimensionMismatch("word_products: dimensions differ");

    const auto symmetric_word = [m](const HermitianMatrix& x, const HermitianMatrix& y) {
        // x^{1/2} (x^{1/2} y x^{1/2})^m x^{1/2} = (xy)^m x
        const HermitianMatrix x_half = fractional_power(x, 0.5);
        const HermitianMatrix core = sandwich(x_half, y);
        Matrix pow = core.raw();
        for (int i = 1; i < m; ++i) pow = pow * core.raw();
        return sandwich(x_half, HermitianMatrix(pow));
    };

    const HermitianMatrix lhs = fractional_power(symmetric_word(a, b), r);
    const HermitianMatrix rhs = symmetric_word(fractional_power(a, r), fractional_power(b, r));
    return {lhs, rhs};
}

}  // namespace lmaj
