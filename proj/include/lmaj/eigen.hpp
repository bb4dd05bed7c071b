// eigen.hpp — cyclic Jacobi eigensolver for complex Hermitian matrices.
//
// Deterministic and dependency-free: the same input bits always produce the
// same decomposition. Converges when the off-diagonal Frobenius norm drops
// below 1e-13 * max(1, ||M||_F); budget 60 sweeps, else NonConvergence.

#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "lmaj/matrix.hpp"

namespace lmaj {

struct SpectralDecomposition {
    std::vector<double> eigenvalues;  // sorted descending
    Matrix eigenvectors;              // unitary; column i pairs with eigenvalues[i]

    int dim() const { return eigenvectors.dim(); }

    // U * diag(f(lambda)) * U* for a scalar map already applied to `values`.
    Matrix assemble(const std::vector<double>& values) const {
        const int n = dim();
        Matrix r(n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                cplx s = 0.0;
                for (int k = 0; k < n; ++k)
                    s += eigenvectors(i, k) * values[static_cast<std::size_t>(k)] *
                         std::conj(eigenvectors(j, k));
                r(i, j) = s;
            }
        }
        return r;
    }
};

namespace detail {

inline double offdiag_frobenius(const Matrix& a) {
    const int n = a.dim();
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

// One two-sided complex rotation annihilating a(p,q). Updates a in place and
// accumulates the rotation into u (columns of u are the eigenvector estimates).
inline void jacobi_rotate(Matrix& a, Matrix& u, int p, int q) {
    const cplx m = a(p, q);
    const double absm = std::abs(m);
    if (absm < 1e-300) return;

    const cplx phase = m / absm;  // e^{i phi}
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double kappa = (app - aqq) / (2.0 * absm);
    double t;
    if (kappa == 0.0) {
        t = 1.0;
    } else {
        t = (kappa > 0.0 ? 1.0 : -1.0) / (std::abs(kappa) + std::sqrt(kappa * kappa + 1.0));
    }
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    const int n = a.dim();
    // Row update with J*: row_p' = c*row_p + s*conj(phase)'... (J* = [[c, s e^{i phi}],[-s e^{-i phi}, c]])
    for (int j = 0; j < n; ++j) {
        const cplx ap = a(p, j);
        const cplx aq = a(q, j);
        a(p, j) = c * ap + s * phase * aq;
        a(q, j) = -s * std::conj(phase) * ap + c * aq;
    }
    // Column update with J: col_p' = c*col_p + s*e^{-i phi} col_q.
    for (int i = 0; i < n; ++i) {
        const cplx ap = a(i, p);
        const cplx aq = a(i, q);
        a(i, p) = c * ap + s * std::conj(phase) * aq;
        a(i, q) = -s * phase * ap + c * aq;
        const cplx up = u(i, p);
        const cplx uq = u(i, q);
        u(i, p) = c * up + s * std::conj(phase) * uq;
        u(i, q) = -s * phase * up + c * uq;
    }
    // Clean the annihilated pair against rounding drift.
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = cplx(a(p, p).real(), 0.0);
    a(q, q) = cplx(a(q, q).real(), 0.0);
}

}  // namespace detail

inline SpectralDecomposition spectral_decompose(const HermitianMatrix& h) {
    const int n = h.dim();
    Matrix a = h.raw();
    Matrix u = Matrix::identity(n);

    const double threshold = 1e-13 * std::max(1.0, a.frobenius_norm());
    constexpr int kMaxSweeps = 60;

    bool converged = (n == 1);
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        if (detail::offdiag_frobenius(a) <= threshold) {
            converged = true;
            break;
        }
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) detail::jacobi_rotate(a, u, p, q);
    }
    if (!converged && detail::offdiag_frobenius(a) > threshold)
        throw NonConvergence("jacobi eigensolver did not converge within 60 sweeps");

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a(i, i).real() > a(j, j).real(); });

    SpectralDecomposition d;
    d.eigenvalues.resize(static_cast<std::size_t>(n));
    d.eigenvectors = Matrix(n);
    for (int k = 0; k < n; ++k) {
        d.eigenvalues[static_cast<std::size_t>(k)] = a(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(k)]).real();
        for (int i = 0; i < n; ++i) d.eigenvectors(i, k) = u(i, order[static_cast<std::size_t>(k)]);
    }
    return d;
}

}  // namespace lmaj
