// spectral.hpp — scalar calculus of Hermitian matrices: f(M) = U f(diag) U*.
//
// PSD handling follows one fixed floor: tau_psd = 1e-12 * max(1, lambda_max).
// Eigenvalues in (-tau, tau] clamp to 0 for nonnegative powers; anything more
// negative is treated as genuinely indefinite.

#pragma once

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "lmaj/eigen.hpp"
#include "lmaj/matrix.hpp"

namespace lmaj {

enum class PsdTag { PositiveDefinite, PositiveSemidefinite, Indefinite };

struct PsdClass {
    PsdTag tag;
    double min_eigenvalue;
};

inline double psd_threshold(const std::vector<double>& eigs_desc) {
    const double lmax = eigs_desc.empty() ? 0.0 : eigs_desc.front();
    return 1e-12 * std::max(1.0, lmax);
}

inline PsdClass classify_psd(const SpectralDecomposition& d) {
    const double tau = psd_threshold(d.eigenvalues);
    const double lmin = d.eigenvalues.back();
    if (lmin > tau) return {PsdTag::PositiveDefinite, lmin};
    if (lmin > -tau) return {PsdTag::PositiveSemidefinite, lmin};
    return {PsdTag::Indefinite, lmin};
}

inline PsdClass classify_psd(const HermitianMatrix& m) { return classify_psd(spectral_decompose(m)); }

template <typename F>
HermitianMatrix apply_spectral_function(const SpectralDecomposition& d, F&& f) {
    std::vector<double> mapped(d.eigenvalues.size());
    for (std::size_t i = 0; i < mapped.size(); ++i) mapped[i] = f(d.eigenvalues[i]);
    return HermitianMatrix(d.assemble(mapped));
}

template <typename F>
HermitianMatrix apply_spectral_function(const HermitianMatrix& m, F&& f) {
    return apply_spectral_function(spectral_decompose(m), std::forward<F>(f));
}

// Domain-checked variant: `in_domain` vets every eigenvalue before f runs.
template <typename F, typename P>
HermitianMatrix apply_spectral_function(const HermitianMatrix& m, F&& f, P&& in_domain) {
    const SpectralDecomposition d = spectral_decompose(m);
    for (double lam : d.eigenvalues)
        if (!in_domain(lam)) throw DomainError("eigenvalue outside the domain of the scalar map");
    return apply_spectral_function(d, std::forward<F>(f));
}

namespace detail {

// Eigenvalues clamped for PSD use; throws if the matrix is indefinite.
inline std::vector<double> clamped_psd_eigs(const SpectralDecomposition& d, const char* who) {
    const double tau = psd_threshold(d.eigenvalues);
    std::vector<double> eigs = d.eigenvalues;
    for (double& lam : eigs) {
        if (lam <= -tau) throw DomainError(std::string(who) + ": matrix is not positive semidefinite");
        if (lam <= tau) lam = 0.0;
    }
    return eigs;
}

}  // namespace detail

inline HermitianMatrix fractional_power(const SpectralDecomposition& d, double p) {
    if (p >= 0.0) {
        std::vector<double> eigs = detail::clamped_psd_eigs(d, "fractional_power");
        for (double& lam : eigs) lam = (lam == 0.0) ? (p == 0.0 ? 1.0 : 0.0) : std::pow(lam, p);
        return HermitianMatrix(d.assemble(eigs));
    }
    const double tau = psd_threshold(d.eigenvalues);
    if (d.eigenvalues.back() <= tau)
        throw SingularPower("negative power of a singular matrix");
    std::vector<double> eigs = d.eigenvalues;
    for (double& lam : eigs) lam = std::pow(lam, p);
    return HermitianMatrix(d.assemble(eigs));
}

inline HermitianMatrix fractional_power(const HermitianMatrix& m, double p) {
    return fractional_power(spectral_decompose(m), p);
}

inline HermitianMatrix matrix_log(const HermitianMatrix& m) {
    const SpectralDecomposition d = spectral_decompose(m);
    if (d.eigenvalues.back() <= psd_threshold(d.eigenvalues))
        throw SingularPower("matrix_log requires a positive definite input");
    std::vector<double> eigs = d.eigenvalues;
    for (double& lam : eigs) lam = std::log(lam);
    return HermitianMatrix(d.assemble(eigs));
}

inline HermitianMatrix matrix_exp(const HermitianMatrix& h) {
    return apply_spectral_function(h, [](double t) { return std::exp(t); });
}

}  // namespace lmaj
