// perturbation.hpp — the closed-form 2x2 rotation family and the second-order
// trace expansion coefficients that decide log-majorization near theta = 0.
//
//   A_theta = R_theta diag(1, x) R_theta^T,  B = diag(1, y)
//
//   Tr P_alpha(A_theta, B)    = 1 + x^alpha y^{1-alpha} + (s1 + s2 y) theta^2 + o(theta^2)
//   Tr Q_{alpha,z}(A_theta,B) = 1 + x^alpha y^{1-alpha} + cQ theta^2 + o(theta^2)
//
// with
//   s1 = alpha(x-1) + (x-1)^2 {(alpha-1) y - alpha x + x^alpha y^{1-alpha}} / (x-y)^2
//   s2 = alpha x^{alpha-1}(1-x) y^{-alpha}
//        + (x-1)^2 {y - alpha x^{alpha-1} y^{2-alpha} + (alpha-1) x^alpha y^{1-alpha}} / (x-y)^2
//   cQ = z (x^{alpha/z}-1)(1-y^{(1-alpha)/z})(1-x^alpha y^{1-alpha}) / (1-x^{alpha/z} y^{(1-alpha)/z})
//
// Both matrices keep determinant independent of theta, so in this 2x2 family
// a trace comparison is equivalent to the log-majorization verdict.

#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <utility>

#include "lmaj/matrix.hpp"
#include "lmaj/operators.hpp"

namespace lmaj {

struct FamilyParams {
    double x;
    double y;
    double theta;

    FamilyParams(double x_, double y_, double theta_) : x(x_), y(y_), theta(theta_) {
        if (!(x > 0.0) || !(y > 0.0)) throw DomainError("family: x and y must be positive");
        if (std::abs(x - y) <= 1e-6 * std::max(x, y))
            throw DomainError("family: x and y must be separated (relative gap > 1e-6)");
    }
};

struct ExpansionCoeffs {
    double s1 = 0.0;
    double s2 = 0.0;
    double cP = 0.0;  // s1 + s2 * y
    double cQ = 0.0;
};

inline std::pair<HermitianMatrix, HermitianMatrix> family_matrices(const FamilyParams& p) {
    const double c = std::cos(p.theta), s = std::sin(p.theta);
    // R diag(1,x) R^T
    Matrix a(2);
    a(0, 0) = c * c + p.x * s * s;
    a(0, 1) = (1.0 - p.x) * c * s;
    a(1, 0) = (1.0 - p.x) * c * s;
    a(1, 1) = s * s + p.x * c * c;
    return {HermitianMatrix(a), HermitianMatrix::diagonal({1.0, p.y})};
}

namespace detail {

inline void check_family_scalars(double alpha, double x, double y) {
    if (!(alpha > 1.0)) throw DomainError("expansion coefficients require alpha > 1");
    if (!(x > 0.0) || !(y > 0.0)) throw DomainError("x and y must be positive");
    if (std::abs(x - y) <= 1e-6 * std::max(x, y))
        throw DomainError("x and y must be separated (relative gap > 1e-6)");
}

}  // namespace detail

inline ExpansionCoeffs coeff_P(double alpha, double x, double y) {
    detail::check_family_scalars(alpha, x, y);
    const double xm1 = x - 1.0;
    const double gap2 = (x - y) * (x - y);
    const double xay1a = std::pow(x, alpha) * std::pow(y, 1.0 - alpha);
    ExpansionCoeffs c;
    c.s1 = alpha * xm1 + xm1 * xm1 * ((alpha - 1.0) * y - alpha * x + xay1a) / gap2;
    c.s2 = alpha * std::pow(x, alpha - 1.0) * (1.0 - x) * std::pow(y, -alpha) +
           xm1 * xm1 *
               (y - alpha * std::pow(x, alpha - 1.0) * std::pow(y, 2.0 - alpha) +
                (alpha - 1.0) * xay1a) /
               gap2;
    c.cP = c.s1 + c.s2 * y;
    return c;
}

// Second-order coefficient of Tr Q_{alpha,z}(A_theta, B). Defined whenever
// x^{alpha/z} y^{(1-alpha)/z} != 1 (equivalently x^alpha y^{1-alpha} != 1):
// the two perturbed eigenvalues swap roles across that curve but their
// z-power sum keeps the same closed form.
inline double coeff_Q(double alpha, double z, double x, double y) {
    detail::check_family_scalars(alpha, x, y);
    if (!(z > 0.0)) throw DomainError("coeff_Q: z must be positive");
    const double w = std::pow(x, alpha / z) * std::pow(y, (1.0 - alpha) / z);
    if (std::abs(1.0 - w) <= 1e-9 * (1.0 + w))
        throw DomainError("coeff_Q: x^alpha y^{1-alpha} = 1 is a removable singularity of the expansion");
    const double k = (std::pow(x, alpha / z) - 1.0) * (1.0 - std::pow(y, (1.0 - alpha) / z));
    const double xay1a = std::pow(x, alpha) * std::pow(y, 1.0 - alpha);
    return z * k * (1.0 - xay1a) / (1.0 - w);
}

// Divided differences of t^alpha on 2 or 3 positive nodes, with confluent
// limits ((t^alpha)^{[1]}(a,a) = alpha a^{alpha-1}, etc).
inline double divided_diff_power(double alpha, std::span<const double> nodes) {
    for (double t : nodes)
        if (!(t > 0.0)) throw DomainError("divided_diff_power: nodes must be positive");

    const auto f = [alpha](double t) { return std::pow(t, alpha); };
    const auto df = [alpha](double t) { return alpha * std::pow(t, alpha - 1.0); };
    const auto close = [](double a, double b) {
        return std::abs(a - b) <= 1e-7 * std::max(std::abs(a), std::abs(b));
    };
    const auto dd1 = [&](double a, double b) {
        if (close(a, b)) return df(0.5 * (a + b));
        return (f(a) - f(b)) / (a - b);
    };

    if (nodes.size() == 2) return dd1(nodes[0], nodes[1]);
    if (nodes.size() != 3) throw DomainError("divided_diff_power: need 2 or 3 nodes");

    double a = nodes[0], b = nodes[1], c = nodes[2];
    // Order so that equal nodes cluster at the front; the value is symmetric.
    if (close(a, c) && !close(a, b)) std::swap(b, c);
    if (close(b, c) && !close(a, b)) std::swap(a, c);
    if (close(a, b)) {
        if (close(a, c)) {  // all three confluent: f''(m)/2
            const double m = (a + b + c) / 3.0;
            return 0.5 * alpha * (alpha - 1.0) * std::pow(m, alpha - 2.0);
        }
        const double m = 0.5 * (a + b);
        return (dd1(m, c) - df(m)) / (c - m);
    }
    return (dd1(a, b) - dd1(b, c)) / (a - c);
}

enum class ViolationPrediction { FailsPtoQ, FailsQtoP, Inconclusive };

// Compares the second-order trace coefficients: a strictly larger Tr growth
// on one side falsifies the log-majorization in the opposite direction for
// small theta.
inline ViolationPrediction predict_violation(double alpha, double z, double x, double y) {
    const ExpansionCoeffs p = coeff_P(alpha, x, y);
    const double q = coeff_Q(alpha, z, x, y);
    const double margin = 1e-6 * std::max({std::abs(p.cP), std::abs(q), 1.0});
    if (q > p.cP + margin) return ViolationPrediction::FailsQtoP;
    if (p.cP > q + margin) return ViolationPrediction::FailsPtoQ;
    return ViolationPrediction::Inconclusive;
}

struct ExpansionReport {
    double analytic_p = 0.0;
    double fd_p = 0.0;
    double analytic_q = 0.0;
    double fd_q = 0.0;
    double rel_err_p = 0.0;
    double rel_err_q = 0.0;
    bool pass = false;
};

// Central second differences of the exact traces at +/- theta against the
// analytic coefficients. This is the finite-difference oracle for (the
// correctness of) coeff_P and coeff_Q.
inline ExpansionReport expansion_consistency(double alpha, double z, double x, double y,
                                             double theta, double rel_tol = 1e-3) {
    if (!(theta > 0.0 && theta <= 0.05))
        throw DomainError("expansion_consistency: theta must lie in (0, 0.05]");
    const ExpansionCoeffs cp = coeff_P(alpha, x, y);
    const double cq = coeff_Q(alpha, z, x, y);

    const auto traces = [&](double th) {
        const auto [a, b] = family_matrices(FamilyParams(x, y, th));
        return std::pair<double, double>{p_alpha(a, b, alpha).trace(),
                                         q_alpha_z(a, b, alpha, z).trace()};
    };
    const auto [tp_plus, tq_plus] = traces(theta);
    const auto [tp_minus, tq_minus] = traces(-theta);
    const auto [tp_zero, tq_zero] = traces(0.0);

    ExpansionReport rep;
    rep.analytic_p = cp.cP;
    rep.analytic_q = cq;
    rep.fd_p = (tp_plus + tp_minus - 2.0 * tp_zero) / (2.0 * theta * theta);
    rep.fd_q = (tq_plus + tq_minus - 2.0 * tq_zero) / (2.0 * theta * theta);
    rep.rel_err_p = std::abs(rep.analytic_p - rep.fd_p) / std::max(1.0, std::abs(rep.analytic_p));
    rep.rel_err_q = std::abs(rep.analytic_q - rep.fd_q) / std::max(1.0, std::abs(rep.analytic_q));
    rep.pass = rep.rel_err_p <= rel_tol && rep.rel_err_q <= rel_tol;
    return rep;
}

}  // namespace lmaj
