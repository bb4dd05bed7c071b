// suites.hpp — one property suite per claim cluster.
//
//   araki-z          Q_{alpha,z'} prec_log Q_{alpha,z} for z <= z'
//   exp-mix          exp(a log A + (1-a) log B) prec_log Q_{alpha,z};
//                    P_alpha prec_log exp-mix when 0 < alpha < 1
//   ah-monotone      0 < alpha < 1:  P_{alpha,r} prec_log P_{alpha,r'}, r <= r'
//   ks-monotone      1 < alpha <= 2: P_{alpha,r} prec_log P_{alpha,r'}, r' <= r
//   cor52            alpha >= 2:     P_{alpha,r} prec_log P_{alpha,r'},
//                                    r' <= alpha r / (2(alpha-1))
//   ext-araki        ((AB)^m A)^r prec_log (A^r B^r)^m A^r for r >= 2m/(m+1);
//                    exploration records r in (1, 2m/(m+1)) without asserting
//   norms            Ky Fan / Schatten inequalities in all three regimes
//   trace-log        logarithmic trace inequalities, the middle equalities,
//                    and the gathering inequality
//   divergence-order the divergence chains and region orderings
//   projection       rank-deficient A = E: P prec Q iff z <= alpha-1,
//                    Q prec P iff z >= alpha-1, per noncommuting pair

#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <string>

#include "lmaj/harness.hpp"

namespace lmaj {

namespace detail {

class SuiteRun {
  public:
    SuiteRun(std::string name, const SuiteConfig& cfg) : cfg_(cfg) {
        rep_.suite_name = std::move(name);
        rep_.seed = cfg.seed;
    }

    const SuiteConfig& cfg() const { return cfg_; }
    SuiteReport take() && { return std::move(rep_); }

    void count_case() { ++rep_.cases_run; }
    long case_id() const { return rep_.cases_run; }

    void note(std::string s) { rep_.notes.push_back(std::move(s)); }

    // "X prec_log Y" over the resolvable prefixes.
    void expect_prec(const HermitianMatrix& x, const HermitianMatrix& y, const std::string& what) {
        const DirectionalCheck c = check_prefix_majorization(x, y, cfg_.tol);
        if (!c.any_resolvable) return;
        if (c.violated) {
            fail(what + " violated at k=" + std::to_string(c.worst_k), c.worst_margin);
        } else if (c.worst_margin < -cfg_.tol) {
            warn(what, c.worst_margin);
        }
    }

    // scalar ordering lhs <= rhs within the divergence budget
    void expect_le(double lhs, double rhs, double tol, const std::string& what) {
        const double margin = rhs - lhs;
        if (margin < -10.0 * tol) {
            fail(what, margin);
        } else if (margin < -tol) {
            warn(what, margin);
        }
    }

    // |a - b| <= tol * max(1, |a|, |b|), with the same 10x failure rule
    void expect_close(double a, double b, double tol, const std::string& what) {
        const double scale = std::max({1.0, std::abs(a), std::abs(b)});
        const double gap = std::abs(a - b) / scale;
        if (gap > 10.0 * tol) {
            fail(what + " differ", -gap);
        } else if (gap > tol) {
            warn(what + " differ", -gap);
        }
    }

    void fail(const std::string& desc, double margin) {
        rep_.failures.push_back({rep_.cases_run, desc, margin});
    }
    void warn(const std::string& desc, double margin) {
        char buf[64];
        std::snprintf(buf, sizeof buf, " (margin %.3g)", margin);
        rep_.warnings.push_back(desc + buf);
    }

    HermitianMatrix pd(int dim, std::uint64_t s) const {
        return random_psd(dim, s, SampleKind::PD, cfg_.cond_cap);
    }
    HermitianMatrix dens(int dim, std::uint64_t s) const {
        return random_psd(dim, s, SampleKind::Density, cfg_.cond_cap);
    }
    int dim_for(long k) const {
        return cfg_.dims[static_cast<std::size_t>(k) % cfg_.dims.size()];
    }

  private:
    SuiteConfig cfg_;
    SuiteReport rep_;
};

inline std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

// ---------------------------------------------------------------------------

inline SuiteReport suite_araki_z(const SuiteConfig& cfg) {
    SuiteRun run("araki-z", cfg);
    for (long i = 0; i < cfg.samples; ++i) {
        Rng rng(mix_seed(cfg.seed, 0xa1, static_cast<std::uint64_t>(i)));
        const int dim = run.dim_for(i);
        const HermitianMatrix a = run.pd(dim, rng.next_u64());
        const HermitianMatrix b = run.pd(dim, rng.next_u64());
        const double alpha = sample_alpha(rng, 0.15, 3.0);
        // keep total exponent (2 alpha - 1)/z inside the resolvable envelope
        const double z_lo = std::max(0.3, (2.0 * alpha - 1.0) / 7.0);
        std::array<double, 3> zs{uniform_in(rng, z_lo, 3.2), uniform_in(rng, z_lo, 3.2),
                                 uniform_in(rng, z_lo, 3.2)};
        std::sort(zs.begin(), zs.end());
        run.count_case();
        for (int k = 0; k + 1 < 3; ++k) {
            const HermitianMatrix q_hi = q_alpha_z(a, b, alpha, zs[static_cast<std::size_t>(k + 1)]);
            const HermitianMatrix q_lo = q_alpha_z(a, b, alpha, zs[static_cast<std::size_t>(k)]);
            run.expect_prec(q_hi, q_lo,
                            fmt("Q(alpha=%.4g) z-chain %.4g <= %.4g", alpha,
                                zs[static_cast<std::size_t>(k)], zs[static_cast<std::size_t>(k + 1)]));
        }
    }
    return std::move(run).take();
}

inline SuiteReport suite_exp_mix(const SuiteConfig& cfg) {
    SuiteRun run("exp-mix", cfg);
    for (long i = 0; i < cfg.samples; ++i) {
        Rng rng(mix_seed(cfg.seed, 0xa2, static_cast<std::uint64_t>(i)));
        const int dim = run.dim_for(i);
        const HermitianMatrix a = run.pd(dim, rng.next_u64());
        const HermitianMatrix b = run.pd(dim, rng.next_u64());
        const double alpha = sample_alpha(rng, 0.15, 3.0);
        const double z = uniform_in(rng, std::max(0.3, (2.0 * alpha - 1.0) / 7.0), 3.2);
        const HermitianMatrix mix = log_euclidean_mix(a, b, alpha);
        run.count_case();
        run.expect_prec(mix, q_alpha_z(a, b, alpha, z),
                        fmt("exp-mix prec Q (alpha=%.4g, z=%.4g)", alpha, z));
        if (alpha < 1.0)
            run.expect_prec(p_alpha(a, b, alpha), mix, fmt("P prec exp-mix (alpha=%.4g)", alpha));
    }
    return std::move(run).take();
}

inline SuiteReport suite_ah_monotone(const SuiteConfig& cfg) {
    SuiteRun run("ah-monotone", cfg);
    for (long i = 0; i < cfg.samples; ++i) {
        Rng rng(mix_seed(cfg.seed, 0xa3, static_cast<std::uint64_t>(i)));
        const int dim = run.dim_for(i);
        const HermitianMatrix a = run.pd(dim, rng.next_u64());
        const HermitianMatrix b = run.pd(dim, rng.next_u64());
        const double alpha = uniform_in(rng, 0.05, 0.95);
        std::array<double, 3> rs{uniform_in(rng, 0.5, 3.0), uniform_in(rng, 0.5, 3.0),
                                 uniform_in(rng, 0.5, 3.0)};
        std::sort(rs.begin(), rs.end());
        run.count_case();
        for (int k = 0; k + 1 < 3; ++k)
            run.expect_prec(p_alpha_r(a, b, alpha, rs[static_cast<std::size_t>(k)]),
                            p_alpha_r(a, b, alpha, rs[static_cast<std::size_t>(k + 1)]),
                            fmt("P_{alpha=%.4g,r} increasing chain r=%.4g..%.4g", alpha,
                                rs[static_cast<std::size_t>(k)], rs[static_cast<std::size_t>(k + 1)]));
    }
    return std::move(run).take();
}

inline SuiteReport suite_ks_monotone(const SuiteConfig& cfg) {
    SuiteRun run("ks-monotone", cfg);
    for (long i = 0; i < cfg.samples; ++i) {
        Rng rng(mix_seed(cfg.seed, 0xa4, static_cast<std::uint64_t>(i)));
        const int dim = run.dim_for(i);
        const HermitianMatrix a = run.pd(dim, rng.next_u64());
        const HermitianMatrix b = run.pd(dim, rng.next_u64());
        const double alpha = uniform_in(rng, 1.06, 2.0);
        std::array<double, 3> rs{uniform_in(rng, 0.6, 3.0), uniform_in(rng, 0.6, 3.0),
                                 uniform_in(rng, 0.6, 3.0)};
        std::sort(rs.begin(), rs.end());
        run.count_case();
        for (int k = 0; k + 1 < 3; ++k)
            run.expect_prec(p_alpha_r(a, b, alpha, rs[static_cast<std::size_t>(k + 1)]),
                            p_alpha_r(a, b, alpha, rs[static_cast<std::size_t>(k)]),
                            fmt("P_{alpha=%.4g,r} reversed chain r=%.4g..%.4g", alpha,
                                rs[static_cast<std::size_t>(k)], rs[static_cast<std::size_t>(k + 1)]));
    }
    return std::move(run).take();
}

inline SuiteReport suite_cor52(const SuiteConfig& cfg) {
    SuiteRun run("cor52", cfg);
    for (long i = 0; i < cfg.samples; ++i) {
        Rng rng(mix_seed(cfg.seed, 0xa5, static_cast<std::uint64_t>(i)));
        const int dim = run.dim_for(i);
        const HermitianMatrix a = run.pd(dim, rng.next_u64());
        const HermitianMatrix b = run.pd(dim, rng.next_u64());
        const double alpha = uniform_in(rng, 2.0, 3.2);
        const double r = uniform_in(rng, 1.6, 2.6);
        const double bound = alpha * r / (2.0 * (alpha - 1.0));
        const double r_lo = alpha / 2.8;  // resolvable-envelope floor
        const double rp = uniform_in(rng, std::min(r_lo, bound), bound);
        run.count_case();
        run.expect_prec(p_alpha_r(a, b, alpha, r), p_alpha_r(a, b, alpha, rp),
                        fmt("P_{alpha=%.4g}: r=%.4g prec r'=%.4g", alpha, r, rp));
    }
    return std::move(run).take();
}

inline SuiteReport suite_ext_araki(const SuiteConfig& cfg) {
    SuiteRun run("ext-araki", cfg);
    long explored = 0, explored_pass = 0;
    double worst_exploration_margin = std::numeric_limits<double>::infinity();
    for (long i = 0; i < cfg.samples; ++i) {
        Rng rng(mix_seed(cfg.seed, 0xa6, static_cast<std::uint64_t>(i)));
        const int dim = run.dim_for(i);
        const HermitianMatrix a = run.pd(dim, rng.next_u64());
        const HermitianMatrix b = run.pd(dim, rng.next_u64());
        const int m = 2 + static_cast<int>(rng.next_u64() % 2);
        const double r_star = 2.0 * m / (m + 1.0);
        run.count_case();
        {
            const double r = uniform_in(rng, r_star, 2.2);
            const auto [lhs, rhs] = word_products(a, b, m, r);
            run.expect_prec(lhs, rhs, fmt("((AB)^m A)^r prec (A^r B^r)^m A^r, m=%.0f r=%.4g",
                                          static_cast<double>(m), r));
        }
        {
            // exploration band (1, 2m/(m+1)): outcomes are data, never asserts
            const double r = uniform_in(rng, 1.0 + 1e-3, r_star - 1e-3);
            const auto [lhs, rhs] = word_products(a, b, m, r);
            const DirectionalCheck c = check_prefix_majorization(lhs, rhs, cfg.tol);
            ++explored;
            if (!c.violated) ++explored_pass;
            if (c.any_resolvable)
                worst_exploration_margin = std::min(worst_exploration_margin, c.worst_margin);
        }
    }
    run.note(fmt("exploration r in (1, 2m/(m+1)): %g of %g samples satisfied the relation",
                 static_cast<double>(explored_pass), static_cast<double>(explored)));
    run.note(fmt("exploration worst margin: %.6g", worst_exploration_margin));
    return std::move(run).take();
}

inline SuiteReport suite_norms(const SuiteConfig& cfg) {
    SuiteRun run("norms", cfg);
    const double schatten_ps[] = {1.0, 2.0, 3.0};
    long strict_total = 0, strict_sep = 0;  // trace-norm equality forces commutation
    for (long i = 0; i < cfg.samples; ++i) {
        Rng rng(mix_seed(cfg.seed, 0xa7, static_cast<std::uint64_t>(i)));
        const int dim = run.dim_for(i);
        const HermitianMatrix a = run.pd(dim, rng.next_u64());
        const HermitianMatrix b = run.pd(dim, rng.next_u64());

        // one parameter point from each regime
        struct Regime {
            double alpha, z;
            bool p_le_q;
        };
        const double a1 = uniform_in(rng, 0.1, 0.9);
        const double a2 = uniform_in(rng, 1.12, 3.0);
        const double a3 = uniform_in(rng, 1.1, 3.0);
        // regime-2 z floor keeps the inner spectrum representable: the clamped
        // tail of A^{alpha/z} would otherwise re-inflate under ^z and bite a
        // macroscopic piece out of the norms
        const double z2_lo = (2.0 * a2 - 1.0) / 12.0;
        const double z2_hi = std::min(a2 / 2.0, a2 - 1.0);
        const Regime regimes[] = {
            {a1, uniform_in(rng, 0.2, 3.0), true},
            {a2, uniform_in(rng, std::min(z2_lo, z2_hi), z2_hi), true},
            {a3, std::max(a3 / 2.0, a3 - 1.0) + uniform_in(rng, 0.0, 1.5), false},
        };
        run.count_case();
        for (const Regime& reg : regimes) {
            const HermitianMatrix p = p_alpha(a, b, reg.alpha);
            const HermitianMatrix q = q_alpha_z(a, b, reg.alpha, reg.z);
            const HermitianMatrix& small = reg.p_le_q ? p : q;
            const HermitianMatrix& big = reg.p_le_q ? q : p;
            for (int k = 1; k <= dim; ++k) {
                const double ns = ky_fan_norm(small, k);
                const double nb = ky_fan_norm(big, k);
                run.expect_le(ns / std::max(1.0, nb), nb / std::max(1.0, nb), cfg.tol,
                              fmt("KyFan-%g (alpha=%.4g z=%.4g)", static_cast<double>(k), reg.alpha,
                                  reg.z));
            }
            for (double sp : schatten_ps) {
                const double ns = schatten_norm(small, sp);
                const double nb = schatten_norm(big, sp);
                run.expect_le(ns / std::max(1.0, nb), nb / std::max(1.0, nb), cfg.tol,
                              fmt("Schatten-%g (alpha=%.4g z=%.4g)", sp, reg.alpha, reg.z));
            }
            // monitored statistic, never asserted: away from commuting pairs a
            // strictly increasing norm separates P from Q (equality would force
            // AB = BA)
            if (commutator_norm(a, b) > 0.1 * a.frobenius_norm()) {
                ++strict_total;
                const double tp = trace_norm(p), tq = trace_norm(q);
                if (std::abs(tp - tq) > 10.0 * cfg.tol * std::max(1.0, std::max(tp, tq)))
                    ++strict_sep;
            }
        }
    }
    if (strict_total > 0)
        run.note(fmt("strict-separation proxy: %g of %g noncommuting cases had "
                     "trace norms apart by more than 10*tol",
                     static_cast<double>(strict_sep), static_cast<double>(strict_total)));
    return std::move(run).take();
}

inline SuiteReport suite_trace_log(const SuiteConfig& cfg) {
    SuiteRun run("trace-log", cfg);
    for (long i = 0; i < cfg.samples; ++i) {
        Rng rng(mix_seed(cfg.seed, 0xa8, static_cast<std::uint64_t>(i)));
        const int dim = run.dim_for(i);
        const HermitianMatrix a = run.pd(dim, rng.next_u64());
        const HermitianMatrix b = run.pd(dim, rng.next_u64());
        run.count_case();

        const HermitianMatrix log_a = matrix_log(a);
        const HermitianMatrix log_b = matrix_log(b);
        const HermitianMatrix log_diff = log_a - log_b;
        const double mid_ref = (a.raw() * log_diff.raw()).trace().real();

        // lower(p) <= Tr A (log A - log B) <= upper(p)
        for (double p : {0.5, 1.0, 2.0}) {
            const HermitianMatrix a_p = fractional_power(a, p);
            const HermitianMatrix b_mp2 = fractional_power(b, -p / 2.0);
            const HermitianMatrix a_p2 = fractional_power(a, p / 2.0);
            const HermitianMatrix b_mp = fractional_power(b, -p);
            const double lower =
                (a.raw() * matrix_log(sandwich(b_mp2, a_p)).raw()).trace().real() / p;
            const double upper =
                (a.raw() * matrix_log(sandwich(a_p2, b_mp)).raw()).trace().real() / p;
            run.expect_le(lower, mid_ref, cfg.tol, fmt("log-trace lower bound, p=%g", p));
            run.expect_le(mid_ref, upper, cfg.tol, fmt("log-trace upper bound, p=%g", p));
        }

        // second-derivative chain at alpha = 2 with its middle equalities
        const HermitianMatrix a_h = fractional_power(a, 0.5);
        const HermitianMatrix a_3h = fractional_power(a, 1.5);
        const HermitianMatrix b_inv = fractional_power(b, -1.0);
        const HermitianMatrix b_mh = fractional_power(b, -0.5);
        const HermitianMatrix core = sandwich(a_h, b_inv);       // A^{1/2} B^{-1} A^{1/2}
        const HermitianMatrix core_b = sandwich(b_mh, a);        // B^{-1/2} A B^{-1/2}
        const HermitianMatrix log_core = matrix_log(core);
        const double t1 =
            (a_h.raw() * b_inv.raw() * a_3h.raw() * log_core.raw()).trace().real();
        const double t2 = (sandwich(b_mh, HermitianMatrix(a.raw() * a.raw())).raw() *
                           matrix_log(core_b).raw())
                              .trace()
                              .real();
        const double t3 =
            (a_3h.raw() * b_inv.raw() * a_h.raw() * log_core.raw()).trace().real();
        const double lhs_end =
            (a.raw() * b_inv.raw() * a.raw() * log_diff.raw()).trace().real();
        const double rhs_end =
            (a.raw() * a.raw() * b_inv.raw() * log_diff.raw()).trace().real();

        run.expect_close(t1, t2, cfg.tol, "middle expressions (1,2)");
        run.expect_close(t2, t3, cfg.tol, "middle expressions (2,3)");
        run.expect_le(lhs_end, t1, cfg.tol, "trace chain lower end");
        run.expect_le(t3, rhs_end, cfg.tol, "trace chain upper end");

        // gathering inequality: Tr A B^{-1} A log B^{-1} <= Tr A^2 B^{-1} log B^{-1}
        const HermitianMatrix neg_log_b = -1.0 * log_b;
        const double g_lhs =
            (a.raw() * b_inv.raw() * a.raw() * neg_log_b.raw()).trace().real();
        const double g_rhs =
            (a.raw() * a.raw() * b_inv.raw() * neg_log_b.raw()).trace().real();
        run.expect_le(g_lhs, g_rhs, cfg.tol, "gathering inequality");
    }
    return std::move(run).take();
}

inline SuiteReport suite_divergence_order(const SuiteConfig& cfg) {
    SuiteRun run("divergence-order", cfg);
    long sep_total = 0, sep_ok = 0;
    for (long i = 0; i < cfg.samples; ++i) {
        Rng rng(mix_seed(cfg.seed, 0xa9, static_cast<std::uint64_t>(i)));
        const int dim = run.dim_for(i);
        const HermitianMatrix a = run.dens(dim, rng.next_u64());
        const HermitianMatrix b = run.dens(dim, rng.next_u64());
        run.count_case();

        for (double alpha : {0.5, 1.5, 2.0, 3.0}) {
            const DivergenceReport rep = divergence_ordering(a, b, alpha, std::nullopt, cfg.tol_div);
            if (alpha <= 2.0) {
                run.expect_le(rep.d_sandwiched, rep.d_petz, cfg.tol_div,
                              fmt("sandwiched <= petz (alpha=%g)", alpha));
                run.expect_le(rep.d_petz, rep.d_maximal, cfg.tol_div,
                              fmt("petz <= maximal (alpha=%g)", alpha));
            } else {
                run.expect_le(rep.d_sandwiched, rep.d_maximal, cfg.tol_div,
                              fmt("sandwiched <= maximal (alpha=%g)", alpha));
                run.expect_le(rep.d_maximal, rep.d_petz, cfg.tol_div,
                              fmt("maximal <= petz (alpha=%g)", alpha));
            }
        }

        // region orderings of maximal vs alpha-z
        {
            const double alpha = uniform_in(rng, 1.2, 3.0);
            const double z_low = uniform_in(rng, 0.3, 1.0) * std::min(alpha / 2.0, alpha - 1.0);
            if (z_low >= 0.15) {
                run.expect_le(renyi_maximal(a, b, alpha), renyi_alpha_z(a, b, alpha, z_low),
                              cfg.tol_div, fmt("maximal <= D_{a,z} (alpha=%.4g z=%.4g)", alpha, z_low));
            }
            const double z_hi = std::max(alpha / 2.0, alpha - 1.0) + uniform_in(rng, 0.0, 1.5);
            run.expect_le(renyi_alpha_z(a, b, alpha, z_hi), renyi_maximal(a, b, alpha), cfg.tol_div,
                          fmt("D_{a,z} <= maximal (alpha=%.4g z=%.4g)", alpha, z_hi));
            const double alpha_small = uniform_in(rng, 0.1, 0.9);
            const double z_any = uniform_in(rng, 0.3, 3.0);
            run.expect_le(renyi_alpha_z(a, b, alpha_small, z_any),
                          renyi_maximal(a, b, alpha_small), cfg.tol_div,
                          fmt("D_{a,z} <= maximal (alpha=%.4g z=%.4g)", alpha_small, z_any));
        }

        // alpha -> 1 continuity against the two entropies
        const double d1 = umegaki(a, b) / a.trace();
        const double dbs = belavkin_staszewski(a, b) / a.trace();
        for (double alpha : {1.0 - 1e-4, 1.0 + 1e-4}) {
            run.expect_le(std::abs(renyi_petz(a, b, alpha) - d1), 1e-3, cfg.tol_div,
                          "petz alpha->1 limit");
            run.expect_le(std::abs(renyi_maximal(a, b, alpha) - dbs), 1e-3, cfg.tol_div,
                          "maximal alpha->1 limit");
        }
        run.expect_le(d1, dbs, cfg.tol_div, "umegaki <= belavkin-staszewski");

        // monitored statistic: strict separation away from commuting pairs
        if (commutator_norm(a, b) > 0.1) {
            for (double alpha : {0.5, 1.5, 3.0}) {
                ++sep_total;
                const DivergenceReport rep =
                    divergence_ordering(a, b, alpha, std::nullopt, cfg.tol_div);
                const double d01 = std::abs(rep.d_petz - rep.d_sandwiched);
                const double d02 = std::abs(rep.d_petz - rep.d_maximal);
                const double d12 = std::abs(rep.d_sandwiched - rep.d_maximal);
                if (std::min({d01, d02, d12}) > 10.0 * cfg.tol_div) ++sep_ok;
            }
        }
    }
    if (sep_total > 0)
        run.note(fmt("strictness proxy: %g of %g noncommuting samples pairwise separated",
                     static_cast<double>(sep_ok), static_cast<double>(sep_total)));
    return std::move(run).take();
}

inline SuiteReport suite_projection(const SuiteConfig& cfg) {
    SuiteRun run("projection", cfg);
    for (long i = 0; i < cfg.samples; ++i) {
        Rng rng(mix_seed(cfg.seed, 0xaa, static_cast<std::uint64_t>(i)));
        const int dim = std::max(2, run.dim_for(i));
        HermitianMatrix e = random_psd(dim, rng.next_u64(), SampleKind::Projection);
        HermitianMatrix b = run.pd(dim, rng.next_u64());
        // the per-pair iff needs EB != BE; insist on solid noncommutation
        for (int tries = 0; commutator_norm(e, b) < 0.05 * b.frobenius_norm() && tries < 64;
             ++tries) {
            e = random_psd(dim, rng.next_u64(), SampleKind::Projection);
            b = run.pd(dim, rng.next_u64());
        }
        const double alpha = (i % 2 == 0) ? 1.5 : 2.5;
        run.count_case();
        for (double dz : {-0.3, -0.15, 0.0, 0.15, 0.3}) {
            const double z = alpha - 1.0 + dz;
            if (z < 0.05) continue;
            const HermitianMatrix p = p_alpha(e, b, alpha);
            const HermitianMatrix q = q_alpha_z(e, b, alpha, z);
            const DirectionalCheck pq = check_prefix_majorization(p, q, cfg.tol);
            const DirectionalCheck qp = check_prefix_majorization(q, p, cfg.tol);
            if (dz <= 0.0 && pq.violated)
                run.fail(fmt("P prec Q must hold at z=%.4g <= alpha-1 (alpha=%.4g)", z, alpha),
                         pq.worst_margin);
            if (dz >= 0.0 && qp.violated)
                run.fail(fmt("Q prec P must hold at z=%.4g >= alpha-1 (alpha=%.4g)", z, alpha),
                         qp.worst_margin);
            if (dz < 0.0 && !qp.violated)
                run.fail(fmt("Q prec P must fail at z=%.4g < alpha-1 (alpha=%.4g)", z, alpha),
                         qp.worst_margin);
            if (dz > 0.0 && !pq.violated)
                run.fail(fmt("P prec Q must fail at z=%.4g > alpha-1 (alpha=%.4g)", z, alpha),
                         pq.worst_margin);
        }
    }
    return std::move(run).take();
}

}  // namespace detail

inline std::vector<std::string> suite_names() {
    return {"araki-z",   "exp-mix", "ah-monotone", "ks-monotone",      "cor52",
            "ext-araki", "norms",   "trace-log",   "divergence-order", "projection"};
}

inline SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg) {
    if (cfg.dims.empty()) throw ConfigError("suite config needs at least one dimension");
    for (int d : cfg.dims)
        if (d < 1 || d > kMaxDim) throw ConfigError("suite dimensions must lie in 1..64");
    if (cfg.samples < 0) throw ConfigError("suite sample count must be >= 0");
    if (!(cfg.tol > 0.0) || !(cfg.tol_div > 0.0) || !(cfg.cond_cap > 1.0))
        throw ConfigError("suite tolerances and condition cap must be positive");
    if (name == "araki-z") return detail::suite_araki_z(cfg);
    if (name == "exp-mix") return detail::suite_exp_mix(cfg);
    if (name == "ah-monotone") return detail::suite_ah_monotone(cfg);
    if (name == "ks-monotone") return detail::suite_ks_monotone(cfg);
    if (name == "cor52") return detail::suite_cor52(cfg);
    if (name == "ext-araki") return detail::suite_ext_araki(cfg);
    if (name == "norms") return detail::suite_norms(cfg);
    if (name == "trace-log") return detail::suite_trace_log(cfg);
    if (name == "divergence-order") return detail::suite_divergence_order(cfg);
    if (name == "projection") return detail::suite_projection(cfg);
    throw ConfigError("unknown suite '" + name + "'");
}

}  // namespace lmaj
