#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "lmaj/divergences.hpp"
#include "lmaj/rng.hpp"

using namespace lmaj;

namespace {

HermitianMatrix density(int n, std::uint64_t seed) {
    return random_psd(n, seed, SampleKind::Density);
}

std::pair<HermitianMatrix, HermitianMatrix> commuting_densities(std::uint64_t seed) {
    const Matrix u = spectral_decompose(random_psd(3, seed, SampleKind::PD)).eigenvectors;
    const auto build = [&](std::initializer_list<double> d) {
        Matrix m(3);
        int k = 0;
        for (double v : d) {
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) m(i, j) += u(i, k) * v * std::conj(u(j, k));
            ++k;
        }
        return HermitianMatrix(m);
    };
    return {build({0.5, 0.3, 0.2}), build({0.25, 0.35, 0.4})};
}

}  // namespace

TEST_CASE("divergences vanish on identical densities") {
    const HermitianMatrix a = density(3, 31);
    for (double alpha : {0.5, 1.5, 3.0}) {
        CHECK(std::abs(renyi_petz(a, a, alpha)) <= 1e-10);
        CHECK(std::abs(renyi_sandwiched(a, a, alpha)) <= 1e-10);
        CHECK(std::abs(renyi_maximal(a, a, alpha)) <= 1e-10);
    }
    CHECK(std::abs(umegaki(a, a)) <= 1e-10);
    CHECK(std::abs(belavkin_staszewski(a, a)) <= 1e-10);
}

TEST_CASE("commuting scalar formulas") {
    const HermitianMatrix a = HermitianMatrix::diagonal({0.5, 0.5});
    const HermitianMatrix b = HermitianMatrix::diagonal({0.25, 0.75});

    // alpha = 2: log(Tr A^2 B^{-1})
    CHECK(renyi_petz(a, b, 2.0) == Catch::Approx(std::log(4.0 / 3.0)).margin(1e-12));

    // Umegaki: sum a_i (log a_i - log b_i)
    const double want = 0.5 * std::log(2.0) + 0.5 * std::log(2.0 / 3.0);
    CHECK(umegaki(a, b) == Catch::Approx(want).margin(1e-12));
    CHECK(belavkin_staszewski(a, b) == Catch::Approx(want).margin(1e-12));

    // commuting pairs collapse the whole family
    const auto [ca, cb] = commuting_densities(77);
    for (double alpha : {0.5, 1.4, 2.6}) {
        const double petz = renyi_petz(ca, cb, alpha);
        CHECK(renyi_sandwiched(ca, cb, alpha) == Catch::Approx(petz).margin(1e-10));
        CHECK(renyi_maximal(ca, cb, alpha) == Catch::Approx(petz).margin(1e-10));
    }
}

TEST_CASE("alpha-z reductions and z-monotonicity") {
    const HermitianMatrix a = density(3, 41);
    const HermitianMatrix b = density(3, 42);
    for (double alpha : {0.7, 1.8}) {
        CHECK(renyi_alpha_z(a, b, alpha, 1.0) == Catch::Approx(renyi_petz(a, b, alpha)).margin(1e-12));
        CHECK(renyi_alpha_z(a, b, alpha, alpha) ==
              Catch::Approx(renyi_sandwiched(a, b, alpha)).margin(1e-12));
    }

    // Araki monotonicity in z, with the (alpha-1)^{-1} sign bookkeeping:
    // alpha < 1: non-decreasing in z; alpha > 1: non-increasing in z.
    const double zs[] = {0.5, 1.0, 2.0, 4.0};
    double prev = renyi_alpha_z(a, b, 0.7, zs[0]);
    for (double z : {1.0, 2.0, 4.0}) {
        const double cur = renyi_alpha_z(a, b, 0.7, z);
        CHECK(cur >= prev - 1e-9);
        prev = cur;
    }
    prev = renyi_alpha_z(a, b, 1.8, zs[0]);
    for (double z : {1.0, 2.0, 4.0}) {
        const double cur = renyi_alpha_z(a, b, 1.8, z);
        CHECK(cur <= prev + 1e-9);
        prev = cur;
    }

    // sandwiched <= petz at alpha = 0.5 (Araki)
    CHECK(renyi_sandwiched(a, b, 0.5) <= renyi_petz(a, b, 0.5) + 1e-9);
}

TEST_CASE("alpha -> 1 limits: Umegaki and Belavkin-Staszewski") {
    const HermitianMatrix a = density(3, 51);
    const HermitianMatrix b = density(3, 52);
    const double d1 = umegaki(a, b) / a.trace();
    const double dbs = belavkin_staszewski(a, b) / a.trace();
    for (double alpha : {1.0 - 1e-4, 1.0 + 1e-4}) {
        CHECK(std::abs(renyi_petz(a, b, alpha) - d1) <= 1e-3);
        CHECK(std::abs(renyi_sandwiched(a, b, alpha) - d1) <= 1e-3);
        CHECK(std::abs(renyi_maximal(a, b, alpha) - dbs) <= 1e-3);
    }
    // Umegaki <= Belavkin-Staszewski
    CHECK(umegaki(a, b) <= belavkin_staszewski(a, b) + 1e-9);
}

TEST_CASE("umegaki accepts singular A via 0 log 0 = 0") {
    const HermitianMatrix e = random_psd(3, 61, SampleKind::Projection);
    const HermitianMatrix a(e.raw() * cplx(1.0 / e.trace(), 0.0));
    const HermitianMatrix b = density(3, 62);
    CHECK(std::isfinite(umegaki(a, b)));
    CHECK_THROWS_AS(belavkin_staszewski(a, b), SingularPower);
}

TEST_CASE("f-divergences") {
    const HermitianMatrix a = random_psd(3, 71, SampleKind::PD, 100.0);
    const HermitianMatrix b = random_psd(3, 72, SampleKind::PD, 100.0);

    SECTION("f = t - 1 gives Tr A - Tr B for both") {
        const auto f = [](double t) { return t - 1.0; };
        const double want = a.trace() - b.trace();
        CHECK(standard_f_divergence(f, a, b) == Catch::Approx(want).margin(1e-9));
        CHECK(maximal_f_divergence(f, a, b) == Catch::Approx(want).margin(1e-9));
    }
    SECTION("commuting pair: standard equals maximal") {
        const auto [ca, cb] = commuting_densities(73);
        const auto f = [](double t) { return t * std::sqrt(t); };
        CHECK(standard_f_divergence(f, ca, cb) ==
              Catch::Approx(maximal_f_divergence(f, ca, cb)).margin(1e-10));
    }
    SECTION("standard f-divergence at t^alpha equals Tr Q_alpha") {
        for (double alpha : {0.5, 1.5, 2.0}) {
            const auto f = [alpha](double t) { return std::pow(t, alpha); };
            CHECK(standard_f_divergence(f, a, b) ==
                  Catch::Approx(q_alpha_z(a, b, alpha, 1.0).trace()).epsilon(1e-10));
        }
    }
    SECTION("operator convex f keeps standard <= maximal") {
        for (double alpha : {1.3, 2.0}) {
            const auto f = [alpha](double t) { return std::pow(t, alpha); };
            CHECK(standard_f_divergence(f, a, b) <= maximal_f_divergence(f, a, b) + 1e-8);
        }
        for (double alpha : {0.4, 0.8}) {
            const auto f = [alpha](double t) { return -std::pow(t, alpha); };
            CHECK(standard_f_divergence(f, a, b) <= maximal_f_divergence(f, a, b) + 1e-8);
        }
    }
    SECTION("t^3 (convex, not operator convex) reverses on a noncommuting pair") {
        const auto f = [](double t) { return t * t * t; };
        bool found = false;
        for (std::uint64_t seed = 0; seed < 100 && !found; ++seed) {
            const HermitianMatrix x = density(2, mix_seed(900, seed));
            const HermitianMatrix y = density(2, mix_seed(901, seed));
            if (commutator_norm(x, y) < 1e-3) continue;
            found = standard_f_divergence(f, x, y) > maximal_f_divergence(f, x, y) + 1e-10;
        }
        CHECK(found);
    }
}

TEST_CASE("divergence ordering report") {
    const auto [ca, cb] = commuting_densities(81);
    const auto rep_c = divergence_ordering(ca, cb, 1.7);
    CHECK(rep_c.ordering_satisfied);
    CHECK(rep_c.d_petz == Catch::Approx(rep_c.d_sandwiched).margin(1e-9));
    CHECK(rep_c.d_petz == Catch::Approx(rep_c.d_maximal).margin(1e-9));

    const HermitianMatrix a = density(3, 82);
    const HermitianMatrix b = density(3, 83);
    const auto rep15 = divergence_ordering(a, b, 1.5);
    CHECK(rep15.ordering_satisfied);
    CHECK(rep15.d_sandwiched <= rep15.d_petz + 1e-8);
    CHECK(rep15.d_petz <= rep15.d_maximal + 1e-8);

    const auto rep3 = divergence_ordering(a, b, 3.0, 2.0);
    CHECK(rep3.ordering_satisfied);
    CHECK(rep3.d_sandwiched <= rep3.d_maximal + 1e-8);
    CHECK(rep3.d_maximal <= rep3.d_petz + 1e-8);
    REQUIRE(rep3.d_alpha_z.has_value());

    // alpha = 2 makes petz and maximal coincide (Tr A^2 B^{-1} both ways)
    const auto rep2 = divergence_ordering(a, b, 2.0);
    CHECK(rep2.d_petz == Catch::Approx(rep2.d_maximal).margin(1e-9));
}

TEST_CASE("divergence preconditions") {
    const HermitianMatrix a = density(2, 91);
    const HermitianMatrix b = density(2, 92);
    CHECK_THROWS_AS(renyi_petz(a, b, 1.0), DomainError);
    CHECK_THROWS_AS(renyi_petz(a, b, -0.5), DomainError);
    CHECK_THROWS_AS(renyi_petz(HermitianMatrix(2), b, 1.5), ZeroMatrix);
    CHECK_THROWS_AS(renyi_petz(a, HermitianMatrix::diagonal({1.0, 0.0}), 1.5), SingularPower);
}
