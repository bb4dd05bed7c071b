#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

#include "lmaj/eigen.hpp"
#include "lmaj/hmat_io.hpp"
#include "lmaj/matrix.hpp"
#include "lmaj/rng.hpp"
#include "lmaj/spectral.hpp"
#include "oracles.hpp"

using namespace lmaj;
using lmaj::testing::eigenvalues_by_bisection;
using lmaj::testing::frob_dist;

namespace {

HermitianMatrix random_hermitian(int n, std::uint64_t seed) {
    Rng rng(mix_seed(seed, 0xabc));
    Matrix g(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = rng.complex_gaussian();
    return HermitianMatrix((g + g.adjoint()) * cplx(0.5, 0.0));
}

double reconstruction_residual(const HermitianMatrix& m) {
    const SpectralDecomposition d = spectral_decompose(m);
    return (d.assemble(d.eigenvalues) - m.raw()).frobenius_norm();
}

double unitarity_residual(const SpectralDecomposition& d) {
    return (d.eigenvectors.adjoint() * d.eigenvectors - Matrix::identity(d.dim())).frobenius_norm();
}

}  // namespace

TEST_CASE("hermitian constructor symmetrizes and rejects oversized input") {
    Matrix m(2);
    m(0, 0) = cplx(1.0, 0.5);  // imaginary diagonal dirt must vanish
    m(0, 1) = cplx(2.0, 1.0);
    m(1, 0) = cplx(0.0, 0.0);
    m(1, 1) = 3.0;
    HermitianMatrix h(m);
    CHECK(h(0, 0) == cplx(1.0, 0.0));
    CHECK(h(0, 1) == cplx(1.0, 0.5));
    CHECK(h(1, 0) == std::conj(h(0, 1)));

    CHECK_THROWS_AS(HermitianMatrix(65), InvalidDim);
    CHECK_THROWS_AS(Matrix(0), InvalidDim);
}

TEST_CASE("spectral_decompose: diagonal input") {
    const auto d = spectral_decompose(HermitianMatrix::diagonal({3.0, 1.0}));
    CHECK(d.eigenvalues[0] == Catch::Approx(3.0).margin(1e-14));
    CHECK(d.eigenvalues[1] == Catch::Approx(1.0).margin(1e-14));
    // eigenvectors stay axis-aligned
    CHECK(std::abs(d.eigenvectors(0, 0)) == Catch::Approx(1.0).margin(1e-14));
    CHECK(std::abs(d.eigenvectors(1, 1)) == Catch::Approx(1.0).margin(1e-14));
}

TEST_CASE("spectral_decompose: symmetry-forced 2x2") {
    const HermitianMatrix m(2, {0.0, 1.0, 1.0, 0.0});
    const auto d = spectral_decompose(m);
    CHECK(d.eigenvalues[0] == Catch::Approx(1.0).margin(1e-14));
    CHECK(d.eigenvalues[1] == Catch::Approx(-1.0).margin(1e-14));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int k = 0; k < 2; ++k) {
        CHECK(std::abs(d.eigenvectors(0, k)) == Catch::Approx(inv_sqrt2).margin(1e-12));
        CHECK(std::abs(d.eigenvectors(1, k)) == Catch::Approx(inv_sqrt2).margin(1e-12));
    }
}

TEST_CASE("spectral_decompose: random 4x4 against characteristic-polynomial oracle") {
    const HermitianMatrix m = random_hermitian(4, 42);
    const auto d = spectral_decompose(m);
    const double scale = std::max(1.0, m.frobenius_norm());
    CHECK(reconstruction_residual(m) <= 1e-11 * scale);
    CHECK(unitarity_residual(d) <= 1e-11);
    const auto oracle = eigenvalues_by_bisection(m);
    REQUIRE(oracle.size() == 4);
    for (int i = 0; i < 4; ++i)
        CHECK(d.eigenvalues[i] == Catch::Approx(oracle[i]).margin(1e-10));
}

TEST_CASE("spectral_decompose: residual invariant across sampled sizes") {
    for (int n : {2, 3, 5, 8, 16, 64}) {
        const HermitianMatrix m = random_hermitian(n, 1000 + n);
        const double scale = std::max(1.0, m.frobenius_norm());
        const auto d = spectral_decompose(m);
        CHECK(reconstruction_residual(m) <= 1e-11 * scale);
        CHECK(unitarity_residual(d) <= 1e-11);
        for (std::size_t i = 1; i < d.eigenvalues.size(); ++i)
            CHECK(d.eigenvalues[i - 1] >= d.eigenvalues[i]);
    }
}

TEST_CASE("apply_spectral_function basics") {
    const HermitianMatrix m = random_hermitian(3, 7);
    const HermitianMatrix same = apply_spectral_function(m, [](double t) { return t; });
    CHECK(frob_dist(m, same) <= 1e-12 * std::max(1.0, m.frobenius_norm()));

    const HermitianMatrix sq = apply_spectral_function(HermitianMatrix::diagonal({2.0, -1.0}),
                                                       [](double t) { return t * t; });
    CHECK(frob_dist(sq, HermitianMatrix::diagonal({4.0, 1.0})) <= 1e-12);

    // exp then log round-trip on a random PD 3x3
    const HermitianMatrix pd = random_psd(3, 5, SampleKind::PD);
    const HermitianMatrix roundtrip = matrix_log(matrix_exp(matrix_log(pd)));
    CHECK(frob_dist(matrix_exp(roundtrip), pd) <= 1e-9 * std::max(1.0, pd.frobenius_norm()));

    CHECK_THROWS_AS(apply_spectral_function(
                        HermitianMatrix::diagonal({1.0, -2.0}),
                        [](double t) { return std::log(t); }, [](double t) { return t > 0.0; }),
                    DomainError);
}

TEST_CASE("fractional_power: closed forms and laws") {
    CHECK(frob_dist(fractional_power(HermitianMatrix::diagonal({4.0, 9.0}), 0.5),
                    HermitianMatrix::diagonal({2.0, 3.0})) <= 1e-12);

    for (double p : {-2.0, -0.5, 0.7, 3.0})
        CHECK(frob_dist(fractional_power(HermitianMatrix::identity(3), p),
                        HermitianMatrix::identity(3)) <= 1e-12);

    const HermitianMatrix m(2, {2.0, 1.0, 1.0, 1.0});
    CHECK(frob_dist(fractional_power(m, -1.0), HermitianMatrix(2, {1.0, -1.0, -1.0, 2.0})) <= 1e-12);

    // (M^p)^q = M^{pq}; the sample spectrum sits in [1/2, 3] so that M^{pq}
    // stays representable to the stated accuracy for |p|, |q| <= 3.
    const Matrix u = spectral_decompose(random_hermitian(3, 31)).eigenvectors;
    Matrix banded(3);
    const double band[3] = {3.0, 1.4, 0.5};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            cplx s = 0.0;
            for (int k = 0; k < 3; ++k) s += u(i, k) * band[k] * std::conj(u(j, k));
            banded(i, j) = s;
        }
    const HermitianMatrix pd(banded);
    for (double p : {-3.0, -1.2, 0.5, 2.0})
        for (double q : {-2.5, 0.3, 3.0}) {
            const HermitianMatrix lhs = fractional_power(fractional_power(pd, p), q);
            const HermitianMatrix rhs = fractional_power(pd, p * q);
            CHECK(frob_dist(lhs, rhs) <= 1e-9 * std::max(1.0, rhs.frobenius_norm()));
        }

    // M^p M^q = M^{p+q} on PD samples
    const HermitianMatrix pd2 = random_psd(3, 11, SampleKind::PD);
    for (double p : {0.5, 1.7})
        for (double q : {-0.5, 1.1}) {
            const Matrix lhs = fractional_power(pd2, p).raw() * fractional_power(pd2, q).raw();
            const HermitianMatrix rhs = fractional_power(pd2, p + q);
            CHECK((lhs - rhs.raw()).frobenius_norm() <= 1e-9 * std::max(1.0, rhs.frobenius_norm()));
        }

    CHECK_THROWS_AS(fractional_power(HermitianMatrix::diagonal({1.0, 0.0}), -1.0), SingularPower);
    CHECK_THROWS_AS(fractional_power(HermitianMatrix::diagonal({1.0, -1.0}), 0.5), DomainError);
}

TEST_CASE("matrix log/exp closed forms") {
    CHECK(frob_dist(matrix_log(HermitianMatrix::identity(3)), HermitianMatrix(3)) <= 1e-12);
    CHECK(frob_dist(matrix_exp(HermitianMatrix(3)), HermitianMatrix::identity(3)) <= 1e-12);
    const double e = std::exp(1.0);
    CHECK(frob_dist(matrix_log(HermitianMatrix::diagonal({e, e * e})),
                    HermitianMatrix::diagonal({1.0, 2.0})) <= 1e-12);
    CHECK_THROWS_AS(matrix_log(HermitianMatrix::diagonal({1.0, 0.0})), SingularPower);
}

TEST_CASE("unitary covariance: f(U M U*) = U f(M) U*") {
    const HermitianMatrix m = random_hermitian(4, 19);
    const Matrix u = spectral_decompose(random_hermitian(4, 23)).eigenvectors;
    const HermitianMatrix rotated(u * m.raw() * u.adjoint());
    const HermitianMatrix lhs = apply_spectral_function(rotated, [](double t) { return std::exp(t); });
    const Matrix rhs = u * apply_spectral_function(m, [](double t) { return std::exp(t); }).raw() * u.adjoint();
    CHECK((lhs.raw() - rhs).frobenius_norm() <= 1e-10 * std::max(1.0, lhs.frobenius_norm()));
}

TEST_CASE("random_psd kinds") {
    SECTION("PD 1x1 is a positive scalar") {
        const HermitianMatrix m = random_psd(1, 3, SampleKind::PD);
        CHECK(m(0, 0).real() > 0.0);
    }
    SECTION("density has unit trace and positive spectrum") {
        const HermitianMatrix m = random_psd(3, 4, SampleKind::Density);
        CHECK(m.trace() == Catch::Approx(1.0).margin(1e-12));
        CHECK(spectral_decompose(m).eigenvalues.back() > 0.0);
    }
    SECTION("projection: idempotent, Hermitian, rank 1 in dim 2") {
        const HermitianMatrix p = random_psd(2, 7, SampleKind::Projection);
        CHECK((p.raw() * p.raw() - p.raw()).frobenius_norm() <= 1e-12);
        CHECK(p.trace() == Catch::Approx(1.0).margin(1e-10));
        CHECK_THROWS_AS(random_psd(1, 7, SampleKind::Projection), InvalidDim);
    }
    SECTION("PSD sample is PSD and condition cap holds for PD") {
        const HermitianMatrix w = random_psd(4, 9, SampleKind::PSD);
        CHECK(spectral_decompose(w).eigenvalues.back() >= -1e-12);
        const HermitianMatrix pd = random_psd(4, 9, SampleKind::PD);
        const auto eigs = spectral_decompose(pd).eigenvalues;
        CHECK(eigs.front() / eigs.back() <= 1e8);
    }
    SECTION("determinism: identical (n, seed, kind) gives identical bits") {
        for (SampleKind kind :
             {SampleKind::PSD, SampleKind::PD, SampleKind::Density, SampleKind::Projection}) {
            const HermitianMatrix a = random_psd(3, 1234, kind);
            const HermitianMatrix b = random_psd(3, 1234, kind);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) CHECK(a(i, j) == b(i, j));
        }
    }
}

TEST_CASE("hmat round-trip and rejection") {
    const HermitianMatrix m = random_hermitian(3, 77);
    std::ostringstream os;
    write_hmat(os, m);
    std::istringstream is(os.str());
    const HermitianMatrix back = read_hmat(is);
    REQUIRE(back.dim() == 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(back(i, j) == m(i, j));

    SECTION("non-Hermitian input is rejected") {
        std::istringstream bad("HMAT 1 2\n1 0 5 0\n-5 0 1 0\n");
        CHECK_THROWS_AS(read_hmat(bad), HmatParseError);
    }
    SECTION("malformed entry reports line and column") {
        std::istringstream bad("HMAT 1 2\n1 0 2 0\n2 0 oops 0\n");
        try {
            read_hmat(bad);
            FAIL("expected parse error");
        } catch (const HmatParseError& e) {
            CHECK(e.line == 3);
            CHECK(e.column == 5);
        }
    }
    SECTION("short row is rejected") {
        std::istringstream bad("HMAT 1 2\n1 0\n0 0 1 0\n");
        CHECK_THROWS_AS(read_hmat(bad), HmatParseError);
    }
    SECTION("tiny anti-Hermitian dirt is symmetrized away") {
        std::istringstream nearly("HMAT 1 2\n1 0 0.5 1e-14\n0.5 1e-14 2 0\n");
        const HermitianMatrix h = read_hmat(nearly);
        CHECK(h(0, 1) == std::conj(h(1, 0)));
    }
    SECTION("bad headers") {
        for (const char* text : {"", "XMAT 1 2\n1 0\n", "HMAT 2 2\n1 0\n", "HMAT 1 0\n",
                                 "HMAT 1 65\n", "HMAT 1 x\n"}) {
            std::istringstream bad(text);
            CHECK_THROWS_AS(read_hmat(bad), HmatParseError);
        }
    }
    SECTION("truncated input") {
        std::istringstream bad("HMAT 1 2\n1 0 0 0\n");
        CHECK_THROWS_AS(read_hmat(bad), HmatParseError);
    }
    SECTION("extreme magnitudes survive the round trip bit-exactly") {
        Matrix wide(2);
        wide(0, 0) = 1.0 + 1e-14;
        wide(0, 1) = cplx(3.0e-9, -2.0e7);
        wide(1, 0) = std::conj(wide(0, 1));
        wide(1, 1) = 1e10;
        const HermitianMatrix m(wide);
        std::ostringstream os;
        write_hmat(os, m);
        std::istringstream is(os.str());
        const HermitianMatrix back = read_hmat(is);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) CHECK(back(i, j) == m(i, j));
    }
}

TEST_CASE("spectral_decompose is deterministic") {
    const HermitianMatrix m = random_hermitian(5, 99);
    const auto d1 = spectral_decompose(m);
    const auto d2 = spectral_decompose(m);
    for (std::size_t i = 0; i < d1.eigenvalues.size(); ++i)
        CHECK(d1.eigenvalues[i] == d2.eigenvalues[i]);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) CHECK(d1.eigenvectors(i, j) == d2.eigenvectors(i, j));
}
