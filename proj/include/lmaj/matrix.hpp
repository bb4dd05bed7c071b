// matrix.hpp — dense complex matrices at desk scale (n <= 64).
//
// Two types:
//   Matrix           general complex n x n, row-major, value semantics
//   HermitianMatrix  storage-enforced Hermitian (symmetrized on construction)
//
// Everything downstream (spectral calculus, the two-variable matrix functions,
// majorization predicates) works on these.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "lmaj/errors.hpp"

namespace lmaj {

using cplx = std::complex<double>;

inline constexpr int kMaxDim = 64;

class Matrix {
  public:
    Matrix() = default;
    explicit Matrix(int n) : n_(check_dim(n)), a_(static_cast<std::size_t>(n) * n) {}

    Matrix(int n, std::initializer_list<cplx> entries) : Matrix(n) {
        if (static_cast<int>(entries.size()) != n * n)
            throw DimensionMismatch("initializer size does not match dimension");
        std::copy(entries.begin(), entries.end(), a_.begin());
    }

    static Matrix identity(int n) {
        Matrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int dim() const { return n_; }

    cplx& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const cplx& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    Matrix adjoint() const {
        Matrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r(j, i) = std::conj((*this)(i, j));
        return r;
    }

    cplx trace() const {
        cplx t = 0.0;
        for (int i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const cplx& v : a_) s += std::norm(v);
        return std::sqrt(s);
    }

    Matrix& operator+=(const Matrix& o) {
        same_dim(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        same_dim(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    Matrix& operator*=(cplx s) {
        for (cplx& v : a_) v *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, cplx s) { return a *= s; }
    friend Matrix operator*(cplx s, Matrix a) { return a *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        a.same_dim(b);
        const int n = a.n_;
        Matrix c(n);
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < n; ++k) {
                const cplx aik = a(i, k);
                if (aik == 0.0) continue;
                for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
            }
        }
        return c;
    }

  private:
    static int check_dim(int n) {
        if (n < 1) throw InvalidDim("matrix dimension must be >= 1");
        if (n > kMaxDim) throw InvalidDim("matrix dimension exceeds cap of 64");
        return n;
    }
    void same_dim(const Matrix& o) const {
        if (n_ != o.n_) throw DimensionMismatch("matrix dimensions differ");
    }

    int n_ = 0;
    std::vector<cplx> a_;
};

// Hermitian by construction: every constructor stores (M + M*)/2, so
// entries[i][j] == conj(entries[j][i]) holds exactly and diagonals are real.
class HermitianMatrix {
  public:
    HermitianMatrix() = default;
    explicit HermitianMatrix(int n) : m_(n) {}

    explicit HermitianMatrix(const Matrix& m) : m_(m) { symmetrize(); }

    HermitianMatrix(int n, std::initializer_list<cplx> entries) : m_(n, entries) { symmetrize(); }

    static HermitianMatrix identity(int n) { return HermitianMatrix(Matrix::identity(n)); }

    static HermitianMatrix diagonal(std::initializer_list<double> d) {
        Matrix m(static_cast<int>(d.size()));
        int i = 0;
        for (double v : d) m(i, i) = v, ++i;
        return HermitianMatrix(m);
    }

    static HermitianMatrix diagonal(const std::vector<double>& d) {
        Matrix m(static_cast<int>(d.size()));
        for (int i = 0; i < m.dim(); ++i) m(i, i) = d[static_cast<std::size_t>(i)];
        return HermitianMatrix(m);
    }

    int dim() const { return m_.dim(); }
    const cplx& operator()(int i, int j) const { return m_(i, j); }
    const Matrix& raw() const { return m_; }

    double trace() const { return m_.trace().real(); }
    double frobenius_norm() const { return m_.frobenius_norm(); }

    HermitianMatrix& operator+=(const HermitianMatrix& o) {
        m_ += o.m_;
        return *this;
    }
    HermitianMatrix& operator-=(const HermitianMatrix& o) {
        m_ -= o.m_;
        return *this;
    }
    HermitianMatrix& operator*=(double s) {
        m_ *= cplx(s, 0.0);
        return *this;
    }

    friend HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix& b) { return a += b; }
    friend HermitianMatrix operator-(HermitianMatrix a, const HermitianMatrix& b) { return a -= b; }
    friend HermitianMatrix operator*(HermitianMatrix a, double s) { return a *= s; }
    friend HermitianMatrix operator*(double s, HermitianMatrix a) { return a *= s; }

  private:
    void symmetrize() {
        const int n = m_.dim();
        for (int i = 0; i < n; ++i) {
            m_(i, i) = cplx(m_(i, i).real(), 0.0);
            for (int j = i + 1; j < n; ++j) {
                const cplx v = 0.5 * (m_(i, j) + std::conj(m_(j, i)));
                m_(i, j) = v;
                m_(j, i) = std::conj(v);
            }
        }
    }

    Matrix m_;
};

// X * M * X for Hermitian X, M; the result is Hermitian up to rounding and
// gets re-symmetrized on construction.
inline HermitianMatrix sandwich(const HermitianMatrix& x, const HermitianMatrix& m) {
    return HermitianMatrix(x.raw() * m.raw() * x.raw());
}

inline double commutator_norm(const HermitianMatrix& a, const HermitianMatrix& b) {
    return (a.raw() * b.raw() - b.raw() * a.raw()).frobenius_norm();
}

}  // namespace lmaj
