// hmat_io.hpp — the "HMAT 1" matrix text format.
//
//   line 1:       HMAT 1 <n>
//   lines 2..n+1: n entries per line, each entry "re im", whitespace-separated
//
// The reader symmetrizes M <- (M + M*)/2 and rejects input whose
// anti-Hermitian part exceeds 1e-10 * max(1, ||M||_F) in Frobenius norm.

#pragma once

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>

#include "lmaj/matrix.hpp"

namespace lmaj {

inline void write_hmat(std::ostream& os, const HermitianMatrix& m) {
    const int n = m.dim();
    os << "HMAT 1 " << n << "\n";
    char buf[64];
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            std::snprintf(buf, sizeof buf, "%.17g %.17g", m(i, j).real(), m(i, j).imag());
            os << (j ? " " : "") << buf;
        }
        os << "\n";
    }
}

namespace detail {

struct TokenScanner {
    const std::string& text;
    int line;
    std::size_t pos = 0;

    // Returns the next whitespace-delimited token on this line, or empty.
    std::string next(int& col_out) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        col_out = static_cast<int>(pos) + 1;
        std::size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        return text.substr(start, pos - start);
    }
};

inline double parse_real(const std::string& tok, int line, int col) {
    double v = 0.0;
    const char* begin = tok.data();
    const char* end = begin + tok.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end)
        throw HmatParseError(line, col, "expected a real number, got '" + tok + "'");
    if (!std::isfinite(v)) throw HmatParseError(line, col, "non-finite entry");
    return v;
}

}  // namespace detail

inline HermitianMatrix read_hmat(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) throw HmatParseError(1, 1, "empty input");
    {
        detail::TokenScanner sc{header, 1};
        int col;
        const std::string magic = sc.next(col);
        if (magic != "HMAT") throw HmatParseError(1, col, "expected literal 'HMAT'");
        const std::string version = sc.next(col);
        if (version != "1") throw HmatParseError(1, col, "unsupported HMAT version '" + version + "'");
        const std::string dim_tok = sc.next(col);
        if (dim_tok.empty()) throw HmatParseError(1, col, "missing dimension");
        int n = 0;
        try {
            n = std::stoi(dim_tok);
        } catch (...) {
            throw HmatParseError(1, col, "bad dimension '" + dim_tok + "'");
        }
        if (n < 1 || n > kMaxDim)
            throw HmatParseError(1, col, "dimension must be in 1..64, got " + dim_tok);

        Matrix m(n);
        for (int i = 0; i < n; ++i) {
            std::string row;
            if (!std::getline(is, row))
                throw HmatParseError(2 + i, 1, "unexpected end of input: expected a matrix row");
            detail::TokenScanner rs{row, 2 + i};
            for (int j = 0; j < n; ++j) {
                int c_re, c_im;
                const std::string t_re = rs.next(c_re);
                if (t_re.empty())
                    throw HmatParseError(2 + i, c_re, "row too short: expected entry " + std::to_string(j + 1));
                const std::string t_im = rs.next(c_im);
                if (t_im.empty())
                    throw HmatParseError(2 + i, c_im, "missing imaginary part of entry " + std::to_string(j + 1));
                m(i, j) = cplx(detail::parse_real(t_re, 2 + i, c_re), detail::parse_real(t_im, 2 + i, c_im));
            }
            int c_extra;
            if (!rs.next(c_extra).empty())
                throw HmatParseError(2 + i, c_extra, "trailing data after " + std::to_string(n) + " entries");
        }

        const Matrix anti = (m - m.adjoint()) * cplx(0.5, 0.0);
        if (anti.frobenius_norm() > 1e-10 * std::max(1.0, m.frobenius_norm()))
            throw HmatParseError(2, 1, "matrix is not Hermitian within tolerance");
        return HermitianMatrix(m);
    }
}

}  // namespace lmaj
