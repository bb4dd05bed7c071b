// region.hpp — the (alpha, z) phase diagram: predicted labels, grid axes,
// region cells, witnesses, and their serialized forms.
//
// Predicted labels:
//   PprecQ  P_alpha prec_log Q_{alpha,z} universally
//           (0 < alpha < 1, any z) or (alpha > 1, z <= min{alpha/2, alpha-1})
//   QprecP  Q prec_log P universally (alpha > 1, z >= max{alpha/2, alpha-1})
//   Both    both hold (forces alpha = 2, z = 1)
//   Gap     neither holds universally

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "lmaj/hmat_io.hpp"
#include "lmaj/matrix.hpp"

namespace lmaj {

enum class RegionLabel { PprecQ, QprecP, Both, Gap };

inline const char* to_string(RegionLabel r) {
    switch (r) {
        case RegionLabel::PprecQ: return "PprecQ";
        case RegionLabel::QprecP: return "QprecP";
        case RegionLabel::Both: return "Both";
        case RegionLabel::Gap: return "Gap";
    }
    return "?";
}

inline RegionLabel predicted_region(double alpha, double z) {
    if (!(alpha > 0.0) || !(z > 0.0)) throw DomainError("predicted_region: alpha, z must be positive");
    if (alpha == 1.0) throw DomainError("predicted_region: alpha = 1 is excluded");
    if (alpha < 1.0) return RegionLabel::PprecQ;
    const double lo = std::min(alpha / 2.0, alpha - 1.0);
    const double hi = std::max(alpha / 2.0, alpha - 1.0);
    // closed boundaries, with an ulp-scale snap so that decimal grid points
    // landing exactly on alpha - 1 are not pushed off by binary rounding
    const double snap = 16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, alpha);
    const bool pq = z <= lo + snap;
    const bool qp = z >= hi - snap;
    if (pq && qp) return RegionLabel::Both;
    if (pq) return RegionLabel::PprecQ;
    if (qp) return RegionLabel::QprecP;
    return RegionLabel::Gap;
}

enum class Direction { PQ, QP };  // PQ asserts "P prec_log Q"

inline const char* to_string(Direction d) { return d == Direction::PQ ? "pq" : "qp"; }

struct WitnessSource {
    bool from_family = false;
    double x = 0.0, y = 0.0, theta = 0.0;  // meaningful when from_family

    std::string to_string() const {
        if (!from_family) return "random";
        char buf[96];
        std::snprintf(buf, sizeof buf, "family(x=%.10g,y=%.10g,theta=%.10g)", x, y, theta);
        return buf;
    }
};

struct Witness {
    HermitianMatrix a, b;
    double alpha = 0.0, z = 0.0;
    Direction direction = Direction::PQ;
    int violated_at_k = 0;  // 1-based prefix index
    double margin = 0.0;    // log-scale, negative
    WitnessSource source;
};

struct EmpiricalStatus {
    bool violation_found = false;
    int witness_id = -1;

    std::string to_string() const {
        if (!violation_found) return "NoViolation";
        return "ViolationFound:" + std::to_string(witness_id);
    }
};

struct RegionCell {
    double alpha = 0.0, z = 0.0;
    RegionLabel predicted = RegionLabel::Gap;
    EmpiricalStatus pq, qp;
    long samples_tried = 0;
    // most negative resolvable margin seen per direction (diagnostic)
    double worst_margin_pq = std::numeric_limits<double>::infinity();
    double worst_margin_qp = std::numeric_limits<double>::infinity();
};

// Decimal grid axis "lo:hi:step". Values are generated from the parsed
// decimal numerators so that e.g. 0.1:3:0.1 lands exactly on 2.0 and the
// theorem's closed boundary inequalities evaluate exactly on grid points.
struct GridAxis {
    long long lo_num = 0;    // lo = lo_num / den
    long long step_num = 1;  // step = step_num / den
    long long den = 1;
    double hi = 0.0;

    double step() const { return static_cast<double>(step_num) / static_cast<double>(den); }

    static GridAxis parse(const std::string& spec);

    std::vector<double> values() const {
        std::vector<double> out;
        const double cutoff = hi + 0.5 * step();
        for (long long i = 0;; ++i) {
            const double v =
                static_cast<double>(lo_num + i * step_num) / static_cast<double>(den);
            if (!(v < cutoff)) break;
            out.push_back(v);
            if (out.size() > 100000) throw ConfigError("grid axis has too many points");
        }
        return out;
    }
};

namespace detail {

// "0.1" -> (1, 10); "2" -> (2, 1); "1.25" -> (125, 100)
inline void parse_decimal(const std::string& tok, long long& num, long long& den) {
    if (tok.empty()) throw ConfigError("empty number in range");
    std::size_t pos = 0;
    bool neg = false;
    if (tok[0] == '-' || tok[0] == '+') {
        neg = tok[0] == '-';
        pos = 1;
    }
    long long n = 0;
    long long d = 1;
    bool seen_digit = false, seen_dot = false;
    for (; pos < tok.size(); ++pos) {
        const char c = tok[pos];
        if (c == '.') {
            if (seen_dot) throw ConfigError("bad number '" + tok + "' in range");
            seen_dot = true;
            continue;
        }
        if (c < '0' || c > '9') throw ConfigError("bad number '" + tok + "' in range");
        seen_digit = true;
        if (n > (1ll << 50)) throw ConfigError("number too long in range: '" + tok + "'");
        n = n * 10 + (c - '0');
        if (seen_dot) d *= 10;
    }
    if (!seen_digit) throw ConfigError("bad number '" + tok + "' in range");
    num = neg ? -n : n;
    den = d;
}

}  // namespace detail

inline GridAxis GridAxis::parse(const std::string& spec) {
    const auto c1 = spec.find(':');
    const auto c2 = spec.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw ConfigError("range must look like lo:hi:step, got '" + spec + "'");
    long long lo_n, lo_d, hi_n, hi_d, st_n, st_d;
    detail::parse_decimal(spec.substr(0, c1), lo_n, lo_d);
    detail::parse_decimal(spec.substr(c1 + 1, c2 - c1 - 1), hi_n, hi_d);
    detail::parse_decimal(spec.substr(c2 + 1), st_n, st_d);
    if (st_n <= 0) throw ConfigError("range step must be positive in '" + spec + "'");
    GridAxis axis;
    const long long den = lo_d * st_d;  // small powers of ten
    axis.lo_num = lo_n * st_d;
    axis.step_num = st_n * lo_d;
    axis.den = den;
    axis.hi = static_cast<double>(hi_n) / static_cast<double>(hi_d);
    if (!(axis.hi >= static_cast<double>(axis.lo_num) / static_cast<double>(den)))
        throw ConfigError("range hi must be >= lo in '" + spec + "'");
    return axis;
}

struct RegionMap {
    GridAxis alpha_axis, z_axis;
    std::vector<int> dims;
    int samples_per_cell = 0;
    std::uint64_t seed = 0;
    std::vector<RegionCell> cells;
    std::vector<Witness> witnesses;

    std::string to_csv() const {
        std::string out = "alpha,z,predicted,pq_status,qp_status,samples\n";
        char buf[160];
        for (const RegionCell& c : cells) {
            std::snprintf(buf, sizeof buf, "%.10g,%.10g,%s,", c.alpha, c.z, to_string(c.predicted));
            out += buf;
            out += c.pq.to_string();
            out += ',';
            out += c.qp.to_string();
            out += ',';
            out += std::to_string(c.samples_tried);
            out += '\n';
        }
        return out;
    }

    std::string witnesses_to_text() const {
        std::ostringstream os;
        char buf[128];
        for (const Witness& w : witnesses) {
            std::snprintf(buf, sizeof buf, "WITNESS %.10g %.10g %s ", w.alpha, w.z,
                          to_string(w.direction));
            os << buf << w.source.to_string() << "\n";
            write_hmat(os, w.a);
            write_hmat(os, w.b);
        }
        return os.str();
    }
};

}  // namespace lmaj
