// cli_detail.hpp — argument bundles and command implementations behind the CLI.

#pragma once

#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lmaj/divergences.hpp"
#include "lmaj/harness.hpp"
#include "lmaj/hmat_io.hpp"
#include "lmaj/perturbation.hpp"
#include "lmaj/suites.hpp"

namespace lmaj::cli_detail {

using nlohmann::json;

struct VerifyArgs {
    std::string suite;
    int samples = 200;
    std::vector<int> dims{2, 3};
    std::uint64_t seed = 0;
    std::string format = "text";
};

struct ScanArgs {
    std::string alpha_range, z_range;
    int samples = 200;
    std::vector<int> dims{2, 3};
    std::uint64_t seed = 0;
    std::string out;
    std::string witnesses;
    std::string format = "text";
};

struct WitnessArgs {
    double alpha = 0.0, z = 0.0;
    std::string direction;
    int budget = 1000;
    std::uint64_t seed = 0;
    std::string format = "text";
};

struct DivergenceArgs {
    std::string a_file, b_file;
    double alpha = 0.0;
    std::optional<double> z;
    std::string format = "text";
};

struct ExpandArgs {
    double alpha = 0.0, z = 0.0, x = 0.0, y = 0.0, theta = 0.0;
    std::string format = "text";
};

inline void validate_dims(const std::vector<int>& dims) {
    if (dims.empty()) throw ConfigError("--dims must name at least one dimension");
    for (int d : dims)
        if (d < 1 || d > kMaxDim) throw ConfigError("--dims entries must lie in 1..64");
}

inline int run_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
    validate_dims(args.dims);
    SuiteConfig cfg;
    cfg.dims = args.dims;
    cfg.samples = args.samples;
    cfg.seed = args.seed;

    std::vector<std::string> names;
    if (args.suite == "all") {
        names = suite_names();
    } else {
        names.push_back(args.suite);
    }

    bool any_failures = false;
    json jreports = json::array();
    for (const std::string& name : names) {
        const SuiteReport rep = run_suite(name, cfg);
        any_failures |= !rep.passed();
        if (args.format == "json") {
            json jf = json::array();
            for (const SuiteFailure& f : rep.failures)
                jf.push_back({{"case", f.case_id}, {"description", f.description}, {"margin", f.margin}});
            jreports.push_back({{"suite", rep.suite_name},
                                {"cases", rep.cases_run},
                                {"failures", jf},
                                {"warnings", rep.warnings},
                                {"notes", rep.notes},
                                {"seed", rep.seed},
                                {"passed", rep.passed()}});
        } else {
            out << "suite " << rep.suite_name << ": cases " << rep.cases_run << ", failures "
                << rep.failures.size() << ", warnings " << rep.warnings.size() << ", seed "
                << rep.seed << (rep.passed() ? " [PASS]" : " [FAIL]") << "\n";
            for (const std::string& n : rep.notes) out << "  note: " << n << "\n";
            for (const SuiteFailure& f : rep.failures) {
                char buf[64];
                std::snprintf(buf, sizeof buf, "%.6g", f.margin);
                err << "  FAIL " << rep.suite_name << " case " << f.case_id << ": "
                    << f.description << " (margin " << buf << ", replay --seed " << rep.seed
                    << ")\n";
            }
        }
    }
    if (args.format == "json") out << jreports.dump(2) << "\n";
    return any_failures ? 1 : 0;
}

inline int run_scan(const ScanArgs& args, std::ostream& out, std::ostream& err) {
    validate_dims(args.dims);
    const GridAxis alpha_axis = GridAxis::parse(args.alpha_range);
    const GridAxis z_axis = GridAxis::parse(args.z_range);
    const RegionMap map =
        scan_region(alpha_axis, z_axis, args.dims, args.samples, args.seed);

    {
        std::ofstream f(args.out, std::ios::binary);
        if (!f) throw ConfigError("cannot open output file '" + args.out + "'");
        f << map.to_csv();
    }
    if (!args.witnesses.empty()) {
        std::ofstream f(args.witnesses, std::ios::binary);
        if (!f) throw ConfigError("cannot open witness file '" + args.witnesses + "'");
        f << map.witnesses_to_text();
    }

    const ScanSummary sum = summarize(map);
    if (args.format == "json") {
        // mirrors the CSV fields 1:1, one flat object per cell
        json cells = json::array();
        for (const RegionCell& c : map.cells)
            cells.push_back({{"alpha", c.alpha},
                             {"z", c.z},
                             {"predicted", to_string(c.predicted)},
                             {"pq_status", c.pq.to_string()},
                             {"qp_status", c.qp.to_string()},
                             {"samples", c.samples_tried}});
        out << cells.dump(2) << "\n";
    } else {
        out << "scan: " << sum.cells << " cells, " << args.samples << " samples/cell, seed "
            << args.seed << "\n";
        out << "violations in predicted cells: " << sum.predicted_cell_violations << "\n";
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.1f", 100.0 * sum.gap_coverage());
        out << "gap cells: " << sum.gap_cells << ", both-direction witnesses: "
            << sum.gap_cells_with_both << " (" << buf << "%)\n";
        out << "wrote " << args.out << "\n";
    }
    if (sum.predicted_cell_violations > 0) {
        err << "property violation: " << sum.predicted_cell_violations
            << " predicted-region cells falsified (seed " << args.seed << ")\n";
        return 1;
    }
    return 0;
}

inline int run_witness(const WitnessArgs& args, std::ostream& out, std::ostream& err) {
    (void)err;
    const Direction dir = args.direction == "pq" ? Direction::PQ : Direction::QP;
    const auto w = find_witness(args.alpha, args.z, dir, args.budget, args.seed);
    if (args.format == "json") {
        json j;
        j["found"] = w.has_value();
        if (w) {
            std::ostringstream a_text, b_text;
            write_hmat(a_text, w->a);
            write_hmat(b_text, w->b);
            j["alpha"] = w->alpha;
            j["z"] = w->z;
            j["direction"] = to_string(w->direction);
            j["violated_at_k"] = w->violated_at_k;
            j["margin"] = w->margin;
            j["source"] = w->source.to_string();
            j["A"] = a_text.str();
            j["B"] = b_text.str();
        }
        out << j.dump(2) << "\n";
        return 0;
    }
    if (!w) {
        out << "NOTFOUND\n";
        return 0;
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "WITNESS %.10g %.10g %s ", w->alpha, w->z,
                  to_string(w->direction));
    out << buf << w->source.to_string() << "\n";
    std::snprintf(buf, sizeof buf, "violated at k=%d, margin %.6g", w->violated_at_k, w->margin);
    out << buf << "\n";
    write_hmat(out, w->a);
    write_hmat(out, w->b);
    return 0;
}

inline HermitianMatrix read_hmat_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open HMAT file '" + path + "'");
    return read_hmat(f);
}

inline int run_divergence(const DivergenceArgs& args, std::ostream& out, std::ostream& err) {
    (void)err;
    const HermitianMatrix a = read_hmat_file(args.a_file);
    const HermitianMatrix b = read_hmat_file(args.b_file);
    const DivergenceReport rep = divergence_ordering(a, b, args.alpha, args.z);
    if (args.format == "json") {
        json j{{"alpha", rep.alpha},
               {"petz", rep.d_petz},
               {"sandwiched", rep.d_sandwiched},
               {"maximal", rep.d_maximal},
               {"ordering_satisfied", rep.ordering_satisfied}};
        if (rep.d_alpha_z) {
            j["z"] = *rep.z;
            j["alpha_z"] = *rep.d_alpha_z;
        }
        out << j.dump(2) << "\n";
        return 0;
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "petz        %.12g\n", rep.d_petz);
    out << buf;
    std::snprintf(buf, sizeof buf, "sandwiched  %.12g\n", rep.d_sandwiched);
    out << buf;
    std::snprintf(buf, sizeof buf, "maximal     %.12g\n", rep.d_maximal);
    out << buf;
    if (rep.d_alpha_z) {
        std::snprintf(buf, sizeof buf, "alpha-z     %.12g  (z=%.10g)\n", *rep.d_alpha_z, *rep.z);
        out << buf;
    }
    out << "ordering (sandwiched/petz/maximal): " << (rep.ordering_satisfied ? "satisfied" : "VIOLATED")
        << "\n";
    return 0;
}

inline int run_expand(const ExpandArgs& args, std::ostream& out, std::ostream& err) {
    (void)err;
    const ExpansionReport rep =
        expansion_consistency(args.alpha, args.z, args.x, args.y, args.theta);
    if (args.format == "json") {
        out << json{{"alpha", args.alpha},      {"z", args.z},
                    {"x", args.x},              {"y", args.y},
                    {"theta", args.theta},      {"cP_analytic", rep.analytic_p},
                    {"cP_fd", rep.fd_p},        {"cQ_analytic", rep.analytic_q},
                    {"cQ_fd", rep.fd_q},        {"rel_err_p", rep.rel_err_p},
                    {"rel_err_q", rep.rel_err_q}, {"pass", rep.pass}}
                   .dump(2)
            << "\n";
        return 0;
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "cP  analytic %.12g   finite-diff %.12g   rel err %.3g\n",
                  rep.analytic_p, rep.fd_p, rep.rel_err_p);
    out << buf;
    std::snprintf(buf, sizeof buf, "cQ  analytic %.12g   finite-diff %.12g   rel err %.3g\n",
                  rep.analytic_q, rep.fd_q, rep.rel_err_q);
    out << buf;
    out << (rep.pass ? "consistent\n" : "INCONSISTENT\n");
    return 0;
}

}  // namespace lmaj::cli_detail
