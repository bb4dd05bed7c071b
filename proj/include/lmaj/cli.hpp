// cli.hpp — command-line front end.
//
//   verify      run property suites            (exit 1 on any suite failure)
//   scan        sweep the (alpha, z) grid      (exit 1 on predicted-cell violation)
//   witness     hunt a counterexample at one (alpha, z)
//   divergence  evaluate the divergence family on HMAT inputs
//   expand      analytic vs finite-difference expansion coefficients
//
// Exit codes: 0 all asserted checks passed; 1 property violation;
// 2 usage/config error; 3 numerical failure.

#pragma once

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "lmaj/cli_detail.hpp"

namespace lmaj {

inline int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"log-majorization and Renyi-divergence verification for P_alpha and Q_{alpha,z}"};
    app.require_subcommand(1);

    cli_detail::VerifyArgs verify_args;
    cli_detail::ScanArgs scan_args;
    cli_detail::WitnessArgs witness_args;
    cli_detail::DivergenceArgs div_args;
    cli_detail::ExpandArgs expand_args;

    CLI::App* verify = app.add_subcommand("verify", "run one or all property suites");
    verify->add_option("--suite", verify_args.suite, "suite id or 'all'")->required();
    verify->add_option("--samples", verify_args.samples, "sampled cases per suite");
    verify->add_option("--dims", verify_args.dims, "matrix dimensions")->delimiter(',');
    verify->add_option("--seed", verify_args.seed, "master seed");
    verify->add_option("--format", verify_args.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* scan = app.add_subcommand("scan", "scan the (alpha, z) grid against the prediction");
    scan->add_option("--alpha", scan_args.alpha_range, "alpha range lo:hi:step")->required();
    scan->add_option("--z", scan_args.z_range, "z range lo:hi:step")->required();
    scan->add_option("--samples", scan_args.samples, "samples per cell");
    scan->add_option("--dims", scan_args.dims, "matrix dimensions")->delimiter(',');
    scan->add_option("--seed", scan_args.seed, "master seed");
    scan->add_option("--out", scan_args.out, "CSV output file")->required();
    scan->add_option("--witnesses", scan_args.witnesses, "witness sidecar file");
    scan->add_option("--format", scan_args.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* witness = app.add_subcommand("witness", "search for a violation witness");
    witness->add_option("--alpha", witness_args.alpha, "alpha")->required();
    witness->add_option("--z", witness_args.z, "z")->required();
    witness->add_option("--direction", witness_args.direction, "pq|qp")
        ->required()
        ->check(CLI::IsMember({"pq", "qp"}));
    witness->add_option("--budget", witness_args.budget, "random-sample budget");
    witness->add_option("--seed", witness_args.seed, "master seed");
    witness->add_option("--format", witness_args.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* divergence = app.add_subcommand("divergence", "evaluate the divergence family");
    divergence->add_option("--A", div_args.a_file, "HMAT file for A")->required();
    divergence->add_option("--B", div_args.b_file, "HMAT file for B")->required();
    divergence->add_option("--alpha", div_args.alpha, "alpha")->required();
    divergence->add_option("--z", div_args.z, "optional z for the alpha-z divergence");
    divergence->add_option("--format", div_args.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* expand = app.add_subcommand("expand", "trace-expansion coefficients at (x, y, theta)");
    expand->add_option("--alpha", expand_args.alpha, "alpha (> 1)")->required();
    expand->add_option("--z", expand_args.z, "z")->required();
    expand->add_option("--x", expand_args.x, "family parameter x")->required();
    expand->add_option("--y", expand_args.y, "family parameter y")->required();
    expand->add_option("--theta", expand_args.theta, "rotation angle in (0, 0.05]")->required();
    expand->add_option("--format", expand_args.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.get_name() << ": " << e.what() << "\n";
        return 2;
    }

    try {
        if (verify->parsed()) return cli_detail::run_verify(verify_args, out, err);
        if (scan->parsed()) return cli_detail::run_scan(scan_args, out, err);
        if (witness->parsed()) return cli_detail::run_witness(witness_args, out, err);
        if (divergence->parsed()) return cli_detail::run_divergence(div_args, out, err);
        if (expand->parsed()) return cli_detail::run_expand(expand_args, out, err);
    } catch (const NonConvergence& e) {
        err << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const HmatParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

inline int cli_main(int argc, const char* const* argv) {
    return cli_main(argc, argv, std::cout, std::cerr);
}

}  // namespace lmaj
