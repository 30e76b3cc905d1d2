#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "fermiphase/expr/eval.hpp"
#include "fermiphase/expr/parser.hpp"
#include "fermiphase/sweep.hpp"
#include "fermiphase/verification.hpp"

namespace {

int write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open '" << path << "' for writing\n";
        return 2;
    }
    out << content;
    return out.good() ? 0 : 2;
}

std::pair<double, double> parse_range(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw fermiphase::domain_error("range must look like LO:HI");
    return {std::stod(text.substr(0, colon)), std::stod(text.substr(colon + 1))};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computer algebra for fermionic phase-space distributions"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand(
        "verify", "Run the full identity/inequality suite; exit 0 iff everything passes");
    std::string mode = "all";
    verify->add_option("--mode", mode, "exact | float | all")
        ->check(CLI::IsMember({"exact", "float", "all"}))
        ->capture_default_str();
    int grid_points = 513;
    verify->add_option("--grid", grid_points, "number of nbar grid points")
        ->capture_default_str();
    std::vector<double> orders = {0.25, 0.5, 1.0, 2.0, 4.0};
    verify->add_option("--orders", orders, "entropic orders")->delimiter(',');
    std::string json_path;
    verify->add_option("--json", json_path, "write the JSON report to this path");
    double tol = 1e-12;
    verify->add_option("--tol", tol, "float-mode tolerance")->capture_default_str();
    bool quiet = false;
    verify->add_flag("--quiet", quiet, "suppress the per-check lines");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Emit the disorder-measure grid as CSV");
    fermiphase::SweepOptions sweep_opts;
    sweep->add_option("--from", sweep_opts.from, "grid start")->capture_default_str();
    sweep->add_option("--to", sweep_opts.to, "grid end")->capture_default_str();
    sweep->add_option("--step", sweep_opts.step, "grid step (default 1/512)");
    sweep->add_option("--orders", sweep_opts.orders, "entropic orders")->delimiter(',');
    std::string sweep_out;
    sweep->add_option("--out", sweep_out, "output CSV path (default stdout)");

    // fermi-dirac
    auto* fermi = app.add_subcommand(
        "fermi-dirac", "Emit (eps/T, nbar) pairs of the Fermi-Dirac parametrization");
    std::string ratio_range = "-10:10";
    fermi->add_option("--ratio-range", ratio_range, "eps/T range as LO:HI")
        ->capture_default_str();
    double ratio_step = 0.1;
    fermi->add_option("--step", ratio_step, "ratio step")->capture_default_str();
    std::string fermi_out;
    fermi->add_option("--out", fermi_out, "output CSV path (default stdout)");

    // eval
    auto* eval = app.add_subcommand("eval", "Evaluate an expression to canonical form");
    std::string expression;
    eval->add_option("expression", expression, "expression text")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            fermiphase::VerifyOptions opts;
            opts.grid_points = grid_points;
            opts.orders = orders;
            opts.tol = tol;
            opts.exact_identities = mode != "float";
            opts.numeric_checks = mode != "exact";
            fermiphase::VerificationReport report = fermiphase::run_full_verification(opts);
            if (!quiet) std::cout << report.summary();
            std::cout << (report.all_pass() ? "all checks passed" : "FAILURES: ")
                      << (report.all_pass() ? "" : std::to_string(report.failure_count()))
                      << " (" << report.checks.size() << " checks)\n";
            if (!json_path.empty()) {
                int rc = write_output(json_path, report.to_json_string());
                if (rc != 0) return rc;
            }
            return report.all_pass() ? 0 : 1;
        }
        if (sweep->parsed()) {
            return write_output(sweep_out, fermiphase::sweep_csv(sweep_opts));
        }
        if (fermi->parsed()) {
            auto [lo, hi] = parse_range(ratio_range);
            return write_output(fermi_out, fermiphase::fermi_dirac_csv(lo, hi, ratio_step));
        }
        if (eval->parsed()) {
            std::cout << fermiphase::expr::eval_to_string(expression) << "\n";
            return 0;
        }
    } catch (const fermiphase::expr::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const fermiphase::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const fermiphase::algebra_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
