#pragma once

#include <map>
#include <string>
#include <vector>

#include "fermiphase/majorization.hpp"

namespace fermiphase {

struct VerificationCheck {
    std::string name;
    std::map<std::string, double> params;
    double lhs = 0.0;
    double rhs = 0.0;
    bool pass = false;
    double tolerance = 0.0;
};

struct VerificationReport {
    std::vector<VerificationCheck> checks;

    bool all_pass() const;
    size_t failure_count() const;
    void add(VerificationCheck c) { checks.push_back(std::move(c)); }
    /// Convenience for exact yes/no identities (lhs = holds, rhs = 1, tol = 0).
    void add_exact(const std::string& name, bool holds,
                   std::map<std::string, double> params = {});
    void merge(const VerificationReport& other);

    std::string to_json_string() const; // schema: check-name, parameters, lhs, rhs, pass, tolerance
    std::string summary() const;        // one [PASS]/[FAIL] line per check
};

/// Solves S_r(W) = S_r(Q) for nbar in (1/2, 1) by bisection to 1e-12.
/// The r-dependent offset cancels, so the answer is 3/4 for every order.
double find_wq_crossing(double r);

/// Uniform grid over [0, 1] with the given number of points (endpoints included).
std::vector<double> nbar_grid(int points);

/// Pointwise second-moment and entropic uncertainty relations plus the
/// S_r <-> det gamma equivalence, over the grid and entropic orders.
VerificationReport verify_uncertainty_relations(const std::vector<double>& grid,
                                                const std::vector<double>& orders,
                                                double tol = 1e-12);

struct VerifyOptions {
    int grid_points = 513;
    std::vector<double> orders = {0.25, 0.5, 1.0, 2.0, 4.0};
    double tol = 1e-12;
    bool exact_identities = true;
    bool numeric_checks = true;
};

/// The full identity/inequality suite: exact symbolic identities, the
/// uncertainty-relation grid, majorization chains, the Fig. 2 crossing,
/// symmetry/monotonicity properties and the Fermi-Dirac parametrization.
VerificationReport run_full_verification(const VerifyOptions& options = {});

} // namespace fermiphase
