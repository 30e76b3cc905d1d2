#pragma once

#include <functional>

#include "fermiphase/covariance.hpp"

namespace fermiphase {

/// Renyi entropy value of a phase-space distribution, +inf exactly when the
/// body vanishes (the Wigner distribution at nbar = 1/2).
struct EntropyValue {
    double order; // r; 1 means the Shannon limit
    double value;
    bool infinite;
    DistributionKind kind;
    double nbar;
};

/// S_r(z) = ln r / (1 - r) - ln |z_B| for r != 1, and -1 - ln |z_B| in the
/// Shannon limit, from the identity Int Dalpha |z|^r = r |z_B|^(r-1).
EntropyValue renyi_entropy(const PhaseSpaceDistribution& z, double r);

/// The r-dependent additive constant ln r / (1 - r), with its r -> 1 limit -1.
double renyi_constant(double r);

/// Independent route for the defining integral: applies f(x) = |x|^r through
/// the superfunction machinery to z (body > 0) or to the sign-flipped image
/// of -z under alpha -> i alpha (body < 0), then Berezin-integrates.
double renyi_integral_via_kernel(const PhaseSpaceDistribution& z, double r);

/// Image of -z under alpha -> i alpha, alpha* -> i alpha*: a normalized
/// positive-bodied distribution when z_B < 0 (the change of Grassmann
/// variables carries the inverse Jacobian -1).
SuperElement sign_flipped(const PhaseSpaceDistribution& z);

/// Concave test function with f(0) = 0 for majorization witnessing.
struct ConcaveTestFunction {
    std::string name;
    std::function<double(double)> f;
    std::function<double(double)> fprime;
    std::vector<double> nondifferentiable; // exception set of f'
    double param = 0.0;
    std::function<ConcaveTestFunction(double)> with_param; // rebuilds at a shifted parameter
};

/// Hinge f_t(x) = min(x, t) - min(0, t); its derivative is the step 1_{x<t}.
ConcaveTestFunction hinge_function(double t);

/// 25 hinges over [-1.25, 1.25] plus -x^2 and the identity (27 functions).
std::vector<ConcaveTestFunction> default_concave_family();

/// Checks f(0) = 0 exactly and midpoint concavity on a grid over [lo, hi].
void validate_test_function(const ConcaveTestFunction& f, double lo = -1.5, double hi = 1.5,
                            double tol = 1e-12);

/// Int Dalpha f(z) = f'(z_B); throws when z_B sits in the exception set.
double concave_average(const ConcaveTestFunction& f, const PhaseSpaceDistribution& z);

/// Same quantity through apply_superfunction + berezin_integrate.
double concave_average_via_kernel(const ConcaveTestFunction& f,
                                  const PhaseSpaceDistribution& z);

} // namespace fermiphase
