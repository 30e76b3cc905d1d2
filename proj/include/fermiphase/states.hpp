#pragma once

#include "fermiphase/kernel.hpp"

namespace fermiphase {

/// Single-mode fermionic density operator
/// rho = (1 - nbar) a ad + lambda a + lambda* ad + nbar ad a.
/// Physical states obey the parity superselection rule (lambda = 0).
struct DensityOperator {
    SuperElement element;
    Scalar nbar;
    Scalar lambda;
    bool physical;
};

/// Builds the general density operator. Positivity |lambda|^2 <= nbar(1-nbar)
/// is checked exactly for constant parameters and recorded as an assumption
/// for symbolic ones.
DensityOperator make_state(const AlgebraContextPtr& ctx, const Scalar& nbar,
                           const Scalar& lambda);

/// tr(rho^2); physical states only, where it equals 1 - 2 nbar (1 - nbar).
Scalar purity(const DensityOperator& rho);

/// Fermi-Dirac parametrization nbar = e^nu/(1+e^nu) = 1/(1+e^(eps/T)),
/// nu = -eps/T. Endpoints are returned as exact values rather than
/// overflowing exponentials: T -> 0+ gives nbar = 0, T -> 0- gives
/// nbar = 1, |T| -> inf gives nbar = 1/2.
struct ThermalParams {
    double nbar;
    double nu;          // +-inf at the pure states
    double epsilon;     // excitation energy > 0
    double temperature; // signed; +-0 at the pure states, +inf when nbar = 1/2
};

ThermalParams thermal_from_nbar(double nbar, double epsilon = 1.0);
ThermalParams thermal_from_nu(double nu, double epsilon = 1.0);
ThermalParams thermal_from_temperature(double epsilon, double temperature);

} // namespace fermiphase
