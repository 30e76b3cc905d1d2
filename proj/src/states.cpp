#include "fermiphase/states.hpp"

#include <cmath>
#include <limits>

namespace fermiphase {

DensityOperator make_state(const AlgebraContextPtr& ctx, const Scalar& nbar,
                           const Scalar& lambda) {
    if (!ctx->has_mode())
        throw context_error("make_state: context has no mode operators");

    if (nbar.is_constant()) {
        std::complex<double> n = nbar.as_complex();
        if (n.imag() != 0.0 || n.real() < 0.0 || n.real() > 1.0)
            throw domain_error("make_state: nbar must lie in [0, 1]");
        if (lambda.is_constant()) {
            double bound = n.real() * (1.0 - n.real());
            double l2 = std::norm(lambda.as_complex());
            if (l2 > bound + 1e-12)
                throw invalid_state_error(
                    "make_state: positivity requires |lambda|^2 <= nbar(1-nbar) = " +
                    std::to_string(bound) + ", got |lambda|^2 = " + std::to_string(l2));
        }
    }

    const int cr = ctx->creation_index();
    const int an = ctx->annihilation_index();
    SuperElement e(ctx);
    e.add_product_term({an, cr}, Scalar::one() - nbar);
    e.add_product_term({an}, lambda);
    e.add_product_term({cr}, lambda.conj());
    e.add_product_term({cr, an}, nbar);
    return DensityOperator{e, nbar, lambda, lambda.is_zero()};
}

Scalar purity(const DensityOperator& rho) {
    if (!rho.physical)
        throw unsupported_operand_error("purity: defined for physical (lambda = 0) states");
    SuperElement traced = fock_trace(rho.element * rho.element);
    return body(traced);
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}

ThermalParams thermal_from_nbar(double nbar, double epsilon) {
    if (!(nbar >= 0.0 && nbar <= 1.0)) throw domain_error("thermal: nbar must lie in [0, 1]");
    if (!(epsilon > 0.0)) throw domain_error("thermal: epsilon must be positive");
    double nu;
    if (nbar == 0.0)
        nu = -kInf;
    else if (nbar == 1.0)
        nu = kInf;
    else
        nu = std::log(nbar / (1.0 - nbar));
    double temperature;
    if (nu == 0.0)
        temperature = kInf; // maximally mixed state: infinite temperature of either sign
    else if (std::isinf(nu))
        temperature = std::copysign(0.0, -nu);
    else
        temperature = -epsilon / nu;
    return {nbar, nu, epsilon, temperature};
}

ThermalParams thermal_from_nu(double nu, double epsilon) {
    double nbar;
    if (nu == kInf)
        nbar = 1.0;
    else if (nu == -kInf)
        nbar = 0.0;
    else if (nu >= 0.0)
        nbar = 1.0 / (1.0 + std::exp(-nu));
    else
        nbar = std::exp(nu) / (1.0 + std::exp(nu));
    ThermalParams p = thermal_from_nbar(nbar, epsilon);
    if (std::isfinite(nu)) p.nu = nu;
    return p;
}

ThermalParams thermal_from_temperature(double epsilon, double temperature) {
    if (!(epsilon > 0.0)) throw domain_error("thermal: epsilon must be positive");
    double nu;
    if (temperature == 0.0)
        nu = std::signbit(temperature) ? kInf : -kInf;
    else if (std::isinf(temperature))
        nu = 0.0;
    else
        nu = -epsilon / temperature;
    ThermalParams p = thermal_from_nu(nu, epsilon);
    p.temperature = temperature;
    return p;
}

} // namespace fermiphase
