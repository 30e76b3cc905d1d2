#include "fermiphase/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fermiphase {

namespace {

double real_body(const PhaseSpaceDistribution& z) {
    std::complex<double> b = z.body_value.as_complex();
    if (b.imag() != 0.0) throw algebra_error("entropy: distribution body is not real");
    return b.real();
}

} // namespace

double renyi_constant(double r) {
    if (!(r > 0.0)) throw domain_error("renyi_constant: order must be positive");
    return r == 1.0 ? -1.0 : std::log(r) / (1.0 - r);
}

EntropyValue renyi_entropy(const PhaseSpaceDistribution& z, double r) {
    if (!(r > 0.0)) throw domain_error("renyi_entropy: order must be positive");
    double zb = real_body(z);
    double nbar_val = z.nbar.is_constant() ? z.nbar.as_complex().real()
                                           : std::numeric_limits<double>::quiet_NaN();
    if (zb == 0.0)
        return {r, std::numeric_limits<double>::infinity(), true, z.kind, nbar_val};
    double value = renyi_constant(r) - std::log(std::abs(zb));
    return {r, value, false, z.kind, nbar_val};
}

SuperElement sign_flipped(const PhaseSpaceDistribution& z) {
    Scalar i = Scalar::complex({0.0, 1.0});
    if (z.body_value.is_exact()) i = Scalar::imaginary_unit();
    return substitute_linear(-z.element, {{z.pair.var, i, z.pair.var},
                                          {z.pair.conj, i, z.pair.conj}});
}

double renyi_integral_via_kernel(const PhaseSpaceDistribution& z, double r) {
    if (!(r > 0.0)) throw domain_error("renyi_integral_via_kernel: order must be positive");
    double zb = real_body(z);
    if (zb == 0.0)
        throw non_differentiable_point_error("renyi_integral_via_kernel: body is zero");

    SuperElement target = z.element;
    if (zb < 0.0) target = sign_flipped(z);
    SuperFunction power = SuperFunction::from_real(
        "abs_power",
        {[r](double t) { return std::pow(std::abs(t), r); },
         [r](double t) {
             if (t == 0.0)
                 throw non_differentiable_point_error("abs_power: derivative at 0");
             return r * std::pow(std::abs(t), r - 1.0) * (t < 0.0 ? -1.0 : 1.0);
         }});

    // The flipped element may carry exact coefficients; evaluate in float mode.
    SuperElement float_target(target.ctx());
    for (const auto& [m, c] : target.terms())
        float_target.add_product_term(m, Scalar::complex(c.as_complex()));

    SuperElement applied = apply_superfunction(power, float_target);
    GrassmannPair pair = z.pair;
    SuperElement integrated = berezin_integrate(applied, pair);
    return body(integrated).as_complex().real();
}

ConcaveTestFunction hinge_function(double t) {
    ConcaveTestFunction fn;
    fn.name = "hinge(t=" + std::to_string(t) + ")";
    fn.param = t;
    fn.f = [t](double x) { return std::min(x, t) - std::min(0.0, t); };
    fn.fprime = [t](double x) {
        if (x == t)
            throw non_differentiable_point_error("hinge: derivative at the threshold");
        return x < t ? 1.0 : 0.0;
    };
    fn.nondifferentiable = {t};
    fn.with_param = [](double nt) { return hinge_function(nt); };
    return fn;
}

std::vector<ConcaveTestFunction> default_concave_family() {
    std::vector<ConcaveTestFunction> family;
    for (int i = 0; i < 25; ++i)
        family.push_back(hinge_function(-1.25 + 2.5 * i / 24.0));
    ConcaveTestFunction neg_square;
    neg_square.name = "neg_square";
    neg_square.f = [](double x) { return -x * x; };
    neg_square.fprime = [](double x) { return -2.0 * x; };
    family.push_back(neg_square);
    ConcaveTestFunction identity;
    identity.name = "identity";
    identity.f = [](double x) { return x; };
    identity.fprime = [](double) { return 1.0; };
    family.push_back(identity);
    return family;
}

void validate_test_function(const ConcaveTestFunction& f, double lo, double hi, double tol) {
    if (f.f(0.0) != 0.0)
        throw invalid_test_function_error("test function '" + f.name + "' violates f(0) = 0");
    const int n = 64;
    for (int i = 0; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            double x = lo + (hi - lo) * i / n;
            double y = lo + (hi - lo) * j / n;
            double mid = f.f(0.5 * (x + y));
            double chord = 0.5 * (f.f(x) + f.f(y));
            if (mid < chord - tol)
                throw invalid_test_function_error("test function '" + f.name +
                                                  "' fails the midpoint concavity check");
        }
    }
}

double concave_average(const ConcaveTestFunction& f, const PhaseSpaceDistribution& z) {
    double zb = real_body(z);
    for (double bad : f.nondifferentiable)
        if (zb == bad)
            throw non_differentiable_point_error(
                "concave_average: body hits the exception set of '" + f.name + "'");
    return f.fprime(zb);
}

double concave_average_via_kernel(const ConcaveTestFunction& f,
                                  const PhaseSpaceDistribution& z) {
    SuperElement float_target(z.element.ctx());
    for (const auto& [m, c] : z.element.terms())
        float_target.add_product_term(m, Scalar::complex(c.as_complex()));
    SuperFunction wrapped = SuperFunction::from_real(f.name, {f.f, f.fprime});
    SuperElement integrated =
        berezin_integrate(apply_superfunction(wrapped, float_target), z.pair);
    return body(integrated).as_complex().real();
}

} // namespace fermiphase
