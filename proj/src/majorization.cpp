#include "fermiphase/majorization.hpp"

#include <cmath>

namespace fermiphase {

const char* relation_name(MajorizationRelation r) {
    switch (r) {
    case MajorizationRelation::first_majorized_by_second: return "z1 < z2";
    case MajorizationRelation::second_majorized_by_first: return "z2 < z1";
    case MajorizationRelation::equivalent: return "equivalent";
    case MajorizationRelation::incomparable: return "incomparable";
    }
    return "?";
}

MajorizationVerdict majorizes(const PhaseSpaceDistribution& z1,
                              const PhaseSpaceDistribution& z2,
                              const std::vector<ConcaveTestFunction>& family,
                              double tol) {
    for (const auto& f : family) validate_test_function(f);

    double b1 = z1.body_value.as_complex().real();
    double b2 = z2.body_value.as_complex().real();

    MajorizationVerdict verdict;
    verdict.body1 = b1;
    verdict.body2 = b2;
    if (b1 == b2)
        verdict.relation = MajorizationRelation::equivalent;
    else if (b1 < b2)
        verdict.relation = MajorizationRelation::first_majorized_by_second;
    else
        verdict.relation = MajorizationRelation::second_majorized_by_first;

    for (const auto& f : family) {
        ConcaveTestFunction fn = f;
        // Thresholds are perturbed off the bodies in use.
        bool collides = true;
        int guard = 0;
        while (collides && guard++ < 8) {
            collides = false;
            for (double bad : fn.nondifferentiable)
                if (bad == b1 || bad == b2) collides = true;
            if (collides) {
                if (!fn.with_param)
                    throw non_differentiable_point_error(
                        "majorizes: body hits the exception set of '" + fn.name +
                        "' and the function cannot be reparametrized");
                fn = fn.with_param(fn.param + 1e-6);
            }
        }

        MajorizationWitness w;
        w.function_name = fn.name;
        w.left = concave_average_via_kernel(fn, z1);
        w.right = concave_average_via_kernel(fn, z2);
        switch (verdict.relation) {
        case MajorizationRelation::first_majorized_by_second:
            w.pass = w.left >= w.right - tol;
            break;
        case MajorizationRelation::second_majorized_by_first:
            w.pass = w.right >= w.left - tol;
            break;
        default:
            w.pass = std::abs(w.left - w.right) <= tol;
            break;
        }
        verdict.witnesses.push_back(w);
        if (!w.pass)
            throw algebra_error("majorizes: empirical witness '" + fn.name +
                                "' contradicts the analytic body comparison");
    }
    return verdict;
}

} // namespace fermiphase
