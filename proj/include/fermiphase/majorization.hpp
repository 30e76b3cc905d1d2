#pragma once

#include "fermiphase/entropy.hpp"

namespace fermiphase {

enum class MajorizationRelation {
    first_majorized_by_second, // z1 < z2 in the majorization preorder
    second_majorized_by_first,
    equivalent,
    incomparable, // not reached for single-mode bodies; kept for forward compatibility
};

const char* relation_name(MajorizationRelation r);

struct MajorizationWitness {
    std::string function_name;
    double left;  // Int Dalpha f(z1)
    double right; // Int Dalpha f(z2)
    bool pass;
};

struct MajorizationVerdict {
    MajorizationRelation relation;
    double body1;
    double body2;
    std::vector<MajorizationWitness> witnesses;
};

/// Decides the majorization relation analytically from the body comparison
/// (the concave derivative is monotone, so z1 < z2 iff z1_B <= z2_B within a
/// family) and verifies it empirically over the concave test family through
/// the kernel route. The two routes must agree; disagreement throws.
/// Hinge thresholds colliding with a body are perturbed by 1e-6.
MajorizationVerdict majorizes(const PhaseSpaceDistribution& z1,
                              const PhaseSpaceDistribution& z2,
                              const std::vector<ConcaveTestFunction>& family,
                              double tol = 1e-12);

} // namespace fermiphase
