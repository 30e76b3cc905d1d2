#include "fermiphase/covariance.hpp"

namespace fermiphase {

CovarianceMatrix covariance(const PhaseSpaceDistribution& z) {
    const auto& ctx = z.element.ctx();
    if (parity(z.element) != Parity::even)
        throw parity_error("covariance: distribution must be Grassmann-even");

    const int idx[2] = {z.pair.var, z.pair.conj};
    // Physical distributions are centered: first moments must vanish.
    for (int j = 0; j < 2; ++j) {
        SuperElement first = berezin_integrate(
            z.element * SuperElement::generator(ctx, idx[j]), z.pair);
        if (!first.is_zero())
            throw algebra_error("covariance: first moment does not vanish");
    }

    Scalar half_over_i = Scalar::gaussian({Rational(0), Rational(-1, 2)}); // 1/(2i)
    CovarianceMatrix gamma;
    gamma.kind = z.kind;
    gamma.nbar = z.nbar;
    for (int j = 0; j < 2; ++j) {
        for (int jp = 0; jp < 2; ++jp) {
            SuperElement gj = SuperElement::generator(ctx, idx[j]);
            SuperElement gjp = SuperElement::generator(ctx, idx[jp]);
            SuperElement commutator = gj * gjp - gjp * gj;
            SuperElement integrated = berezin_integrate(z.element * commutator, z.pair);
            if (integrated != SuperElement::from_scalar(ctx, body(integrated)))
                throw algebra_error("covariance: second moment is not a scalar");
            gamma.m[(size_t)(2 * j + jp)] = half_over_i * body(integrated);
        }
    }
    return gamma;
}

} // namespace fermiphase
