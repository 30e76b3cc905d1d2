#include "fermiphase/phase_space.hpp"

namespace fermiphase {

SuperElement displacement(const AlgebraContextPtr& ctx, const GrassmannPair& pair) {
    if (!ctx->has_mode())
        throw context_error("displacement: context has no mode operators");
    const int cr = ctx->creation_index();
    const int an = ctx->annihilation_index();
    SuperElement exponent(ctx);
    exponent.add_product_term({cr, pair.var}, Scalar::one());
    exponent.add_product_term({pair.conj, an}, -Scalar::one());
    return exp_nilpotent(exponent);
}

SuperElement negate_pair(const SuperElement& x, const GrassmannPair& pair) {
    return substitute_linear(x, {{pair.var, -Scalar::one(), pair.var},
                                 {pair.conj, -Scalar::one(), pair.conj}});
}

SuperElement coherent_projector(const AlgebraContextPtr& ctx, const GrassmannPair& pair) {
    SuperElement d = displacement(ctx, pair);
    SuperElement vacuum(ctx);
    vacuum.add_product_term({ctx->annihilation_index(), ctx->creation_index()}, Scalar::one());
    return d * vacuum * negate_pair(d, pair);
}

const char* distribution_name(DistributionKind k) {
    switch (k) {
    case DistributionKind::wigner: return "wigner";
    case DistributionKind::husimi: return "husimi";
    case DistributionKind::characteristic: return "characteristic";
    }
    return "?";
}

namespace {

void require_physical(const DensityOperator& rho, const char* what) {
    if (!rho.physical)
        throw parity_error(std::string(what) +
                           ": distributions are defined for physical (lambda = 0) states");
}

PhaseSpaceDistribution make_distribution(DistributionKind kind, SuperElement element,
                                         Scalar nbar, const GrassmannPair& pair) {
    Scalar b = body(element);
    return PhaseSpaceDistribution{kind, std::move(element), std::move(nbar), std::move(b), pair};
}

} // namespace

PhaseSpaceDistribution characteristic(const DensityOperator& rho, const GrassmannPair& pair) {
    require_physical(rho, "characteristic");
    const auto& ctx = rho.element.ctx();
    SuperElement chi = fock_trace(rho.element * displacement(ctx, pair));
    return make_distribution(DistributionKind::characteristic, std::move(chi), rho.nbar, pair);
}

PhaseSpaceDistribution wigner(const DensityOperator& rho, const GrassmannPair& out_pair,
                              const GrassmannPair& integration_pair) {
    require_physical(rho, "wigner");
    const auto& ctx = rho.element.ctx();
    // Fourier kernel exp(alpha beta* - beta alpha*).
    SuperElement exponent(ctx);
    exponent.add_product_term({out_pair.var, integration_pair.conj}, Scalar::one());
    exponent.add_product_term({integration_pair.var, out_pair.conj}, -Scalar::one());
    SuperElement kernel = exp_nilpotent(exponent);

    SuperElement chi = characteristic(rho, integration_pair).element;
    SuperElement w = berezin_integrate(kernel * chi, integration_pair);
    return make_distribution(DistributionKind::wigner, std::move(w), rho.nbar, out_pair);
}

PhaseSpaceDistribution husimi(const DensityOperator& rho, const GrassmannPair& pair) {
    require_physical(rho, "husimi");
    const auto& ctx = rho.element.ctx();
    SuperElement q = fock_trace(rho.element * coherent_projector(ctx, pair));
    return make_distribution(DistributionKind::husimi, std::move(q), rho.nbar, pair);
}

SuperElement coherent_matrix_element(const SuperElement& op, const GrassmannPair& pair,
                                     bool negate_ket) {
    const auto& ctx = op.ctx();
    if (!ctx->has_mode())
        throw context_error("coherent_matrix_element: context has no mode operators");
    const int cr = ctx->creation_index();
    const int an = ctx->annihilation_index();

    // Split O into Fock matrix elements, keeping Grassmann spectators.
    std::array<SuperElement, 4> elems = {SuperElement(ctx), SuperElement(ctx),
                                         SuperElement(ctx), SuperElement(ctx)};
    auto slot = [&elems](int j, int k) -> SuperElement& { return elems[(size_t)(2 * j + k)]; };
    for (const auto& [m, c] : op.terms()) {
        size_t split = m.size();
        while (split > 0 && is_mode_operator(ctx->gen(m[split - 1]).kind)) --split;
        Monomial vars(m.begin(), m.begin() + (long)split);
        Monomial ops(m.begin() + (long)split, m.end());
        SuperElement spectator(ctx);
        spectator.add_product_term(vars, c);
        if (ops.empty()) {
            slot(0, 0) += spectator;
            slot(1, 1) += spectator;
        } else if (ops == Monomial{cr}) {
            slot(1, 0) += spectator;
        } else if (ops == Monomial{an}) {
            slot(0, 1) += spectator;
        } else { // {cr, an}
            slot(1, 1) += spectator;
        }
    }

    // |alpha> = beta |0> - alpha |1>, |-alpha> = beta |0> + alpha |1>,
    // <alpha| = beta* <0| - alpha* <1|, with beta = 1 + alpha alpha*/2.
    SuperElement beta = SuperElement::unit(ctx);
    beta.add_product_term({pair.var, pair.conj}, Scalar::rational(Rational(1, 2)));
    SuperElement var = SuperElement::generator(ctx, pair.var);
    SuperElement conj = SuperElement::generator(ctx, pair.conj);

    std::array<SuperElement, 2> bra = {adjoint(beta), -conj};
    std::array<SuperElement, 2> ket = {beta, negate_ket ? var : -var};

    SuperElement result(ctx);
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
            result += bra[(size_t)j] * slot(j, k) * ket[(size_t)k];
    return result;
}

Scalar trace_coherent(const SuperElement& op, const GrassmannPair& pair) {
    if (parity(op) != Parity::even)
        throw parity_error("trace_coherent: operator must be Grassmann-even");
    SuperElement integrated = berezin_integrate(coherent_matrix_element(op, pair, true), pair);
    for (const auto& [m, c] : integrated.terms())
        if (!m.empty())
            throw algebra_error("trace_coherent: residual odd-generator content");
    return body(integrated);
}

} // namespace fermiphase
