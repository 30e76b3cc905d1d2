#pragma once

#include "fermiphase/states.hpp"

namespace fermiphase {

/// Fermionic displacement operator D(alpha) = exp(ad alpha - alpha* a),
/// computed from the terminating exponential series.
SuperElement displacement(const AlgebraContextPtr& ctx, const GrassmannPair& pair);

/// Image of x under alpha -> -alpha, alpha* -> -alpha* for the given pair.
SuperElement negate_pair(const SuperElement& x, const GrassmannPair& pair);

/// Coherent-state projector |alpha><alpha| = D(alpha) (a ad) D(-alpha).
SuperElement coherent_projector(const AlgebraContextPtr& ctx, const GrassmannPair& pair);

enum class DistributionKind { wigner, husimi, characteristic };

const char* distribution_name(DistributionKind k);

/// Even one-pair phase-space distribution z = z_B + c alpha alpha*.
struct PhaseSpaceDistribution {
    DistributionKind kind;
    SuperElement element;
    Scalar nbar;
    Scalar body_value; // cached z_B
    GrassmannPair pair;
};

/// chi(alpha) = tr(rho D(alpha)); physical states only.
PhaseSpaceDistribution characteristic(const DensityOperator& rho, const GrassmannPair& pair);

/// Wigner distribution from first principles: the Fourier kernel
/// exp(alpha beta* - beta alpha*) is multiplied by chi(beta) and
/// Berezin-integrated over the beta pair.
PhaseSpaceDistribution wigner(const DensityOperator& rho, const GrassmannPair& out_pair,
                              const GrassmannPair& integration_pair);

/// Husimi distribution Q(alpha) = tr(rho |alpha><alpha|); physical states only.
PhaseSpaceDistribution husimi(const DensityOperator& rho, const GrassmannPair& pair);

/// <alpha| O |-alpha> (or <alpha| O |alpha> with negate_ket = false) through
/// the Fock-basis expansion of the coherent bra and ket, keeping all
/// Grassmann factors in multiplication order.
SuperElement coherent_matrix_element(const SuperElement& op, const GrassmannPair& pair,
                                     bool negate_ket = true);

/// tr(O) evaluated in the coherent basis as Int Dalpha <alpha|O|-alpha>;
/// agrees with the Fock trace for even O.
Scalar trace_coherent(const SuperElement& op, const GrassmannPair& pair);

} // namespace fermiphase
