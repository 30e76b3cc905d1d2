#pragma once

#include "fermiphase/phase_space.hpp"

namespace fermiphase {

/// Covariance matrix gamma_{jj'} = (1/2i) Int Dalpha z [alpha_j, alpha_j']
/// over the index order (alpha, alpha*). For the Gaussian distributions it
/// equals z_B sigma_y, so det = -z_B^2.
struct CovarianceMatrix {
    std::array<Scalar, 4> m; // row-major
    DistributionKind kind;
    Scalar nbar;

    const Scalar& at(int r, int c) const { return m[(size_t)(2 * r + c)]; }
    Scalar det() const { return m[0] * m[3] - m[1] * m[2]; }
};

CovarianceMatrix covariance(const PhaseSpaceDistribution& z);

} // namespace fermiphase
