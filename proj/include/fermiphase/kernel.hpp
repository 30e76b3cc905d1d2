#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "fermiphase/element.hpp"

namespace fermiphase {

/// Berezin integral over a declared Grassmann pair, normalized so that
/// the canonical monomial var*conj integrates to +1. Terms lacking either
/// pair member integrate to zero; the result is free of both generators.
SuperElement berezin_integrate(const SuperElement& x, const GrassmannPair& pair);

/// Single-variable Berezin integral (left convention: the variable is
/// anticommuted to the front, then stripped). Composing conj then var
/// reproduces the pair convention; this is property-tested, not assumed.
SuperElement berezin_integrate_single(const SuperElement& x, int var);

struct LinearSubstitution {
    int from;
    Scalar coeff;
    int to;
};

/// Homomorphic substitution of variable generators by scalar multiples of
/// variable generators, bijective on the mapped set.
SuperElement substitute_linear(const SuperElement& x,
                               const std::vector<LinearSubstitution>& map);

/// Scalar function together with the derivatives needed to Taylor-expand
/// around a nilpotent soul. derivative(0) is the function itself.
class SuperFunction {
public:
    SuperFunction(std::string name, std::vector<std::function<Scalar(const Scalar&)>> derivatives)
        : name_(std::move(name)), derivs_(std::move(derivatives)) {}

    /// Wraps real-valued callables for float-mode use.
    static SuperFunction from_real(std::string name,
                                   std::vector<std::function<double(double)>> derivatives);

    const std::string& name() const { return name_; }
    size_t order() const { return derivs_.size(); }
    Scalar derivative(size_t j, const Scalar& at) const { return derivs_[j](at); }

private:
    std::string name_;
    std::vector<std::function<Scalar(const Scalar&)>> derivs_;
};

/// f(x) = sum_j f^(j)(body) soul^j / j!, truncated by nilpotency of the soul.
SuperElement apply_superfunction(const SuperFunction& f, const SuperElement& x);

/// 2x2 matrix of Scalars representing an operator-only element in the
/// Fock basis (|0>, |1>).
struct FockMatrix {
    std::array<Scalar, 4> m; // row-major

    Scalar& at(int r, int c) { return m[(size_t)(2 * r + c)]; }
    const Scalar& at(int r, int c) const { return m[(size_t)(2 * r + c)]; }
    Scalar trace() const { return m[0] + m[3]; }

    friend FockMatrix operator*(const FockMatrix& a, const FockMatrix& b);
    friend FockMatrix operator+(const FockMatrix& a, const FockMatrix& b);
    friend bool operator==(const FockMatrix& a, const FockMatrix& b) { return a.m == b.m; }
};

/// Faithful representation: a maps |1> to |0>, ad is its transpose.
/// Grassmann content is refused.
FockMatrix to_fock_matrix(const SuperElement& x);
SuperElement from_fock_matrix(const AlgebraContextPtr& ctx, const FockMatrix& fm);

/// Fock-space trace: tr(1) = 2, tr(ad*a) = 1, tr(a) = tr(ad) = 0.
/// Grassmann variables pass through as spectators.
SuperElement fock_trace(const SuperElement& x);

/// Exponential of an operator-only element through the Fock representation
/// (numeric coefficients required).
SuperElement exp_fock(const SuperElement& x);

/// Exponential of an even element whose soul is Grassmann-nilpotent, by
/// the terminating power series. The body must be zero (exact) or numeric.
SuperElement exp_nilpotent(const SuperElement& x);

/// Dispatches between the two exponential routes.
SuperElement exp_element(const SuperElement& x);

} // namespace fermiphase
