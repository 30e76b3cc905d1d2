#pragma once

#include <map>
#include <string>
#include <vector>

#include "fermiphase/algebra.hpp"
#include "fermiphase/scalar.hpp"

namespace fermiphase {

/// Canonically ordered product of distinct odd generators, stored as a
/// strictly increasing list of generator indices. The empty monomial is
/// the algebra unit.
using Monomial = std::vector<int>;

enum class Parity { even, odd, mixed };

/// Finite linear combination of canonical monomials with Scalar
/// coefficients. Immutable in spirit: all operations return new values.
class SuperElement {
public:
    explicit SuperElement(AlgebraContextPtr ctx) : ctx_(std::move(ctx)) {}

    static SuperElement zero(AlgebraContextPtr ctx) { return SuperElement(std::move(ctx)); }
    static SuperElement unit(AlgebraContextPtr ctx) {
        return from_scalar(std::move(ctx), Scalar::one());
    }
    static SuperElement from_scalar(AlgebraContextPtr ctx, Scalar s);
    static SuperElement generator(AlgebraContextPtr ctx, int index);

    const AlgebraContextPtr& ctx() const { return ctx_; }
    const std::map<Monomial, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient of a monomial (zero Scalar if absent).
    Scalar coefficient(const Monomial& m) const;

    friend SuperElement operator+(const SuperElement& a, const SuperElement& b);
    friend SuperElement operator-(const SuperElement& a, const SuperElement& b);
    friend SuperElement operator*(const SuperElement& a, const SuperElement& b);
    friend SuperElement operator*(const Scalar& s, const SuperElement& x);
    friend SuperElement operator*(const SuperElement& x, const Scalar& s) { return s * x; }
    SuperElement operator-() const;
    SuperElement& operator+=(const SuperElement& o) { return *this = *this + o; }
    SuperElement& operator-=(const SuperElement& o) { return *this = *this - o; }
    SuperElement& operator*=(const SuperElement& o) { return *this = *this * o; }

    friend bool operator==(const SuperElement& a, const SuperElement& b);
    friend bool operator!=(const SuperElement& a, const SuperElement& b) { return !(a == b); }

    /// Inserts the canonical form of `coeff * (product of seq)` where seq is
    /// an arbitrary (possibly unsorted, possibly repeating) generator list.
    void add_product_term(const std::vector<int>& seq, const Scalar& coeff);

    std::string to_string() const;

private:
    AlgebraContextPtr ctx_;
    std::map<Monomial, Scalar> terms_;

    void add_term(const Monomial& m, const Scalar& c);
};

/// Hermitian adjoint: reverses products, swaps each generator with its
/// conjugate partner, conjugates coefficients.
SuperElement adjoint(const SuperElement& x);

/// Scalar part (coefficient of the empty monomial).
Scalar body(const SuperElement& x);
/// x minus its body.
SuperElement soul(const SuperElement& x);
Parity parity(const SuperElement& x);

bool contains_grassmann(const SuperElement& x);
bool contains_mode_operator(const SuperElement& x);

void require_same_context(const SuperElement& a, const SuperElement& b, const char* op);

} // namespace fermiphase
