#pragma once

#include <complex>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fermiphase/errors.hpp"
#include "fermiphase/rational.hpp"

namespace fermiphase {

/// Complex number with exact rational real and imaginary parts.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_one() const { return re.is_one() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }

    GaussianRational conj() const { return {re, -im}; }
    GaussianRational operator-() const { return {-re, -im}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n = b.re * b.re + b.im * b.im;
        if (n.is_zero()) throw std::domain_error("GaussianRational: division by zero");
        return a * GaussianRational{b.re / n, -b.im / n};
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }

    /// "3", "-1/2", "i", "-3/4i", "(1+2i)". `parenthesize_mixed` wraps
    /// two-part values so they can be used verbatim as coefficients.
    std::string to_string(bool parenthesize_mixed = false) const;
};

/// Immutable table of declared commuting symbols. Each symbol either is
/// real (its own conjugate) or belongs to a declared conjugate pair.
class SymbolTable {
public:
    /// `reals` are self-conjugate symbols; `pairs` are (name, conjugate name).
    static std::shared_ptr<const SymbolTable> create(
        const std::vector<std::string>& reals,
        const std::vector<std::pair<std::string, std::string>>& pairs = {});

    int index_of(const std::string& name) const; // -1 if absent
    int conj_of(int index) const { return entries_[(size_t)index].conj; }
    const std::string& name(int index) const { return entries_[(size_t)index].name; }
    int size() const { return (int)entries_.size(); }

private:
    struct Entry {
        std::string name;
        int conj;
    };
    std::vector<Entry> entries_;
    std::map<std::string, int> by_name_;
};

using SymbolTablePtr = std::shared_ptr<const SymbolTable>;

/// Monomial in commuting symbols: (symbol index, exponent > 0) sorted by index.
using SymbolMonomial = std::vector<std::pair<int, int>>;

/// Multivariate polynomial over declared commuting symbols with
/// Gaussian-rational coefficients. Zero coefficients are never stored,
/// so the zero polynomial has a unique representation (empty term map).
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(GaussianRational c);
    Polynomial(SymbolTablePtr table, int symbol_index);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (the coefficient of the empty monomial).
    GaussianRational constant_value() const;

    const std::map<SymbolMonomial, GaussianRational>& terms() const { return terms_; }
    const SymbolTablePtr& table() const { return table_; }

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial conj() const;
    std::complex<double> evaluate(const std::map<std::string, std::complex<double>>& env) const;

    std::string to_string() const;
    /// Number of additive terms (used to decide coefficient parenthesization).
    size_t term_count() const { return terms_.size(); }

private:
    SymbolTablePtr table_; // null for pure constants
    std::map<SymbolMonomial, GaussianRational> terms_;

    void add_term(const SymbolMonomial& m, const GaussianRational& c);
    static SymbolTablePtr merge_tables(const SymbolTablePtr& a, const SymbolTablePtr& b);
};

/// Element of the coefficient ring: exact polynomial over declared symbols,
/// or a complex double. The two modes never mix implicitly except that an
/// exact constant is promoted when combined with a float.
class Scalar {
public:
    Scalar() : v_(Polynomial{}) {}

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar::rational(Rational(1)); }
    static Scalar integer(long long n) { return Scalar::rational(Rational(n)); }
    static Scalar rational(Rational q) { return Scalar(Polynomial(GaussianRational(std::move(q)))); }
    static Scalar gaussian(GaussianRational g) { return Scalar(Polynomial(std::move(g))); }
    static Scalar imaginary_unit() { return Scalar::gaussian({Rational(0), Rational(1)}); }
    static Scalar symbol(SymbolTablePtr table, const std::string& name);
    static Scalar real(double x) { return Scalar(std::complex<double>(x, 0.0)); }
    static Scalar complex(std::complex<double> z) { return Scalar(z); }

    explicit Scalar(Polynomial p) : v_(std::move(p)) {}
    explicit Scalar(std::complex<double> z) : v_(z) {}

    bool is_exact() const { return std::holds_alternative<Polynomial>(v_); }
    bool is_float() const { return !is_exact(); }
    bool is_zero() const;
    bool is_one() const;
    /// True when the value carries no symbols (a plain number in either mode).
    bool is_constant() const;

    const Polynomial& poly() const { return std::get<Polynomial>(v_); }

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar conj() const;
    Scalar pow(unsigned n) const;
    /// Exact division by a rational (both modes).
    Scalar div_rational(const Rational& q) const;

    /// Numeric value of a constant scalar; throws algebra_error if symbolic.
    std::complex<double> as_complex() const;
    /// Numeric value with symbol assignments (exact mode only needs them).
    std::complex<double> evaluate(const std::map<std::string, std::complex<double>>& env) const;

    std::string to_string() const;
    /// String form safe to splice in front of "*monomial".
    std::string to_coefficient_string() const;
    /// Additive term count (1 for floats); drives sign folding when printing.
    size_t term_count() const;
    /// True for single-term values whose sign can be folded into a leading minus.
    bool is_simple_negative() const;

private:
    std::variant<Polynomial, std::complex<double>> v_;
};

} // namespace fermiphase
