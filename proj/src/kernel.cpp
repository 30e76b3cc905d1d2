#include "fermiphase/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace fermiphase {

SuperElement berezin_integrate(const SuperElement& x, const GrassmannPair& pair) {
    const auto& ctx = x.ctx();
    const GeneratorInfo& v = ctx->gen(pair.var);
    const GeneratorInfo& c = ctx->gen(pair.conj);
    if (v.kind != GeneratorKind::grassmann_variable ||
        c.kind != GeneratorKind::grassmann_conjugate_variable || v.conj != pair.conj)
        throw invalid_measure_error("berezin_integrate: not a declared Grassmann pair");

    SuperElement r(ctx);
    for (const auto& [m, coeff] : x.terms()) {
        long p = -1, q = -1;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == pair.var) p = (long)i;
            if (m[i] == pair.conj) q = (long)i;
        }
        if (p < 0 || q < 0) continue;
        // Factor var*conj out to the left: p transpositions for var,
        // then q-1 for conj, so the sign is (-1)^(p+q-1).
        Monomial rest;
        rest.reserve(m.size() - 2);
        for (size_t i = 0; i < m.size(); ++i)
            if ((long)i != p && (long)i != q) rest.push_back(m[i]);
        bool negative = ((p + q - 1) % 2) != 0;
        r.add_product_term(rest, negative ? -coeff : coeff);
    }
    return r;
}

SuperElement berezin_integrate_single(const SuperElement& x, int var) {
    const auto& ctx = x.ctx();
    if (!is_grassmann_variable(ctx->gen(var).kind))
        throw invalid_measure_error("berezin_integrate_single: not a Grassmann variable");
    SuperElement r(ctx);
    for (const auto& [m, coeff] : x.terms()) {
        long p = -1;
        for (size_t i = 0; i < m.size(); ++i)
            if (m[i] == var) p = (long)i;
        if (p < 0) continue;
        Monomial rest;
        rest.reserve(m.size() - 1);
        for (size_t i = 0; i < m.size(); ++i)
            if ((long)i != p) rest.push_back(m[i]);
        bool negative = (p % 2) != 0;
        r.add_product_term(rest, negative ? -coeff : coeff);
    }
    return r;
}

SuperElement substitute_linear(const SuperElement& x,
                               const std::vector<LinearSubstitution>& map) {
    const auto& ctx = x.ctx();
    std::set<int> sources, targets;
    for (const auto& s : map) {
        if (!is_grassmann_variable(ctx->gen(s.from).kind) ||
            !is_grassmann_variable(ctx->gen(s.to).kind))
            throw invalid_substitution_error(
                "substitute_linear: substitutions must map variables to variables");
        if (!sources.insert(s.from).second)
            throw invalid_substitution_error("substitute_linear: duplicate source generator");
        if (!targets.insert(s.to).second)
            throw invalid_substitution_error("substitute_linear: images collide");
    }
    SuperElement r(ctx);
    for (const auto& [m, coeff] : x.terms()) {
        std::vector<int> seq;
        seq.reserve(m.size());
        Scalar c = coeff;
        for (int g : m) {
            auto it = std::find_if(map.begin(), map.end(),
                                   [g](const LinearSubstitution& s) { return s.from == g; });
            if (it == map.end()) {
                seq.push_back(g);
            } else {
                seq.push_back(it->to);
                c *= it->coeff;
            }
        }
        r.add_product_term(seq, c);
    }
    return r;
}

SuperFunction SuperFunction::from_real(std::string name,
                                       std::vector<std::function<double(double)>> derivatives) {
    std::vector<std::function<Scalar(const Scalar&)>> wrapped;
    wrapped.reserve(derivatives.size());
    for (auto& d : derivatives) {
        wrapped.push_back([fn = std::move(d)](const Scalar& at) {
            std::complex<double> z = at.as_complex();
            if (z.imag() != 0.0)
                throw domain_error("SuperFunction: real function evaluated at complex point");
            return Scalar::real(fn(z.real()));
        });
    }
    return SuperFunction(std::move(name), std::move(wrapped));
}

SuperElement apply_superfunction(const SuperFunction& f, const SuperElement& x) {
    if (parity(x) != Parity::even)
        throw parity_error("apply_superfunction: argument must be Grassmann-even");
    Scalar b = body(x);
    SuperElement s = soul(x);
    const auto& ctx = x.ctx();

    SuperElement result = SuperElement::from_scalar(ctx, f.derivative(0, b));
    SuperElement power = SuperElement::unit(ctx);
    Rational factorial(1);
    for (size_t j = 1;; ++j) {
        power *= s;
        if (power.is_zero()) break;
        if (j > (size_t)ctx->generator_count())
            throw unsupported_operand_error("apply_superfunction: soul is not nilpotent");
        if (j >= f.order())
            throw algebra_error("apply_superfunction: '" + f.name() + "' provides " +
                                std::to_string(f.order()) + " derivatives but the soul has "
                                "nilpotency degree above that");
        factorial *= Rational((long long)j);
        result += power * f.derivative(j, b).div_rational(factorial);
    }
    return result;
}

FockMatrix operator*(const FockMatrix& a, const FockMatrix& b) {
    FockMatrix r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.at(i, j) = a.at(i, 0) * b.at(0, j) + a.at(i, 1) * b.at(1, j);
    return r;
}

FockMatrix operator+(const FockMatrix& a, const FockMatrix& b) {
    FockMatrix r;
    for (size_t k = 0; k < 4; ++k) r.m[k] = a.m[k] + b.m[k];
    return r;
}

FockMatrix to_fock_matrix(const SuperElement& x) {
    if (contains_grassmann(x))
        throw unsupported_operand_error("to_fock_matrix: element has Grassmann content");
    const auto& ctx = x.ctx();
    if (!ctx->has_mode())
        throw unsupported_operand_error("to_fock_matrix: context has no mode operators");
    const int cr = ctx->creation_index();
    const int an = ctx->annihilation_index();
    FockMatrix fm;
    for (const auto& [m, c] : x.terms()) {
        if (m.empty()) {
            fm.at(0, 0) += c;
            fm.at(1, 1) += c;
        } else if (m == Monomial{cr}) {
            fm.at(1, 0) += c;
        } else if (m == Monomial{an}) {
            fm.at(0, 1) += c;
        } else if (m == Monomial{cr, an}) {
            fm.at(1, 1) += c;
        } else {
            throw unsupported_operand_error("to_fock_matrix: unexpected monomial");
        }
    }
    return fm;
}

SuperElement from_fock_matrix(const AlgebraContextPtr& ctx, const FockMatrix& fm) {
    const int cr = ctx->creation_index();
    const int an = ctx->annihilation_index();
    SuperElement r(ctx);
    // |0><0| = a*ad = 1 - ad*a, |0><1| = a, |1><0| = ad, |1><1| = ad*a.
    r.add_product_term({}, fm.at(0, 0));
    r.add_product_term({cr, an}, fm.at(1, 1) - fm.at(0, 0));
    r.add_product_term({an}, fm.at(0, 1));
    r.add_product_term({cr}, fm.at(1, 0));
    return r;
}

SuperElement fock_trace(const SuperElement& x) {
    const auto& ctx = x.ctx();
    SuperElement r(ctx);
    const int cr = ctx->has_mode() ? ctx->creation_index() : -1;
    for (const auto& [m, c] : x.terms()) {
        // Canonical order puts mode operators at the tail.
        size_t split = m.size();
        while (split > 0 && is_mode_operator(ctx->gen(m[split - 1]).kind)) --split;
        Monomial vars(m.begin(), m.begin() + (long)split);
        Monomial ops(m.begin() + (long)split, m.end());
        Scalar tr;
        if (ops.empty())
            tr = Scalar::integer(2);
        else if (ops.size() == 2 && ops[0] == cr)
            tr = Scalar::one();
        else
            continue; // tr(a) = tr(ad) = 0
        r.add_product_term(vars, c * tr);
    }
    return r;
}

namespace {

std::array<std::complex<double>, 4> complex_matrix(const FockMatrix& fm) {
    std::array<std::complex<double>, 4> m;
    for (size_t k = 0; k < 4; ++k) m[k] = fm.m[k].as_complex();
    return m;
}

std::array<std::complex<double>, 4> mat_mul(const std::array<std::complex<double>, 4>& a,
                                            const std::array<std::complex<double>, 4>& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

// Scaling-and-squaring Taylor exponential; plenty for 2x2.
std::array<std::complex<double>, 4> mat_exp(std::array<std::complex<double>, 4> a) {
    double norm = 0.0;
    for (const auto& z : a) norm = std::max(norm, std::abs(z));
    int squarings = 0;
    while (norm > 0.5) {
        norm /= 2.0;
        ++squarings;
    }
    double scale = std::ldexp(1.0, -squarings);
    for (auto& z : a) z *= scale;

    std::array<std::complex<double>, 4> acc = {1.0, 0.0, 0.0, 1.0};
    std::array<std::complex<double>, 4> term = {1.0, 0.0, 0.0, 1.0};
    for (int j = 1; j <= 24; ++j) {
        term = mat_mul(term, a);
        for (auto& z : term) z /= (double)j;
        for (size_t k = 0; k < 4; ++k) acc[k] += term[k];
    }
    for (int s = 0; s < squarings; ++s) acc = mat_mul(acc, acc);
    return acc;
}

} // namespace

SuperElement exp_fock(const SuperElement& x) {
    if (contains_grassmann(x))
        throw unsupported_operand_error("exp_fock: element has Grassmann content");
    FockMatrix fm = to_fock_matrix(x);
    std::array<std::complex<double>, 4> m;
    try {
        m = complex_matrix(fm);
    } catch (const algebra_error&) {
        throw unsupported_operand_error("exp_fock: coefficients must be numeric");
    }
    auto e = mat_exp(m);
    FockMatrix out;
    for (size_t k = 0; k < 4; ++k) out.m[k] = Scalar::complex(e[k]);
    return from_fock_matrix(x.ctx(), out);
}

SuperElement exp_nilpotent(const SuperElement& x) {
    if (parity(x) != Parity::even)
        throw parity_error("exp_nilpotent: exponent must be Grassmann-even");
    Scalar b = body(x);
    SuperElement s = soul(x);
    const auto& ctx = x.ctx();

    Scalar prefactor;
    if (b.is_zero())
        prefactor = Scalar::one();
    else if (b.is_constant())
        prefactor = Scalar::complex(std::exp(b.as_complex()));
    else
        throw unsupported_operand_error("exp_nilpotent: symbolic body has no exact exponential");

    SuperElement acc = SuperElement::unit(ctx);
    SuperElement power = SuperElement::unit(ctx);
    Rational factorial(1);
    for (size_t j = 1;; ++j) {
        power *= s;
        if (power.is_zero()) break;
        if (j > (size_t)ctx->generator_count())
            throw unsupported_operand_error("exp_nilpotent: soul is not nilpotent");
        factorial *= Rational((long long)j);
        acc += power * Scalar::one().div_rational(factorial);
    }
    return prefactor * acc;
}

SuperElement exp_element(const SuperElement& x) {
    if (!contains_grassmann(x)) return exp_fock(x);
    return exp_nilpotent(x);
}

} // namespace fermiphase
