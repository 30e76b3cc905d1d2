#include "fermiphase/element.hpp"

#include <algorithm>

namespace fermiphase {

void require_same_context(const SuperElement& a, const SuperElement& b, const char* op) {
    if (a.ctx() != b.ctx())
        throw context_error(std::string("SuperElement: ") + op +
                            " across different algebra contexts");
}

SuperElement SuperElement::from_scalar(AlgebraContextPtr ctx, Scalar s) {
    SuperElement r(std::move(ctx));
    r.add_term({}, s);
    return r;
}

SuperElement SuperElement::generator(AlgebraContextPtr ctx, int index) {
    if (index < 0 || index >= ctx->generator_count())
        throw context_error("SuperElement: generator index out of range");
    SuperElement r(std::move(ctx));
    r.add_term({index}, Scalar::one());
    return r;
}

Scalar SuperElement::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero() : it->second;
}

void SuperElement::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void SuperElement::add_product_term(const std::vector<int>& seq, const Scalar& coeff) {
    if (coeff.is_zero()) return;
    const int cr = ctx_->has_mode() ? ctx_->creation_index() : -1;
    const int an = ctx_->has_mode() ? ctx_->annihilation_index() : -1;

    std::vector<std::pair<std::vector<int>, Scalar>> work;
    work.emplace_back(seq, coeff);
    while (!work.empty()) {
        auto [s, c] = std::move(work.back());
        work.pop_back();
        bool dead = false;
        bool changed = true;
        while (changed && !dead) {
            changed = false;
            for (size_t i = 0; i + 1 < s.size(); ++i) {
                if (s[i] == s[i + 1]) {
                    // Any repeated odd generator squares to zero.
                    dead = true;
                    break;
                }
                if (s[i] > s[i + 1]) {
                    if (s[i] == an && s[i + 1] == cr) {
                        // a * ad  ->  1 - ad * a
                        std::vector<int> dropped(s);
                        dropped.erase(dropped.begin() + (long)i, dropped.begin() + (long)i + 2);
                        work.emplace_back(std::move(dropped), c);
                        std::swap(s[i], s[i + 1]);
                        c = -c;
                    } else {
                        // Odd generators anticommute.
                        std::swap(s[i], s[i + 1]);
                        c = -c;
                    }
                    changed = true;
                    break;
                }
            }
        }
        if (!dead) add_term(s, c);
    }
}

SuperElement operator+(const SuperElement& a, const SuperElement& b) {
    require_same_context(a, b, "add");
    SuperElement r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

SuperElement operator-(const SuperElement& a, const SuperElement& b) {
    require_same_context(a, b, "subtract");
    SuperElement r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
}

SuperElement SuperElement::operator-() const {
    SuperElement r(ctx_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

SuperElement operator*(const SuperElement& a, const SuperElement& b) {
    require_same_context(a, b, "multiply");
    SuperElement r(a.ctx_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            std::vector<int> seq(ma);
            seq.insert(seq.end(), mb.begin(), mb.end());
            r.add_product_term(seq, ca * cb);
        }
    }
    return r;
}

SuperElement operator*(const Scalar& s, const SuperElement& x) {
    SuperElement r(x.ctx_);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : x.terms_) r.add_term(m, s * c);
    return r;
}

bool operator==(const SuperElement& a, const SuperElement& b) {
    return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
}

SuperElement adjoint(const SuperElement& x) {
    SuperElement r(x.ctx());
    for (const auto& [m, c] : x.terms()) {
        std::vector<int> seq;
        seq.reserve(m.size());
        for (auto it = m.rbegin(); it != m.rend(); ++it)
            seq.push_back(x.ctx()->conj_index(*it));
        r.add_product_term(seq, c.conj());
    }
    return r;
}

Scalar body(const SuperElement& x) { return x.coefficient({}); }

SuperElement soul(const SuperElement& x) {
    SuperElement r(x.ctx());
    for (const auto& [m, c] : x.terms())
        if (!m.empty()) r.add_product_term(m, c);
    return r;
}

Parity parity(const SuperElement& x) {
    bool has_even = false, has_odd = false;
    for (const auto& [m, c] : x.terms())
        (m.size() % 2 == 0 ? has_even : has_odd) = true;
    if (has_even && has_odd) return Parity::mixed;
    if (has_odd) return Parity::odd;
    return Parity::even;
}

bool contains_grassmann(const SuperElement& x) {
    for (const auto& [m, c] : x.terms())
        for (int g : m)
            if (is_grassmann_variable(x.ctx()->gen(g).kind)) return true;
    return false;
}

bool contains_mode_operator(const SuperElement& x) {
    for (const auto& [m, c] : x.terms())
        for (int g : m)
            if (is_mode_operator(x.ctx()->gen(g).kind)) return true;
    return false;
}

std::string SuperElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (m.empty()) {
            // Body sorts first; print it without coefficient parentheses.
            out = c.to_string();
            continue;
        }
        std::string mono;
        for (int g : m) {
            if (!mono.empty()) mono += "*";
            mono += ctx_->gen(g).name;
        }
        bool neg = c.is_simple_negative();
        Scalar mag = neg ? -c : c;
        std::string piece = mag.is_one() ? mono : mag.to_coefficient_string() + "*" + mono;
        if (out.empty())
            out = neg ? "-" + piece : piece;
        else
            out += (neg ? " - " : " + ") + piece;
    }
    return out;
}

} // namespace fermiphase
