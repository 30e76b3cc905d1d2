#include "fermiphase/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace fermiphase {

namespace {

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", x);
    return buf;
}

std::string format_complex(std::complex<double> z) {
    if (z.imag() == 0.0) return format_double(z.real());
    if (z.real() == 0.0) return format_double(z.imag()) + "i";
    std::string s = format_double(z.real());
    s += z.imag() < 0 ? "-" : "+";
    s += format_double(std::abs(z.imag())) + "i";
    return s;
}

} // namespace

std::string GaussianRational::to_string(bool parenthesize_mixed) const {
    if (is_zero()) return "0";
    if (im.is_zero()) return re.to_string();
    std::string imag_part;
    if (im.is_one())
        imag_part = "i";
    else if (im == Rational(-1))
        imag_part = "-i";
    else
        imag_part = im.to_string() + "i";
    if (re.is_zero()) return imag_part;
    std::string s = re.to_string();
    if (!im.is_negative()) s += "+";
    s += imag_part;
    return parenthesize_mixed ? "(" + s + ")" : s;
}

std::shared_ptr<const SymbolTable> SymbolTable::create(
    const std::vector<std::string>& reals,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
    auto table = std::make_shared<SymbolTable>();
    auto add = [&table](const std::string& name, int conj) {
        if (table->by_name_.count(name))
            throw context_error("SymbolTable: duplicate symbol '" + name + "'");
        table->by_name_[name] = (int)table->entries_.size();
        table->entries_.push_back({name, conj});
    };
    for (const auto& r : reals) {
        int idx = (int)table->entries_.size();
        add(r, idx);
    }
    for (const auto& [a, b] : pairs) {
        int idx = (int)table->entries_.size();
        add(a, idx + 1);
        add(b, idx);
    }
    return table;
}

int SymbolTable::index_of(const std::string& name) const {
    auto it = by_name_.find(name);
    return it == by_name_.end() ? -1 : it->second;
}

Polynomial::Polynomial(GaussianRational c) {
    if (!c.is_zero()) terms_[{}] = std::move(c);
}

Polynomial::Polynomial(SymbolTablePtr table, int symbol_index) : table_(std::move(table)) {
    terms_[{{symbol_index, 1}}] = GaussianRational(Rational(1));
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

GaussianRational Polynomial::constant_value() const {
    auto it = terms_.find({});
    return it == terms_.end() ? GaussianRational() : it->second;
}

void Polynomial::add_term(const SymbolMonomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymbolTablePtr Polynomial::merge_tables(const SymbolTablePtr& a, const SymbolTablePtr& b) {
    if (!a) return b;
    if (!b || a == b) return a;
    throw context_error("Polynomial: mixing symbols from different symbol tables");
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    r.table_ = table_;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    r.table_ = Polynomial::merge_tables(a.table_, b.table_);
    r.terms_ = a.terms_;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    r.table_ = Polynomial::merge_tables(a.table_, b.table_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            SymbolMonomial m;
            size_t i = 0, j = 0;
            while (i < ma.size() || j < mb.size()) {
                if (j == mb.size() || (i < ma.size() && ma[i].first < mb[j].first)) {
                    m.push_back(ma[i++]);
                } else if (i == ma.size() || mb[j].first < ma[i].first) {
                    m.push_back(mb[j++]);
                } else {
                    m.emplace_back(ma[i].first, ma[i].second + mb[j].second);
                    ++i;
                    ++j;
                }
            }
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::conj() const {
    Polynomial r;
    r.table_ = table_;
    for (const auto& [m, c] : terms_) {
        SymbolMonomial cm;
        cm.reserve(m.size());
        for (const auto& [idx, exp] : m)
            cm.emplace_back(table_ ? table_->conj_of(idx) : idx, exp);
        std::sort(cm.begin(), cm.end());
        r.add_term(cm, c.conj());
    }
    return r;
}

std::complex<double> Polynomial::evaluate(
    const std::map<std::string, std::complex<double>>& env) const {
    std::complex<double> acc = 0.0;
    for (const auto& [m, c] : terms_) {
        std::complex<double> t = c.to_complex();
        for (const auto& [idx, exp] : m) {
            const std::string& name = table_->name(idx);
            auto it = env.find(name);
            if (it == env.end())
                throw algebra_error("Polynomial: no value bound for symbol '" + name + "'");
            for (int k = 0; k < exp; ++k) t *= it->second;
        }
        acc += t;
    }
    return acc;
}

namespace {

std::string symbol_monomial_string(const SymbolTable* table, const SymbolMonomial& m) {
    std::string s;
    for (const auto& [idx, exp] : m) {
        if (!s.empty()) s += "*";
        s += table->name(idx);
        if (exp > 1) s += "^" + std::to_string(exp);
    }
    return s;
}

// Sign-folded rendering shared by polynomials and elements.
bool gaussian_is_negative(const GaussianRational& g) {
    if (g.im.is_zero()) return g.re.is_negative();
    if (g.re.is_zero()) return g.im.is_negative();
    return false;
}

} // namespace

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        bool neg = gaussian_is_negative(c);
        GaussianRational mag = neg ? -c : c;
        std::string piece;
        std::string mono = m.empty() ? "" : symbol_monomial_string(table_.get(), m);
        if (mono.empty()) {
            piece = mag.to_string(true);
        } else if (mag.is_one()) {
            piece = mono;
        } else {
            piece = mag.to_string(true) + "*" + mono;
        }
        if (out.empty()) {
            out = neg ? "-" + piece : piece;
        } else {
            out += neg ? " - " : " + ";
            out += piece;
        }
    }
    return out;
}

Scalar Scalar::symbol(SymbolTablePtr table, const std::string& name) {
    int idx = table->index_of(name);
    if (idx < 0) throw context_error("Scalar: unknown symbol '" + name + "'");
    return Scalar(Polynomial(std::move(table), idx));
}

bool Scalar::is_zero() const {
    if (is_exact()) return poly().is_zero();
    return std::get<std::complex<double>>(v_) == std::complex<double>(0.0, 0.0);
}

bool Scalar::is_one() const {
    if (is_exact()) return poly().is_constant() && poly().constant_value().is_one();
    return std::get<std::complex<double>>(v_) == std::complex<double>(1.0, 0.0);
}

bool Scalar::is_constant() const {
    return is_float() || poly().is_constant();
}

Scalar Scalar::operator-() const {
    if (is_exact()) return Scalar(-poly());
    return Scalar(-std::get<std::complex<double>>(v_));
}

namespace {

// Promote an exact constant to float when the other operand is float;
// symbolic content refuses to mix modes.
std::complex<double> demand_numeric(const Scalar& s) {
    if (s.is_float()) return s.as_complex();
    if (s.poly().is_constant()) return s.poly().constant_value().to_complex();
    throw algebra_error("Scalar: cannot combine symbolic exact value with float value");
}

} // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact()) return Scalar(a.poly() + b.poly());
    return Scalar(demand_numeric(a) + demand_numeric(b));
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact()) return Scalar(a.poly() - b.poly());
    return Scalar(demand_numeric(a) - demand_numeric(b));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact()) return Scalar(a.poly() * b.poly());
    return Scalar(demand_numeric(a) * demand_numeric(b));
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.is_exact() != b.is_exact()) {
        // Constants compare across modes; symbolic never equals a float.
        if (a.is_constant() && b.is_constant()) return a.as_complex() == b.as_complex();
        return false;
    }
    if (a.is_exact()) return a.poly() == b.poly();
    return std::get<std::complex<double>>(a.v_) == std::get<std::complex<double>>(b.v_);
}

Scalar Scalar::conj() const {
    if (is_exact()) return Scalar(poly().conj());
    return Scalar(std::conj(std::get<std::complex<double>>(v_)));
}

Scalar Scalar::pow(unsigned n) const {
    Scalar r = Scalar::one();
    for (unsigned k = 0; k < n; ++k) r *= *this;
    return r;
}

Scalar Scalar::div_rational(const Rational& q) const {
    if (q.is_zero()) throw std::domain_error("Scalar: division by zero");
    if (is_exact()) {
        Rational inv = Rational(1) / q;
        return *this * Scalar::rational(inv);
    }
    return Scalar(std::get<std::complex<double>>(v_) / q.to_double());
}

std::complex<double> Scalar::as_complex() const {
    if (is_float()) return std::get<std::complex<double>>(v_);
    if (!poly().is_constant())
        throw algebra_error("Scalar: symbolic value has no numeric form: " + poly().to_string());
    return poly().constant_value().to_complex();
}

std::complex<double> Scalar::evaluate(
    const std::map<std::string, std::complex<double>>& env) const {
    if (is_float()) return std::get<std::complex<double>>(v_);
    return poly().evaluate(env);
}

std::string Scalar::to_string() const {
    if (is_exact()) return poly().to_string();
    return format_complex(std::get<std::complex<double>>(v_));
}

std::string Scalar::to_coefficient_string() const {
    if (is_exact()) {
        const Polynomial& p = poly();
        if (p.term_count() > 1) return "(" + p.to_string() + ")";
        if (p.is_zero()) return "0";
        const auto& [mono, coeff] = *p.terms().begin();
        if (mono.empty()) return coeff.to_string(true);
        return p.to_string();
    }
    std::complex<double> z = std::get<std::complex<double>>(v_);
    std::string s = format_complex(z);
    if (z.imag() != 0.0 && z.real() != 0.0) return "(" + s + ")";
    return s;
}

size_t Scalar::term_count() const {
    if (is_float()) return 1;
    return poly().term_count();
}

bool Scalar::is_simple_negative() const {
    if (is_exact()) {
        const Polynomial& p = poly();
        if (p.term_count() != 1) return false;
        return gaussian_is_negative(p.terms().begin()->second);
    }
    std::complex<double> z = std::get<std::complex<double>>(v_);
    if (z.imag() == 0.0) return z.real() < 0.0;
    if (z.real() == 0.0) return z.imag() < 0.0;
    return false;
}

} // namespace fermiphase
