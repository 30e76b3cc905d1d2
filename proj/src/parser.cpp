#include "fermiphase/expr/parser.hpp"

#include <cctype>
#include <cstdlib>

namespace fermiphase::expr {

namespace {

enum class TokenKind { number, identifier, punct, dagger, end };

struct Token {
    TokenKind kind;
    std::string text; // mapped to ASCII for unicode aliases
    size_t offset;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : src_(text) { advance(); }

    const Token& current() const { return tok_; }

    void advance() {
        while (pos_ < src_.size() && std::isspace((unsigned char)src_[pos_])) ++pos_;
        size_t start = pos_;
        if (pos_ >= src_.size()) {
            tok_ = {TokenKind::end, "", start};
            return;
        }
        unsigned char c = (unsigned char)src_[pos_];
        if (std::isdigit(c) || (c == '.' && pos_ + 1 < src_.size() &&
                                std::isdigit((unsigned char)src_[pos_ + 1]))) {
            lex_number(start);
            return;
        }
        if (std::isalpha(c) || c == '_') {
            size_t end = pos_;
            while (end < src_.size() &&
                   (std::isalnum((unsigned char)src_[end]) || src_[end] == '_'))
                ++end;
            tok_ = {TokenKind::identifier, src_.substr(pos_, end - pos_), start};
            pos_ = end;
            return;
        }
        // Unicode aliases: alpha, beta, dagger.
        if (src_.compare(pos_, 2, "\xce\xb1") == 0) {
            tok_ = {TokenKind::identifier, "alpha", start};
            pos_ += 2;
            return;
        }
        if (src_.compare(pos_, 2, "\xce\xb2") == 0) {
            tok_ = {TokenKind::identifier, "beta", start};
            pos_ += 2;
            return;
        }
        if (src_.compare(pos_, 3, "\xe2\x80\xa0") == 0) {
            tok_ = {TokenKind::dagger, "†", start};
            pos_ += 3;
            return;
        }
        if (std::string("+-*^()[]").find((char)c) != std::string::npos) {
            tok_ = {TokenKind::punct, std::string(1, (char)c), start};
            ++pos_;
            return;
        }
        throw parse_error(start, "a token", "'" + std::string(1, (char)c) + "'");
    }

private:
    const std::string& src_;
    size_t pos_ = 0;
    Token tok_{TokenKind::end, "", 0};

    void lex_number(size_t start) {
        size_t end = pos_;
        while (end < src_.size() && std::isdigit((unsigned char)src_[end])) ++end;
        if (end < src_.size() && src_[end] == '.') {
            ++end;
            while (end < src_.size() && std::isdigit((unsigned char)src_[end])) ++end;
        } else if (end < src_.size() && src_[end] == '/' && end + 1 < src_.size() &&
                   std::isdigit((unsigned char)src_[end + 1])) {
            ++end;
            while (end < src_.size() && std::isdigit((unsigned char)src_[end])) ++end;
        }
        // Trailing 'i' marks an imaginary literal unless it starts an identifier.
        if (end < src_.size() && src_[end] == 'i' &&
            (end + 1 >= src_.size() || (!std::isalnum((unsigned char)src_[end + 1]) &&
                                        src_[end + 1] != '_')))
            ++end;
        tok_ = {TokenKind::number, src_.substr(pos_, end - pos_), start};
        pos_ = end;
    }
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    NodePtr run() {
        NodePtr e = expression();
        if (lex_.current().kind != TokenKind::end)
            throw parse_error(lex_.current().offset, "end of input", found());
        return e;
    }

private:
    Lexer lex_;

    std::string found() const {
        const Token& t = lex_.current();
        return t.kind == TokenKind::end ? "end of input" : "'" + t.text + "'";
    }

    bool at_punct(const char* p) const {
        return lex_.current().kind == TokenKind::punct && lex_.current().text == p;
    }

    void expect_punct(const char* p) {
        if (!at_punct(p))
            throw parse_error(lex_.current().offset, std::string("'") + p + "'", found());
        lex_.advance();
    }

    NodePtr expression() {
        NodePtr left = term();
        while (at_punct("+") || at_punct("-")) {
            bool plus = lex_.current().text == "+";
            size_t off = lex_.current().offset;
            lex_.advance();
            NodePtr right = term();
            auto n = std::make_shared<Node>();
            n->kind = plus ? NodeKind::add : NodeKind::sub;
            n->offset = off;
            n->children = {left, right};
            left = n;
        }
        return left;
    }

    NodePtr term() {
        NodePtr left = factor();
        while (at_punct("*")) {
            size_t off = lex_.current().offset;
            lex_.advance();
            NodePtr right = factor();
            auto n = std::make_shared<Node>();
            n->kind = NodeKind::mul;
            n->offset = off;
            n->children = {left, right};
            left = n;
        }
        return left;
    }

    NodePtr factor() {
        if (at_punct("-")) {
            size_t off = lex_.current().offset;
            lex_.advance();
            auto n = std::make_shared<Node>();
            n->kind = NodeKind::unary_minus;
            n->offset = off;
            n->children = {factor()};
            return n;
        }
        return postfix();
    }

    NodePtr postfix() {
        NodePtr e = power();
        while (lex_.current().kind == TokenKind::dagger) {
            auto n = std::make_shared<Node>();
            n->kind = NodeKind::call;
            n->name = "dag";
            n->offset = lex_.current().offset;
            n->children = {e};
            lex_.advance();
            e = n;
        }
        return e;
    }

    NodePtr power() {
        NodePtr base = atom();
        if (at_punct("^")) {
            size_t off = lex_.current().offset;
            lex_.advance();
            const Token& t = lex_.current();
            if (t.kind != TokenKind::number || t.text.find_first_of("./i") != std::string::npos)
                throw parse_error(t.offset, "an integer exponent", found());
            auto n = std::make_shared<Node>();
            n->kind = NodeKind::power;
            n->offset = off;
            n->exponent = std::strtol(t.text.c_str(), nullptr, 10);
            n->children = {base};
            lex_.advance();
            return n;
        }
        return base;
    }

    NodePtr atom() {
        const Token tok = lex_.current();
        if (tok.kind == TokenKind::number) {
            lex_.advance();
            return make_number(tok);
        }
        if (tok.kind == TokenKind::identifier) {
            lex_.advance();
            if (tok.text == "i" || tok.text == "int" || is_call_name(tok.text))
                return identifier_like(tok);
            auto n = std::make_shared<Node>();
            n->kind = NodeKind::identifier;
            n->name = tok.text;
            n->offset = tok.offset;
            return n;
        }
        if (at_punct("(")) {
            lex_.advance();
            NodePtr inner = expression();
            expect_punct(")");
            return inner;
        }
        throw parse_error(tok.offset, "a number, identifier or '('", found());
    }

    static bool is_call_name(const std::string& s) {
        return s == "dag" || s == "tr" || s == "body" || s == "soul";
    }

    NodePtr identifier_like(const Token& tok) {
        if (tok.text == "i") {
            auto n = std::make_shared<Node>();
            n->kind = NodeKind::number;
            n->literal = "i";
            n->imaginary = true;
            n->rational_value = Rational(1);
            n->offset = tok.offset;
            return n;
        }
        if (tok.text == "int") {
            expect_punct("[");
            const Token& m = lex_.current();
            if (m.kind != TokenKind::identifier)
                throw parse_error(m.offset, "a Grassmann pair name", found());
            std::string measure = m.text;
            lex_.advance();
            expect_punct("]");
            expect_punct("(");
            NodePtr arg = expression();
            expect_punct(")");
            auto n = std::make_shared<Node>();
            n->kind = NodeKind::call;
            n->name = "int";
            n->measure = measure;
            n->offset = tok.offset;
            n->children = {arg};
            return n;
        }
        if (is_call_name(tok.text) && at_punct("(")) {
            lex_.advance();
            NodePtr arg = expression();
            expect_punct(")");
            auto n = std::make_shared<Node>();
            n->kind = NodeKind::call;
            n->name = tok.text;
            n->offset = tok.offset;
            n->children = {arg};
            return n;
        }
        // A call-looking identifier without '(' is a plain identifier.
        auto n = std::make_shared<Node>();
        n->kind = NodeKind::identifier;
        n->name = tok.text;
        n->offset = tok.offset;
        return n;
    }

    NodePtr make_number(const Token& tok) {
        auto n = std::make_shared<Node>();
        n->kind = NodeKind::number;
        n->literal = tok.text;
        n->offset = tok.offset;
        std::string body = tok.text;
        if (!body.empty() && body.back() == 'i') {
            n->imaginary = true;
            body.pop_back();
        }
        if (body.find('.') != std::string::npos) {
            n->decimal = true;
            n->decimal_value = std::strtod(body.c_str(), nullptr);
        } else if (auto slash = body.find('/'); slash != std::string::npos) {
            long long num = std::strtoll(body.substr(0, slash).c_str(), nullptr, 10);
            long long den = std::strtoll(body.substr(slash + 1).c_str(), nullptr, 10);
            if (den == 0)
                throw parse_error(tok.offset, "a nonzero denominator", "'" + tok.text + "'");
            n->rational_value = Rational(num, den);
        } else {
            n->rational_value = Rational(std::strtoll(body.c_str(), nullptr, 10));
        }
        return n;
    }
};

} // namespace

NodePtr parse(const std::string& text) {
    if (text.size() > 64 * 1024)
        throw parse_error(64 * 1024, "input of at most 64 KiB", "longer input");
    Parser p(text);
    return p.run();
}

bool equal(const NodePtr& a, const NodePtr& b) {
    if (!a || !b) return a == b;
    if (a->kind != b->kind || a->literal != b->literal || a->imaginary != b->imaginary ||
        a->decimal != b->decimal || a->name != b->name || a->measure != b->measure ||
        a->exponent != b->exponent || a->children.size() != b->children.size())
        return false;
    if (a->kind == NodeKind::number) {
        if (a->decimal && a->decimal_value != b->decimal_value) return false;
        if (!a->decimal && a->rational_value != b->rational_value) return false;
    }
    for (size_t i = 0; i < a->children.size(); ++i)
        if (!equal(a->children[i], b->children[i])) return false;
    return true;
}

namespace {

// Precedence levels for printing: +- is 1, * is 2, unary - is 3, ^ is 4.
int node_level(const NodePtr& n) {
    switch (n->kind) {
    case NodeKind::add:
    case NodeKind::sub: return 1;
    case NodeKind::mul: return 2;
    case NodeKind::unary_minus: return 3;
    case NodeKind::power: return 4;
    default: return 5;
    }
}

void print(const NodePtr& n, int min_level, std::string& out) {
    bool parens = node_level(n) < min_level;
    if (parens) out += "(";
    switch (n->kind) {
    case NodeKind::number:
        out += n->literal;
        break;
    case NodeKind::identifier:
        out += n->name;
        break;
    case NodeKind::unary_minus:
        out += "-";
        print(n->children[0], 3, out);
        break;
    case NodeKind::add:
    case NodeKind::sub:
        print(n->children[0], 1, out);
        out += n->kind == NodeKind::add ? " + " : " - ";
        print(n->children[1], 2, out);
        break;
    case NodeKind::mul:
        print(n->children[0], 2, out);
        out += "*";
        print(n->children[1], 3, out);
        break;
    case NodeKind::power:
        print(n->children[0], 5, out);
        out += "^" + std::to_string(n->exponent);
        break;
    case NodeKind::call:
        out += n->name;
        if (n->name == "int") out += "[" + n->measure + "]";
        out += "(";
        print(n->children[0], 0, out);
        out += ")";
        break;
    }
    if (parens) out += ")";
}

} // namespace

std::string to_string(const NodePtr& node) {
    std::string out;
    print(node, 0, out);
    return out;
}

} // namespace fermiphase::expr
