#include "fermiphase/expr/eval.hpp"

#include "fermiphase/expr/parser.hpp"
#include "fermiphase/kernel.hpp"

namespace fermiphase::expr {

AlgebraContextPtr default_eval_context() {
    auto symbols = SymbolTable::create({"nbar", "nu", "eps", "T", "r"},
                                       {{"lambda", "lambdas"}});
    return AlgebraContext::create(symbols, {{"alpha", "alphas"}, {"beta", "betas"}});
}

namespace {

Scalar number_scalar(const Node& n) {
    if (n.decimal) {
        std::complex<double> v = n.imaginary ? std::complex<double>(0.0, n.decimal_value)
                                             : std::complex<double>(n.decimal_value, 0.0);
        return Scalar::complex(v);
    }
    if (n.imaginary) return Scalar::gaussian({Rational(0), n.rational_value});
    return Scalar::rational(n.rational_value);
}

} // namespace

SuperElement evaluate(const NodePtr& node, const AlgebraContextPtr& ctx) {
    const Node& n = *node;
    switch (n.kind) {
    case NodeKind::number:
        return SuperElement::from_scalar(ctx, number_scalar(n));
    case NodeKind::identifier: {
        int g = ctx->find(n.name);
        if (g >= 0) return SuperElement::generator(ctx, g);
        if (ctx->symbols() && ctx->symbols()->index_of(n.name) >= 0)
            return SuperElement::from_scalar(ctx, Scalar::symbol(ctx->symbols(), n.name));
        throw eval_error(n.offset, "unknown identifier '" + n.name + "'");
    }
    case NodeKind::unary_minus:
        return -evaluate(n.children[0], ctx);
    case NodeKind::add:
        return evaluate(n.children[0], ctx) + evaluate(n.children[1], ctx);
    case NodeKind::sub:
        return evaluate(n.children[0], ctx) - evaluate(n.children[1], ctx);
    case NodeKind::mul:
        return evaluate(n.children[0], ctx) * evaluate(n.children[1], ctx);
    case NodeKind::power: {
        if (n.exponent < 0) throw eval_error(n.offset, "negative powers are not defined");
        SuperElement base = evaluate(n.children[0], ctx);
        SuperElement acc = SuperElement::unit(ctx);
        for (long k = 0; k < n.exponent; ++k) acc *= base;
        return acc;
    }
    case NodeKind::call: {
        SuperElement arg = evaluate(n.children[0], ctx);
        try {
            if (n.name == "dag") return adjoint(arg);
            if (n.name == "tr") return fock_trace(arg);
            if (n.name == "body") return SuperElement::from_scalar(ctx, body(arg));
            if (n.name == "soul") return soul(arg);
            if (n.name == "int")
                return berezin_integrate(arg, ctx->grassmann_pair_of(n.measure));
        } catch (const eval_error&) {
            throw;
        } catch (const algebra_error& e) {
            throw eval_error(n.offset, e.what());
        }
        throw eval_error(n.offset, "unknown function '" + n.name + "'");
    }
    }
    throw eval_error(n.offset, "malformed expression tree");
}

std::string eval_to_string(const std::string& text) {
    NodePtr ast = parse(text);
    return evaluate(ast, default_eval_context()).to_string();
}

} // namespace fermiphase::expr
