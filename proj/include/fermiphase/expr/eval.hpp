#pragma once

#include "fermiphase/element.hpp"
#include "fermiphase/expr/ast.hpp"

namespace fermiphase::expr {

class eval_error : public algebra_error {
public:
    eval_error(size_t offset, const std::string& what)
        : algebra_error(what + " (at offset " + std::to_string(offset) + ")"),
          offset_(offset) {}
    size_t offset() const { return offset_; }

private:
    size_t offset_;
};

/// Evaluation context for the CLI: Grassmann pairs (alpha, alphas) and
/// (beta, betas), the mode pair (a, ad), and the commuting symbols
/// nbar, nu, eps, T, r plus the conjugate pair lambda/lambdas.
AlgebraContextPtr default_eval_context();

/// Evaluates an AST to a canonical SuperElement. Exact literals stay exact;
/// decimal literals switch the affected coefficients to float mode.
SuperElement evaluate(const NodePtr& node, const AlgebraContextPtr& ctx);

/// parse + evaluate + canonical printing, the CLI `eval` path.
std::string eval_to_string(const std::string& text);

} // namespace fermiphase::expr
