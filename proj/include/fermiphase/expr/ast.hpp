#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fermiphase/rational.hpp"

namespace fermiphase::expr {

enum class NodeKind {
    number,
    identifier,
    unary_minus,
    add,
    sub,
    mul,
    power,
    call, // dag(e), tr(e), body(e), soul(e), int[pair](e)
};

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
    NodeKind kind;
    size_t offset = 0; // byte offset into the source, for diagnostics

    // number: the literal text is kept verbatim so printing round-trips
    std::string literal;
    bool imaginary = false;
    bool decimal = false;
    Rational rational_value;
    double decimal_value = 0.0;

    std::string name;    // identifier or call name
    std::string measure; // int[measure]
    long exponent = 0;   // power

    std::vector<NodePtr> children;
};

bool equal(const NodePtr& a, const NodePtr& b);

/// Minimal-parenthesis rendering; parse(to_string(ast)) == ast.
std::string to_string(const NodePtr& node);

} // namespace fermiphase::expr
