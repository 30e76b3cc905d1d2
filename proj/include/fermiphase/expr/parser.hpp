#pragma once

#include "fermiphase/errors.hpp"
#include "fermiphase/expr/ast.hpp"

namespace fermiphase::expr {

class parse_error : public algebra_error {
public:
    parse_error(size_t offset, const std::string& expected, const std::string& found)
        : algebra_error("syntax error at offset " + std::to_string(offset) + ": expected " +
                        expected + ", found " + found),
          offset_(offset), expected_(expected) {}

    size_t offset() const { return offset_; }
    const std::string& expected() const { return expected_; }

private:
    size_t offset_;
    std::string expected_;
};

/// Recursive-descent parser for the expression language. Precedence:
/// ^  >  unary -  >  *  >  binary + -, with * non-commutative and all
/// binary operators left-associative. Unicode aliases (Greek letters for
/// the generator names, dagger postfix) are accepted on input but the
/// printer only ever emits ASCII. Input is limited to 64 KiB.
NodePtr parse(const std::string& text);

} // namespace fermiphase::expr
