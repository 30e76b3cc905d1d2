#pragma once

#include <stdexcept>
#include <string>

namespace fermiphase {

// Base for everything thrown by the algebra kernel and the layers above it.
class algebra_error : public std::runtime_error {
public:
    explicit algebra_error(const std::string& what) : std::runtime_error(what) {}
};

// Values from two different algebra contexts (or symbol tables) were combined.
class context_error : public algebra_error {
public:
    explicit context_error(const std::string& what) : algebra_error(what) {}
};

// Berezin integration requested over generators that are not a Grassmann pair.
class invalid_measure_error : public algebra_error {
public:
    explicit invalid_measure_error(const std::string& what) : algebra_error(what) {}
};

// Linear substitution targeting mode operators or colliding images.
class invalid_substitution_error : public algebra_error {
public:
    explicit invalid_substitution_error(const std::string& what) : algebra_error(what) {}
};

// Operation requires definite (usually even) Grassmann parity.
class parity_error : public algebra_error {
public:
    explicit parity_error(const std::string& what) : algebra_error(what) {}
};

// Operand outside the domain an operation is defined on
// (e.g. exponential of a mixed Grassmann/operator element).
class unsupported_operand_error : public algebra_error {
public:
    explicit unsupported_operand_error(const std::string& what) : algebra_error(what) {}
};

// A superfunction derivative was requested at a point where it does not exist.
class non_differentiable_point_error : public algebra_error {
public:
    explicit non_differentiable_point_error(const std::string& what) : algebra_error(what) {}
};

// Numeric parameter outside its admissible range.
class domain_error : public algebra_error {
public:
    explicit domain_error(const std::string& what) : algebra_error(what) {}
};

// Density operator violating positivity or normalization.
class invalid_state_error : public algebra_error {
public:
    explicit invalid_state_error(const std::string& what) : algebra_error(what) {}
};

// Majorization test function failing its f(0) = 0 or concavity pre-check.
class invalid_test_function_error : public algebra_error {
public:
    explicit invalid_test_function_error(const std::string& what) : algebra_error(what) {}
};

} // namespace fermiphase
