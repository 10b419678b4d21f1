#pragma once

#include <stdexcept>
#include <string>

namespace ehk {

// Base class for everything this library throws on purpose.
struct CalcError : std::runtime_error {
    explicit CalcError(const std::string& what) : std::runtime_error(what) {}
};

// Division by an exact zero (field element or rational).
struct DivisionByZeroError : CalcError {
    explicit DivisionByZeroError(const std::string& what = "division by zero")
        : CalcError(what) {}
};

// Evaluation hit a zero denominator: the assignment lies on a pole.
struct PoleError : CalcError {
    explicit PoleError(const std::string& what = "pole: denominator evaluates to zero")
        : CalcError(what) {}
};

// Precondition violations: bad exponents, unsupported slopes, containment
// failures and the like.
struct DomainError : CalcError {
    explicit DomainError(const std::string& what) : CalcError(what) {}
};

// Text input rejected; carries the byte offset of the offending token.
struct ParseError : CalcError {
    size_t pos;
    ParseError(const std::string& what, size_t at)
        : CalcError(what + " (at position " + std::to_string(at) + ")"), pos(at) {}
};

} // namespace ehk
