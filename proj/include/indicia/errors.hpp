#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace indicia {

/// Malformed input text. Line and column are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : std::runtime_error(message + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line_(line), column_(column), bare_(message) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& bare_message() const { return bare_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string bare_;
};

/// Well-formed input that violates a structural invariant (shape, det A_m = 0, ...).
class InvalidOperator : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A mathematical precondition of the requested analysis is not met.
class HypothesisViolation : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A polynomial has an irreducible factor of degree > 1 over the ground field.
class UnsupportedFactorization : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A matrix that must be invertible has identically vanishing determinant.
class SingularMatrix : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An input file could not be read.
class InputFileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace indicia
