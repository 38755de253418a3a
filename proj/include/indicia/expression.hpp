#pragma once

#include <string>
#include <string_view>

#include "indicia/poly.hpp"
#include "indicia/roots.hpp"

namespace indicia {

struct ExpressionOptions {
    GroundField field = GroundField::GaussianRational;
    std::string variable = "x";
};

/// Parse a polynomial expression.
///
/// Grammar (whitespace between tokens is ignored):
///
///     sum     := term (('+' | '-') term)*
///     term    := unary ('*' unary)*
///     unary   := ('+' | '-') unary | power
///     power   := primary ('^' digits)?
///     primary := number | 'i' | variable | '(' sum ')'
///     number  := digits ('/' digits)? with an optional 'i' glued to either
///                digit run, so "3i", "1/2i" and "3i/4" are imaginary literals
///
/// Juxtaposition ("2x", "x(x+1)") is rejected. Errors carry the 1-based
/// column within `text` (line is always 1).
Poly parse_poly(std::string_view text, const ExpressionOptions& options = {});

/// Parse a constant expression such as "1/2+3i".
Scalar parse_scalar(std::string_view text, const ExpressionOptions& options = {});

} // namespace indicia
