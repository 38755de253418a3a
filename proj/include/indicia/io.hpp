#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "indicia/diff_operator.hpp"
#include "indicia/expression.hpp"
#include "indicia/rational_function.hpp"
#include "indicia/riccati.hpp"
#include "indicia/solver.hpp"

namespace indicia {

using Json = nlohmann::ordered_json;

/// Operator file: {"N": int, "order": int, "coefficients": [A_0, ..., A_m]},
/// each A_i a row-major N x N array of polynomial strings.
/// Throws ParseError (with line/column in the file) or InvalidOperator.
DiffOperator parse_operator(std::string_view text, const ExpressionOptions& options = {});

/// Right-hand side: {"numerators": [...], "denominator": "..."}; the
/// denominator defaults to "1".
RationalVector parse_rhs(std::string_view text, const ExpressionOptions& options = {});

/// Riccati file: {"N": int, "A": [[...]], "B": [[...]], "C": [[...]]}.
RiccatiSystem parse_riccati(std::string_view text, const ExpressionOptions& options = {});

/// Matrix of rational functions: {"numerators": [[...]], "denominator": "..."}.
RationalMatrix parse_rational_matrix(std::string_view text, const ExpressionOptions& options = {});

/// Canonical operator file text; parse_operator inverts it exactly.
std::string print_operator(const DiffOperator& op);
Json operator_to_json(const DiffOperator& op);

/// Text file contents; throws InputFileError if the file cannot be read.
std::string read_file(const std::string& path);

} // namespace indicia
