#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "indicia/poly.hpp"

namespace indicia {

/// Field over which roots are sought. GaussianRational is the default ground
/// field; Rational models inputs restricted to real rational data.
enum class GroundField { Rational, GaussianRational };

struct Root {
    Scalar value;
    std::size_t multiplicity = 1;
    friend bool operator==(const Root&, const Root&) = default;
};

/// p = leading * prod (x - r)^mult * unresolved, with unresolved monic and
/// free of roots in the ground field.
struct Factorization {
    Scalar leading;
    std::vector<Root> roots; // sorted by Scalar ordering
    Poly unresolved{1};

    bool fully_resolved() const { return unresolved.is_constant(); }
    std::size_t root_count() const;
};

/// Roots of a nonzero polynomial in the chosen field, with multiplicities.
/// Throws std::domain_error on the zero polynomial.
Factorization linear_factors(const Poly& p, GroundField field);

/// Rational roots (with multiplicity) of a nonzero polynomial over Q(i).
std::vector<Root> rational_roots(const Poly& p);

/// Integer roots (with multiplicity), ascending.
std::vector<Root> integer_roots(const Poly& p);

/// Largest integer root >= 0, if any. Nonzero p required.
std::optional<std::int64_t> max_nonnegative_integer_root(const Poly& p);

/// Smallest integer root, if any. Nonzero p required.
std::optional<std::int64_t> min_integer_root(const Poly& p);

/// Prime factorization of |n| (n != 0) as (prime, exponent), ascending.
std::vector<std::pair<mpz_class, unsigned>> factor_integer(const mpz_class& n);

} // namespace indicia
