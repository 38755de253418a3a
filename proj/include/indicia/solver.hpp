#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "indicia/diff_operator.hpp"
#include "indicia/rational_function.hpp"
#include "indicia/roots.hpp"

namespace indicia {

/// Vector of rational functions over a common denominator. Normalized: the
/// denominator is monic and shares no factor with all numerators at once.
class RationalVector {
public:
    RationalVector() = default;
    RationalVector(PolyVector numerators, Poly denominator);
    static RationalVector from_polynomials(PolyVector v) { return RationalVector(std::move(v), Poly(1)); }
    /// Common-denominator form of a list of rational functions.
    static RationalVector from_functions(const std::vector<RationalFunction>& fs);

    const PolyVector& numerators() const { return numerators_; }
    const Poly& denominator() const { return denominator_; }
    std::size_t size() const { return numerators_.size(); }
    bool is_zero() const;
    std::vector<RationalFunction> functions() const;
    /// Largest pole order of a component at alpha; -inf for the zero vector.
    ExtendedInt pole_order(const Scalar& alpha) const;

    friend bool operator==(const RationalVector&, const RationalVector&) = default;

private:
    PolyVector numerators_;
    Poly denominator_{1};
};

/// Upper bound for deg u over polynomial solutions of Pu = g. The top term of
/// Pu is D(deg u) u_top x^{deg u - n'}, so deg u <= deg g + n' unless deg u
/// is a root of d. An absent bound or a negative one admits only u = 0.
struct DegreeBound {
    std::optional<std::int64_t> bound;
    std::optional<std::int64_t> rhs_driven; // deg g + n'
    std::optional<std::int64_t> indicial;   // largest nonnegative integer root of d
};

/// Throws HypothesisViolation if d = 0.
DegreeBound degree_bound(const DiffOperator& op, ExtendedInt g_degree);

struct PolynomialSolution {
    DegreeBound bound;
    std::vector<PolyVector> kernel;      // echelon basis of ker P on polynomials
    std::optional<PolyVector> particular; // nullopt: no polynomial solution
};

/// Throws HypothesisViolation if d = 0.
PolynomialSolution solve_polynomial(const DiffOperator& op, const PolyVector& g);

/// Pole order bound at a candidate pole alpha:
/// p = max(0, -(least integer root of l_alpha), polord_alpha(g) - n_alpha).
struct PoleBound {
    Scalar point;
    std::int64_t order = 0;
    std::int64_t local_n = 0;     // n of the operator recentred at alpha
    Poly local_indicial;          // l_alpha(k)
    std::optional<std::int64_t> indicial_source;
    std::optional<std::int64_t> rhs_source;
};

struct RationalSolution {
    std::vector<PoleBound> poles;             // ordered by point
    Poly multiplier{1};                       // prod (x - alpha)^{p_alpha}
    std::vector<RationalVector> kernel;
    std::optional<RationalVector> particular; // nullopt: no rational solution
};

/// Rational solutions of Pu = g. Candidate poles are the roots of det A_m and
/// of the denominator of g in the chosen field. Throws
/// UnsupportedFactorization if some factor has no roots there, and
/// HypothesisViolation if d = 0 or l_alpha = 0 at a candidate pole.
RationalSolution solve_rational(const DiffOperator& op, const RationalVector& g,
                                GroundField field = GroundField::GaussianRational);

} // namespace indicia
