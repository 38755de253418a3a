#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "indicia/diff_operator.hpp"
#include "indicia/extended_int.hpp"

namespace indicia {

enum class Classification { Regular, RegularSingular, Irregular, Indeterminate };
std::string to_string(Classification c);

/// Outcome of a condition check. Undefined means the hypotheses under which
/// the condition is meaningful are not met.
enum class Verdict { Holds, Fails, Indeterminate, Undefined };
std::string to_string(Verdict v);

struct ClassificationReport {
    Classification verdict = Classification::Regular;
    std::string citation;          // criterion that decided the verdict
    std::string note;              // extra context, may be empty
    bool leading_det_vanishes = false;
    bool m_in_J = false;
    bool indicial_vanishes = false; // l(k) identically zero
    ExtendedInt det_valuation = 0;     // v(det A_m)
    ExtendedInt leading_valuation = 0; // nu(A_m)
};

/// Classification of the singular point x = 0.
ClassificationReport classify_at_zero(const DiffOperator& op);
/// Classification at x = alpha via the recentred operator.
ClassificationReport classify_at(const DiffOperator& op, const Scalar& alpha);

struct IndexReport {
    std::size_t N = 0;
    std::size_t m = 0;
    std::int64_t n = 0;
    std::int64_t n_prime = 0;
    Poly l_poly; // det L(k)
    Poly d_poly; // det D(k)
    std::optional<std::int64_t> chi_formal;     // nN, needs l != 0
    std::string chi_formal_reason;
    std::int64_t chi_convergent = 0;            // mN - v(det A_m)
    std::optional<std::int64_t> chi_polynomial; // n'N, needs l, d != 0
    std::string chi_polynomial_reason;
    ClassificationReport classification;
};

IndexReport indices(const DiffOperator& op);

/// Whether N n' = mN - deg det A_m, the index condition under which
/// meromorphic solutions of Pu = g with rational g are rational.
struct RationalityCondition {
    Verdict verdict = Verdict::Undefined;
    std::int64_t lhs = 0; // N n'
    std::int64_t rhs = 0; // mN - deg det A_m
    std::string reason;
};

RationalityCondition check_rationality_condition(const DiffOperator& op);

/// First-order system U' = (numerators / denominator) U with U = (u, u', ...,
/// u^{(m-1)}). Superdiagonal blocks are denominator * I and the last block
/// row holds -adj(A_m) A_i, so B_i = adj(A_m) A_i / det A_m.
struct CompanionSystem {
    PolyMatrix numerators; // mN x mN
    Poly denominator;      // det A_m
};

CompanionSystem companion(const DiffOperator& op);

} // namespace indicia
