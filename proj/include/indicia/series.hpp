#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "indicia/diff_operator.hpp"
#include "indicia/linalg.hpp"

namespace indicia {

/// u = x^exponent * sum_j coeffs[j] x^j, truncated after coeffs.size() terms.
struct SeriesJet {
    Scalar exponent;
    std::vector<ScalarVector> coeffs;

    std::size_t truncation() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    bool is_zero() const;
    /// Components as polynomials; exponent must be a nonnegative integer.
    PolyVector to_polynomials() const;
};

struct ResonanceStep {
    std::size_t offset = 0; // j with l(k0 + j) = 0, or the failing step
    bool solvable = true;
    std::size_t kernel_dimension = 0; // dim ker L(k0 + j)
};

/// Resonant steps of one Frobenius branch. At most one step is unsolvable,
/// and it is the last one recorded.
struct ResonanceTrace {
    std::vector<ResonanceStep> steps;
    bool completed() const { return steps.empty() || steps.back().solvable; }
};

struct FrobeniusBranch {
    ScalarVector initial;          // u_0, a kernel vector of L(k0)
    std::optional<SeriesJet> jet;  // absent if the branch aborted
    ResonanceTrace trace;
};

struct FrobeniusResult {
    Scalar exponent;
    std::size_t truncation = 0;
    std::vector<FrobeniusBranch> branches; // one per echelon basis vector of ker L(k0)
};

/// x^{m - k0} P(x^{k0} u) as a polynomial vector, by direct differentiation.
/// Its coefficient of x^{m+e} is the coefficient of x^{k0+e} in P(x^{k0} u).
PolyVector apply_with_exponent(const DiffOperator& op, const Scalar& k0, const PolyVector& u);

/// Power-series jets (integer exponents >= 0, absolute degree <= T) that are
/// truncations of formal kernel elements of P, as an echelon basis ordered by
/// valuation. Each jet's exponent is its valuation.
struct KernelJets {
    std::vector<SeriesJet> basis;
    std::size_t lookahead = 0; // truncation used to discard spurious top-order freedom
    bool exact = true;         // false when l = 0 and the lookahead is a stabilization heuristic
};
KernelJets formal_kernel_jets(const DiffOperator& op, std::size_t T);

struct SeriesSolution {
    SeriesJet jet;             // exponent 0, coefficients u_0..u_T
    std::size_t lookahead = 0;
    bool extends = true;       // solvable at the lookahead truncation
};

/// A jet u with Pu = g mod x^{T-n+1}; nullopt if the truncated system is
/// inconsistent. The answer is reduced against the kernel jets so that it
/// vanishes at every leading position of that basis.
std::optional<SeriesSolution> solve_series(const DiffOperator& op, const PolyVector& g, std::size_t T);

/// Frobenius recurrence at exponent k0; throws HypothesisViolation if l = 0.
FrobeniusResult frobenius_jets(const DiffOperator& op, const Scalar& k0, std::size_t T);

struct GrowthReport {
    bool applicable = false;       // needs truncation >= 8
    bool factorial_growth = false;
    double max_ratio = 0.0;        // max |u_{j+1}| / ((j+1)|u_j|) on the window, display only
    std::size_t window_pairs = 0;
    std::string note;
};

/// Ratio test on the trailing coefficients. With q_j = |u_{j+1}|^2 / ((j+1)^2 |u_j|^2),
/// growth is flagged as factorial when (j+1) q_j does not decrease across the window.
GrowthReport divergence_probe(const SeriesJet& jet);

} // namespace indicia
