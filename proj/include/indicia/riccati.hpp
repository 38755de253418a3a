#pragma once

#include <optional>
#include <string>
#include <vector>

#include "indicia/analysis.hpp"
#include "indicia/diff_operator.hpp"
#include "indicia/rational_function.hpp"
#include "indicia/roots.hpp"
#include "indicia/series.hpp"

namespace indicia {

/// Y' = A + B Y + Y C Y with N x N polynomial A, B, C and det C != 0.
class RiccatiSystem {
public:
    /// Throws InvalidOperator on shape mismatch or det C = 0.
    RiccatiSystem(PolyMatrix A, PolyMatrix B, PolyMatrix C);

    std::size_t dimension() const { return A_.rows(); }
    const PolyMatrix& A() const { return A_; }
    const PolyMatrix& B() const { return B_; }
    const PolyMatrix& C() const { return C_; }
    const Poly& c1() const { return c1_; }         // det C
    const PolyMatrix& C0() const { return C0_; }   // adj C, C C0 = c1 I

private:
    PolyMatrix A_, B_, C_;
    Poly c1_;
    PolyMatrix C0_;
};

/// Second-order operator satisfied by W when Y = -C^{-1} W' W^{-1}:
/// c1 W'' - (C B C0 + C' C0) W' + c1 C A W = 0.
struct Linearization {
    DiffOperator op;
    std::vector<Scalar> singular_points; // roots of c1 in the field, sorted
    Poly unresolved{1};                  // factor of c1 without roots in the field
    bool fully_resolved() const { return unresolved.is_constant(); }
};

Linearization linearize(const RiccatiSystem& sys, GroundField field = GroundField::GaussianRational);

/// Local certificate at one singular point.
struct PointCertificate {
    Scalar alpha;
    ClassificationReport classification;
    Poly local_indicial;               // l_alpha(k)
    std::vector<Root> roots;           // roots of l_alpha in Q(i)
    Poly unresolved{1};                // part of l_alpha without roots in Q(i)
    std::vector<FrobeniusResult> traces;
    Verdict verdict = Verdict::Holds;
    std::string reason;
};

struct ConvergenceCheck {
    bool part1 = false;                // 2 - v(c1) >= max(1 - nu(A_1), -nu(A_0))
    ExtendedInt part1_lhs = 0;
    ExtendedInt part1_rhs = 0;
    Verdict part2 = Verdict::Holds;    // regular singular at every point of Z
    std::vector<PointCertificate> points;
    std::string note;
};

/// Convergence of formal solutions at 0 and meromorphy of single-valued solutions.
ConvergenceCheck check_convergence(const RiccatiSystem& sys, const Linearization& lin);

struct RationalityCheck {
    Verdict verdict = Verdict::Fails;
    bool degree_polynomial_nonzero = false; // condition 1
    bool degree_inequality = false;         // condition 2
    ExtendedInt degree_lhs = 0;             // 2 - deg c1
    ExtendedInt degree_rhs = 0;             // min(1 - deg A_1, -deg A_0)
    Poly d_poly;
    std::vector<PointCertificate> points;   // condition 3
    std::string note;
};

/// Local exponent check at alpha for the rational-solution criterion: the
/// roots of l_alpha are simple integers and, for each root r', the recurrence
/// from x^{r'} is solvable through the largest root.
PointCertificate rational_exponent_check(const DiffOperator& op, const Scalar& alpha);

/// Sufficient conditions for every solution of the Riccati system to be rational.
RationalityCheck check_rational_solutions(const RiccatiSystem& sys, const Linearization& lin);

/// Local exponent check at alpha for the algebraic-solution criterion:
/// regular singular, mN simple rational roots of l_alpha, no integer differences.
PointCertificate algebraic_point_check(const DiffOperator& op, const Scalar& alpha);

struct AlgebraicityCheck {
    Verdict verdict = Verdict::Holds;
    std::vector<PointCertificate> points;
    std::string note;
};

AlgebraicityCheck check_algebraic_solutions(const RiccatiSystem& sys, const Linearization& lin);

/// Y' - A - B Y - Y C Y.
RationalMatrix riccati_residual(const RiccatiSystem& sys, const RationalMatrix& Y);

struct LiftResult {
    RationalMatrix W;
    RationalMatrix Y;      // -C^{-1} W' W^{-1}
    bool verified = false; // residual vanishes identically
};

/// Throws SingularMatrix if det W = 0.
LiftResult lift_and_verify(const RiccatiSystem& sys, const RationalMatrix& W);

/// Lifts of invertible matrices W assembled from the rational kernel of the
/// linearized operator: every N-subset of the kernel basis, then the first
/// subset with beta * (first column) + (next basis vector) for beta in {1, 2, -2}.
std::vector<LiftResult> rational_lifts(const RiccatiSystem& sys, const Linearization& lin,
                                       GroundField field = GroundField::GaussianRational,
                                       std::size_t max_lifts = 8);

} // namespace indicia
