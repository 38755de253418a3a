#include "indicia/riccati.hpp"

#include <algorithm>

#include "indicia/errors.hpp"
#include "indicia/solver.hpp"

namespace indicia {

RiccatiSystem::RiccatiSystem(PolyMatrix A, PolyMatrix B, PolyMatrix C)
    : A_(std::move(A)), B_(std::move(B)), C_(std::move(C)) {
    const std::size_t N = A_.rows();
    for (const PolyMatrix* m : {&A_, &B_, &C_})
        if (m->rows() != N || m->cols() != N || N == 0)
            throw InvalidOperator("Riccati coefficients A, B, C must be square of equal size");
    DetAdjugate da = det_adjugate(C_);
    if (da.det.is_zero()) throw InvalidOperator("det C vanishes identically");
    c1_ = std::move(da.det);
    C0_ = std::move(da.adjugate);
}

Linearization linearize(const RiccatiSystem& sys, GroundField field) {
    const std::size_t N = sys.dimension();
    PolyMatrix a2 = PolyMatrix::scalar_identity(N, sys.c1());
    PolyMatrix a1 = -(sys.C() * sys.B() * sys.C0() + sys.C().derivative() * sys.C0());
    PolyMatrix a0 = sys.c1() * (sys.C() * sys.A());
    Linearization lin{DiffOperator({std::move(a0), std::move(a1), std::move(a2)}), {}, Poly(1)};
    const Factorization f = linear_factors(sys.c1(), field);
    for (const auto& r : f.roots) lin.singular_points.push_back(r.value);
    lin.unresolved = f.unresolved;
    return lin;
}

namespace {

PointCertificate local_data(const DiffOperator& op, const Scalar& alpha, const DiffOperator& local) {
    PointCertificate cert;
    cert.alpha = alpha;
    cert.classification = classify_at(op, alpha);
    cert.local_indicial = indicial_polynomial(local);
    if (!cert.local_indicial.is_zero()) {
        const Factorization f = linear_factors(cert.local_indicial, GroundField::GaussianRational);
        cert.roots = f.roots;
        cert.unresolved = f.unresolved;
    }
    return cert;
}

Verdict combine(const std::vector<PointCertificate>& points, bool fully_resolved) {
    bool indeterminate = !fully_resolved;
    for (const auto& p : points) {
        if (p.verdict == Verdict::Fails) return Verdict::Fails;
        if (p.verdict != Verdict::Holds) indeterminate = true;
    }
    return indeterminate ? Verdict::Indeterminate : Verdict::Holds;
}

} // namespace

PointCertificate rational_exponent_check(const DiffOperator& op, const Scalar& alpha) {
    const DiffOperator local = op.shifted(alpha);
    PointCertificate cert = local_data(op, alpha, local);
    if (cert.local_indicial.is_zero()) {
        cert.verdict = Verdict::Indeterminate;
        cert.reason = "local indicial polynomial vanishes identically";
        return cert;
    }
    if (!cert.unresolved.is_constant()) {
        cert.verdict = Verdict::Fails;
        cert.reason = "factor " + cert.unresolved.to_string("k") + " has no rational roots";
        return cert;
    }
    std::vector<std::int64_t> ints;
    for (const auto& r : cert.roots) {
        if (!r.value.is_integer()) {
            cert.verdict = Verdict::Fails;
            cert.reason = "root " + r.value.to_string() + " is not an integer";
            return cert;
        }
        if (r.multiplicity > 1) {
            cert.verdict = Verdict::Fails;
            cert.reason = "root " + r.value.to_string() + " is repeated";
            return cert;
        }
        ints.push_back(r.value.to_int64());
    }
    std::sort(ints.begin(), ints.end());
    for (std::size_t i = 0; i + 1 < ints.size(); ++i) {
        const auto reach = static_cast<std::size_t>(ints.back() - ints[i]);
        FrobeniusResult fr = frobenius_jets(local, Scalar(static_cast<long>(ints[i])), reach);
        for (const auto& br : fr.branches) {
            if (!br.trace.completed() && cert.verdict == Verdict::Holds) {
                cert.verdict = Verdict::Fails;
                cert.reason = "recurrence from exponent " + std::to_string(ints[i]) + " breaks at offset " +
                              std::to_string(br.trace.steps.back().offset);
            }
        }
        cert.traces.push_back(std::move(fr));
    }
    if (cert.verdict == Verdict::Holds)
        cert.reason = ints.size() > 1 ? "integer simple roots; every resonant step solvable" : "integer simple roots";
    return cert;
}

ConvergenceCheck check_convergence(const RiccatiSystem& sys, const Linearization& lin) {
    ConvergenceCheck c;
    const auto& op = lin.op;
    c.part1_lhs = ExtendedInt(2) - sys.c1().valuation();
    c.part1_rhs = max(ExtendedInt(1) - op.coefficient(1).valuation(), -op.coefficient(0).valuation());
    c.part1 = c.part1_lhs >= c.part1_rhs;
    for (const auto& z : lin.singular_points) {
        PointCertificate p;
        p.alpha = z;
        p.classification = classify_at(op, z);
        switch (p.classification.verdict) {
        case Classification::RegularSingular:
        case Classification::Regular: p.verdict = Verdict::Holds; break;
        case Classification::Irregular: p.verdict = Verdict::Fails; break;
        case Classification::Indeterminate: p.verdict = Verdict::Indeterminate; break;
        }
        p.reason = p.classification.citation;
        c.points.push_back(std::move(p));
    }
    c.part2 = combine(c.points, lin.fully_resolved());
    c.note = "the meromorphy conclusion concerns single-valued solutions; single-valuedness is not checked";
    return c;
}

RationalityCheck check_rational_solutions(const RiccatiSystem& sys, const Linearization& lin) {
    RationalityCheck r;
    const auto& op = lin.op;
    r.d_poly = degree_polynomial(op);
    r.degree_polynomial_nonzero = !r.d_poly.is_zero();
    r.degree_lhs = ExtendedInt(2) - sys.c1().degree();
    r.degree_rhs = min(ExtendedInt(1) - op.coefficient(1).degree(), -op.coefficient(0).degree());
    r.degree_inequality = r.degree_lhs <= r.degree_rhs;
    for (const auto& z : lin.singular_points) r.points.push_back(rational_exponent_check(op, z));
    if (!r.degree_polynomial_nonzero || !r.degree_inequality) {
        r.verdict = Verdict::Fails;
        r.note = !r.degree_polynomial_nonzero ? "d(k) vanishes identically" : "degree inequality fails";
        return r;
    }
    r.verdict = combine(r.points, lin.fully_resolved());
    if (!lin.fully_resolved()) r.note = "factor " + lin.unresolved.to_string() + " of det C has no roots in the field";
    else if (r.points.empty()) r.note = "no singular points";
    return r;
}

PointCertificate algebraic_point_check(const DiffOperator& op, const Scalar& alpha) {
    const DiffOperator local = op.shifted(alpha);
    PointCertificate cert = local_data(op, alpha, local);
    const std::size_t expected = op.order() * op.dimension();
    auto fail = [&](Verdict v, std::string why) {
        if (cert.verdict == Verdict::Holds) {
            cert.verdict = v;
            cert.reason = std::move(why);
        }
    };
    switch (cert.classification.verdict) {
    case Classification::RegularSingular: break;
    case Classification::Regular: fail(Verdict::Fails, "ordinary point: exponents are 0..mN-1"); break;
    case Classification::Irregular: fail(Verdict::Fails, "irregular singular point"); break;
    case Classification::Indeterminate: fail(Verdict::Indeterminate, "classification undecided"); break;
    }
    if (cert.local_indicial.is_zero()) {
        fail(Verdict::Indeterminate, "local indicial polynomial vanishes identically");
        return cert;
    }
    if (!cert.unresolved.is_constant()) fail(Verdict::Fails, "factor " + cert.unresolved.to_string("k") + " has no rational roots");
    std::size_t count = 0;
    for (const auto& r : cert.roots) {
        count += r.multiplicity;
        if (!r.value.is_real()) fail(Verdict::Fails, "root " + r.value.to_string() + " is not rational");
        if (r.multiplicity > 1) fail(Verdict::Fails, "root " + r.value.to_string() + " is repeated");
    }
    if (count != expected)
        fail(Verdict::Fails, std::to_string(count) + " rational roots, expected " + std::to_string(expected));
    for (std::size_t i = 0; i < cert.roots.size(); ++i)
        for (std::size_t j = i + 1; j < cert.roots.size(); ++j)
            if ((cert.roots[j].value - cert.roots[i].value).is_integer())
                fail(Verdict::Fails, "roots " + cert.roots[i].value.to_string() + " and " +
                                         cert.roots[j].value.to_string() + " differ by an integer");
    if (cert.verdict == Verdict::Holds) cert.reason = "simple rational exponents, no integer differences";
    return cert;
}

AlgebraicityCheck check_algebraic_solutions(const RiccatiSystem&, const Linearization& lin) {
    AlgebraicityCheck a;
    for (const auto& z : lin.singular_points) a.points.push_back(algebraic_point_check(lin.op, z));
    a.verdict = combine(a.points, lin.fully_resolved());
    a.note = "certifies solutions of the form -C^{-1} W' W^{-1} with W invertible; other solutions are not covered";
    return a;
}

RationalMatrix riccati_residual(const RiccatiSystem& sys, const RationalMatrix& Y) {
    const RationalMatrix A(sys.A()), B(sys.B()), C(sys.C());
    return Y.derivative() - A - B * Y - Y * C * Y;
}

LiftResult lift_and_verify(const RiccatiSystem& sys, const RationalMatrix& W) {
    if (determinant(W).is_zero()) throw SingularMatrix("SINGULAR_W: det W vanishes identically");
    LiftResult out;
    out.W = W;
    const RationalMatrix c_inv = RationalFunction(Poly(1), sys.c1()) * RationalMatrix(sys.C0());
    out.Y = -(c_inv * W.derivative() * inverse(W));
    out.verified = riccati_residual(sys, out.Y).is_zero();
    return out;
}

std::vector<LiftResult> rational_lifts(const RiccatiSystem& sys, const Linearization& lin, GroundField field,
                                       std::size_t max_lifts) {
    const std::size_t N = sys.dimension();
    const RationalSolution ker = solve_rational(lin.op, RationalVector(PolyVector(N), Poly(1)), field);
    std::vector<std::vector<RationalFunction>> basis;
    for (const auto& k : ker.kernel) basis.push_back(k.functions());
    std::vector<LiftResult> lifts;
    if (basis.size() < N) return lifts;

    auto try_columns = [&](const std::vector<std::vector<RationalFunction>>& cols) {
        if (lifts.size() >= max_lifts) return;
        RationalMatrix W(N, N);
        for (std::size_t c = 0; c < N; ++c)
            for (std::size_t r = 0; r < N; ++r) W(r, c) = cols[c][r];
        if (determinant(W).is_zero()) return;
        lifts.push_back(lift_and_verify(sys, W));
    };

    std::vector<bool> pick(basis.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(N), true);
    do {
        std::vector<std::vector<RationalFunction>> cols;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (pick[i]) cols.push_back(basis[i]);
        try_columns(cols);
    } while (std::prev_permutation(pick.begin(), pick.end()));

    if (basis.size() > N) {
        for (const long beta : {1L, 2L, -2L}) {
            std::vector<std::vector<RationalFunction>> cols(basis.begin(), basis.begin() + static_cast<std::ptrdiff_t>(N));
            for (std::size_t r = 0; r < N; ++r) cols[0][r] = RationalFunction(beta) * cols[0][r] + basis[N][r];
            try_columns(cols);
        }
    }
    return lifts;
}

} // namespace indicia
