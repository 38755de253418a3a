#include "indicia/analysis.hpp"

#include "indicia/errors.hpp"

namespace indicia {

std::string to_string(Classification c) {
    switch (c) {
    case Classification::Regular: return "REGULAR";
    case Classification::RegularSingular: return "REGULAR_SINGULAR";
    case Classification::Irregular: return "IRREGULAR";
    case Classification::Indeterminate: return "INDETERMINATE";
    }
    return "?";
}

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::Holds: return "HOLDS";
    case Verdict::Fails: return "FAILS";
    case Verdict::Indeterminate: return "INDETERMINATE";
    case Verdict::Undefined: return "UNDEFINED";
    }
    return "?";
}

ClassificationReport classify_at_zero(const DiffOperator& op) {
    ClassificationReport r;
    const auto& st = op.structure();
    const auto N = static_cast<std::int64_t>(op.dimension());
    r.det_valuation = op.leading_determinant().valuation();
    r.leading_valuation = op.leading().valuation();
    r.leading_det_vanishes = op.leading_determinant().coeff(0).is_zero();
    r.m_in_J = st.in_J(op.order());
    r.indicial_vanishes = indicial_polynomial(op).is_zero();

    if (!r.leading_det_vanishes) {
        r.verdict = Classification::Regular;
        r.citation = "det A_m(0) != 0: ordinary point";
        return r;
    }
    if (r.m_in_J) {
        if (r.indicial_vanishes) {
            // v(det A_m) = N nu(A_m) would force deg l = mN, so here the
            // valuations are unbalanced; the criterion still needs l != 0.
            r.verdict = Classification::Indeterminate;
            r.citation = "m in J but l(k) = 0: the valuation criterion requires l(k) != 0";
            r.note = "v(det A_m) != N nu(A_m); no verdict from indicial data";
            return r;
        }
        const bool balanced = r.det_valuation == N * r.leading_valuation;
        r.verdict = balanced ? Classification::RegularSingular : Classification::Irregular;
        r.citation = balanced ? "m in J, l(k) != 0 and v(det A_m) = N nu(A_m): regular singular"
                              : "m in J, l(k) != 0 and v(det A_m) != N nu(A_m): irregular";
        return r;
    }
    if (!r.indicial_vanishes) {
        r.verdict = Classification::Irregular;
        r.citation = "m not in J and l(k) != 0: irregular";
        return r;
    }
    r.verdict = Classification::Indeterminate;
    r.citation = "m not in J and l(k) = 0: regular singular and irregular both occur";
    r.note = "undecided by indicial criteria; inspect series solutions";
    return r;
}

ClassificationReport classify_at(const DiffOperator& op, const Scalar& alpha) {
    if (alpha.is_zero()) return classify_at_zero(op);
    return classify_at_zero(op.shifted(alpha));
}

IndexReport indices(const DiffOperator& op) {
    IndexReport r;
    const auto& st = op.structure();
    r.N = op.dimension();
    r.m = op.order();
    r.n = st.n;
    r.n_prime = st.n_prime;
    const IndicialFamily fam = indicial_family(op);
    r.l_poly = determinant(fam.lowest());
    r.d_poly = determinant(fam.highest());
    const auto N = static_cast<std::int64_t>(r.N);
    const auto m = static_cast<std::int64_t>(r.m);
    r.chi_convergent = m * N - op.leading_determinant().valuation().value();
    if (r.l_poly.is_zero()) {
        r.chi_formal_reason = "l(k) vanishes identically";
        r.chi_polynomial_reason = "l(k) vanishes identically";
    } else {
        r.chi_formal = N * r.n;
        if (r.d_poly.is_zero())
            r.chi_polynomial_reason = "d(k) vanishes identically";
        else
            r.chi_polynomial = N * r.n_prime;
    }
    r.classification = classify_at_zero(op);
    return r;
}

RationalityCondition check_rationality_condition(const DiffOperator& op) {
    RationalityCondition r;
    const auto N = static_cast<std::int64_t>(op.dimension());
    const auto m = static_cast<std::int64_t>(op.order());
    r.lhs = N * op.structure().n_prime;
    r.rhs = m * N - op.leading_determinant().degree().value();
    const bool l_zero = indicial_polynomial(op).is_zero();
    const bool d_zero = degree_polynomial(op).is_zero();
    if (l_zero || d_zero) {
        r.verdict = Verdict::Undefined;
        r.reason = l_zero ? "l(k) vanishes identically" : "d(k) vanishes identically";
        return r;
    }
    r.verdict = r.lhs == r.rhs ? Verdict::Holds : Verdict::Fails;
    r.reason = r.lhs == r.rhs ? "N n' = mN - deg det A_m" : "N n' != mN - deg det A_m";
    return r;
}

CompanionSystem companion(const DiffOperator& op) {
    const std::size_t N = op.dimension();
    const std::size_t m = op.order();
    if (m == 0) throw InvalidOperator("companion system needs order >= 1");
    const DetAdjugate da = det_adjugate(op.leading());
    CompanionSystem c{PolyMatrix(m * N, m * N), da.det};
    const PolyMatrix scaled_id = PolyMatrix::scalar_identity(N, da.det);
    for (std::size_t r = 0; r + 1 < m; ++r) set_block(c.numerators, r * N, (r + 1) * N, scaled_id);
    for (std::size_t i = 0; i < m; ++i) set_block(c.numerators, (m - 1) * N, i * N, -(da.adjugate * op.coefficient(i)));
    return c;
}

} // namespace indicia
