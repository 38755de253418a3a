#include "indicia/diff_operator.hpp"

#include <algorithm>
#include <string>

#include "indicia/errors.hpp"

namespace indicia {

bool StructureData::in_J(std::size_t i) const {
    return std::find(J.begin(), J.end(), i) != J.end();
}

bool StructureData::in_J_prime(std::size_t i) const {
    return std::find(J_prime.begin(), J_prime.end(), i) != J_prime.end();
}

namespace {

StructureData compute_structure(const std::vector<PolyMatrix>& coeffs) {
    StructureData s;
    ExtendedInt n = ExtendedInt::minus_infinity();
    ExtendedInt np = ExtendedInt::plus_infinity();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const ExtendedInt nu = coeffs[i].valuation();
        const ExtendedInt deg = coeffs[i].degree();
        s.valuations.push_back(nu);
        s.degrees.push_back(deg);
        if (coeffs[i].is_zero()) continue;
        n = max(n, ExtendedInt(static_cast<std::int64_t>(i)) - nu);
        np = min(np, ExtendedInt(static_cast<std::int64_t>(i)) - deg);
    }
    s.n = n.value();
    s.n_prime = np.value();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        const auto ii = static_cast<std::int64_t>(i);
        if (ii - s.valuations[i].value() == s.n) s.J.push_back(i);
        if (ii - s.degrees[i].value() == s.n_prime) s.J_prime.push_back(i);
    }
    return s;
}

} // namespace

DiffOperator::DiffOperator(std::vector<PolyMatrix> coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) throw InvalidOperator("operator needs at least one coefficient matrix");
    dimension_ = coeffs_.front().rows();
    if (dimension_ == 0) throw InvalidOperator("coefficient matrices must be nonempty");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].rows() != dimension_ || coeffs_[i].cols() != dimension_)
            throw InvalidOperator("coefficient A_" + std::to_string(i) + " is not " + std::to_string(dimension_) + "x" +
                                  std::to_string(dimension_));
    }
    leading_det_ = determinant(coeffs_.back());
    if (leading_det_.is_zero()) throw InvalidOperator("det A_m vanishes identically");
    structure_ = compute_structure(coeffs_);
}

DiffOperator DiffOperator::shifted(const Scalar& alpha) const {
    std::vector<PolyMatrix> out;
    out.reserve(coeffs_.size());
    for (const auto& a : coeffs_) out.push_back(a.shifted(alpha));
    return DiffOperator(std::move(out));
}

std::int64_t DiffOperator::max_coefficient_degree() const {
    std::int64_t best = 0;
    for (const auto& d : structure_.degrees)
        if (d.is_finite()) best = std::max(best, d.value());
    return best;
}

PolyVector DiffOperator::apply(const PolyVector& u) const {
    if (u.size() != dimension_) throw std::invalid_argument("vector length does not match operator dimension");
    PolyVector out(dimension_);
    PolyVector du = u;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i > 0)
            for (auto& p : du) p = p.derivative();
        const PolyVector term = coeffs_[i] * du;
        for (std::size_t r = 0; r < dimension_; ++r) out[r] += term[r];
    }
    return out;
}

std::vector<RationalFunction> DiffOperator::apply(const std::vector<RationalFunction>& u) const {
    if (u.size() != dimension_) throw std::invalid_argument("vector length does not match operator dimension");
    std::vector<RationalFunction> out(dimension_);
    std::vector<RationalFunction> du = u;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i > 0)
            for (auto& f : du) f = f.derivative();
        for (std::size_t r = 0; r < dimension_; ++r)
            for (std::size_t c = 0; c < dimension_; ++c)
                if (!coeffs_[i](r, c).is_zero()) out[r] += RationalFunction(coeffs_[i](r, c)) * du[c];
    }
    return out;
}

RationalMatrix DiffOperator::apply(const RationalMatrix& w) const {
    if (w.rows() != dimension_) throw std::invalid_argument("matrix rows do not match operator dimension");
    RationalMatrix out(dimension_, w.cols());
    for (std::size_t c = 0; c < w.cols(); ++c) {
        std::vector<RationalFunction> col(dimension_);
        for (std::size_t r = 0; r < dimension_; ++r) col[r] = w(r, c);
        const auto image = apply(col);
        for (std::size_t r = 0; r < dimension_; ++r) out(r, c) = image[r];
    }
    return out;
}

IndicialFamily::IndicialFamily(std::int64_t s_min, std::int64_t s_max, std::vector<PolyMatrix> matrices)
    : s_min_(s_min), s_max_(s_max), matrices_(std::move(matrices)) {
    if (s_max_ < s_min_ || matrices_.size() != static_cast<std::size_t>(s_max_ - s_min_ + 1))
        throw std::invalid_argument("indicial family range does not match matrix count");
    zero_ = PolyMatrix(matrices_.front().rows(), matrices_.front().cols());
}

const PolyMatrix& IndicialFamily::at(std::int64_t s) const {
    if (s < s_min_ || s > s_max_) return zero_;
    return matrices_[static_cast<std::size_t>(s - s_min_)];
}

ScalarMatrix IndicialFamily::evaluate(std::int64_t s, const Scalar& k) const { return at(s).evaluate(k); }

IndicialFamily indicial_family(const DiffOperator& op) {
    const auto& st = op.structure();
    const std::size_t N = op.dimension();
    const std::int64_t s_min = -st.n;
    const std::int64_t s_max = -st.n_prime;
    std::vector<PolyMatrix> mats;
    for (std::int64_t s = s_min; s <= s_max; ++s) {
        PolyMatrix m(N, N);
        for (std::size_t i = 0; i <= op.order(); ++i) {
            const ScalarMatrix c = op.coefficient(i).coefficient(static_cast<std::int64_t>(i) + s);
            if (c.is_zero()) continue;
            const Poly ff = Poly::falling_factorial(i);
            for (std::size_t r = 0; r < N; ++r)
                for (std::size_t q = 0; q < N; ++q)
                    if (!c(r, q).is_zero()) m(r, q) += ff * c(r, q);
        }
        mats.push_back(std::move(m));
    }
    return IndicialFamily(s_min, s_max, std::move(mats));
}

Poly indicial_polynomial(const DiffOperator& op) { return determinant(indicial_family(op).lowest()); }

Poly degree_polynomial(const DiffOperator& op) { return determinant(indicial_family(op).highest()); }

} // namespace indicia
