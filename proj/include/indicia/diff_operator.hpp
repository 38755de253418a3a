#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "indicia/extended_int.hpp"
#include "indicia/poly_matrix.hpp"
#include "indicia/rational_function.hpp"

namespace indicia {

/// Valuation/degree bookkeeping of an operator sum_i A_i(x) d^i/dx^i.
///
/// n = max_i (i - nu(A_i)) and n' = min_i (i - deg A_i), both taken over the
/// nonzero coefficients only (a zero A_i has i - nu = -inf and i - deg = +inf
/// and never attains the extremum). J and J' collect the indices attaining
/// them, ascending.
struct StructureData {
    std::vector<ExtendedInt> valuations; // nu(A_i)
    std::vector<ExtendedInt> degrees;    // deg A_i
    std::int64_t n = 0;
    std::int64_t n_prime = 0;
    std::vector<std::size_t> J;
    std::vector<std::size_t> J_prime;

    bool in_J(std::size_t i) const;
    bool in_J_prime(std::size_t i) const;
};

/// Matrix linear differential operator P = sum_{i=0}^m A_i(x) d^i/dx^i with
/// N x N polynomial coefficients and det A_m not identically zero. Immutable;
/// the structure data is computed once at construction.
class DiffOperator {
public:
    /// Throws InvalidOperator on empty/ragged/non-square input or det A_m = 0.
    explicit DiffOperator(std::vector<PolyMatrix> coefficients);

    std::size_t dimension() const { return dimension_; }
    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<PolyMatrix>& coefficients() const { return coeffs_; }
    const PolyMatrix& coefficient(std::size_t i) const { return coeffs_.at(i); }
    const PolyMatrix& leading() const { return coeffs_.back(); }
    const Poly& leading_determinant() const { return leading_det_; }
    const StructureData& structure() const { return structure_; }

    /// The operator in the local coordinate x -> x + alpha.
    DiffOperator shifted(const Scalar& alpha) const;

    /// Largest entry degree over all coefficients (0 for constant operators).
    std::int64_t max_coefficient_degree() const;

    /// P u by direct differentiation.
    PolyVector apply(const PolyVector& u) const;
    std::vector<RationalFunction> apply(const std::vector<RationalFunction>& u) const;
    /// Column-wise application to a matrix of rational functions.
    RationalMatrix apply(const RationalMatrix& w) const;

    friend bool operator==(const DiffOperator& a, const DiffOperator& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::size_t dimension_ = 0;
    std::vector<PolyMatrix> coeffs_;
    Poly leading_det_;
    StructureData structure_;
};

/// The matrices M_s(k), s in [-n, -n'], of the expansion
///     P(lambda x^k) = sum_s M_s(k) lambda x^{k+s},
/// where M_s(k) = sum_i k(k-1)...(k-i+1) [x^{i+s}] A_i. Entries are
/// polynomials in k. M_{-n} is L(k) and M_{-n'} is D(k).
class IndicialFamily {
public:
    IndicialFamily(std::int64_t s_min, std::int64_t s_max, std::vector<PolyMatrix> matrices);

    std::int64_t s_min() const { return s_min_; }
    std::int64_t s_max() const { return s_max_; }
    /// M_s(k); the zero matrix outside [s_min, s_max].
    const PolyMatrix& at(std::int64_t s) const;
    const PolyMatrix& lowest() const { return matrices_.front(); }  // L(k)
    const PolyMatrix& highest() const { return matrices_.back(); }  // D(k)
    /// M_s evaluated at a scalar k.
    ScalarMatrix evaluate(std::int64_t s, const Scalar& k) const;

private:
    std::int64_t s_min_;
    std::int64_t s_max_;
    std::vector<PolyMatrix> matrices_;
    PolyMatrix zero_;
};

IndicialFamily indicial_family(const DiffOperator& op);

/// l(k) = det L(k).
Poly indicial_polynomial(const DiffOperator& op);
/// d(k) = det D(k).
Poly degree_polynomial(const DiffOperator& op);

} // namespace indicia
