#pragma once

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "indicia/extended_int.hpp"
#include "indicia/linalg.hpp"
#include "indicia/poly.hpp"

namespace indicia {

using PolyVector = std::vector<Poly>;

/// Dense matrix of polynomials. Square in every operator-level use; the
/// companion system and truncation code also use rectangular shapes.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static PolyMatrix identity(std::size_t n);
    static PolyMatrix scalar_identity(std::size_t n, const Poly& p);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Poly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Poly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    /// nu(A): minimum entry valuation, +inf for the zero matrix.
    ExtendedInt valuation() const;
    /// d°A: maximum entry degree, -inf for the zero matrix.
    ExtendedInt degree() const;
    /// Matrix of the coefficients of x^t.
    ScalarMatrix coefficient(std::int64_t t) const;
    ScalarMatrix evaluate(const Scalar& at) const;

    PolyMatrix derivative() const;
    PolyMatrix shifted(const Scalar& alpha) const;
    PolyMatrix transpose() const;

    PolyMatrix& operator+=(const PolyMatrix& o);
    PolyMatrix& operator-=(const PolyMatrix& o);
    friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
    friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator*(const Poly& p, const PolyMatrix& a);
    PolyMatrix operator-() const;
    PolyVector operator*(const PolyVector& v) const;

    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Poly> data_;
};

/// Determinant by fraction-free (Bareiss) elimination over Q(i)[x].
Poly determinant(const PolyMatrix& m);

struct DetAdjugate {
    Poly det;
    PolyMatrix adjugate;
};

/// det(M) and adj(M) with M*adj = adj*M = det*I.
DetAdjugate det_adjugate(const PolyMatrix& m);

/// Copy block into target with its top-left corner at (row0, col0).
void set_block(PolyMatrix& target, std::size_t row0, std::size_t col0, const PolyMatrix& block);

} // namespace indicia
