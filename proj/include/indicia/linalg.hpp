#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "indicia/scalar.hpp"

namespace indicia {

using ScalarVector = std::vector<Scalar>;

/// Dense row-major matrix over Q(i).
class ScalarMatrix {
public:
    ScalarMatrix() = default;
    ScalarMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ScalarMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    ScalarVector apply(const ScalarVector& v) const;
    ScalarMatrix operator*(const ScalarMatrix& o) const;

    friend bool operator==(const ScalarMatrix&, const ScalarMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Reduced row echelon form computed by exact Gauss-Jordan elimination.
/// Pivots are chosen left to right, so the free columns are the latest ones
/// that can be free.
struct RowEchelon {
    ScalarMatrix reduced;
    std::vector<std::size_t> pivot_cols;
};

RowEchelon row_reduce(ScalarMatrix m);

std::size_t rank(const ScalarMatrix& m);

/// Basis of {v : M v = 0}, returned in reduced echelon form: each vector
/// has a distinct leading (lowest-index) nonzero entry equal to 1 and zeros
/// at the other vectors' leading positions. Sorted by leading position.
std::vector<ScalarVector> nullspace(const ScalarMatrix& m);

/// Row-reduce a list of vectors into the canonical echelon basis of their span.
std::vector<ScalarVector> echelon_basis(const std::vector<ScalarVector>& vectors, std::size_t dim);

/// Reduce v modulo the span of an echelon basis so that v vanishes at every
/// leading position of the basis.
ScalarVector reduce_modulo(ScalarVector v, const std::vector<ScalarVector>& echelon);

/// Index of first nonzero entry, or size() for the zero vector.
std::size_t leading_index(const ScalarVector& v);

struct LinearSolution {
    ScalarVector particular;          // free variables set to zero
    std::vector<ScalarVector> kernel; // nullspace of the matrix
};

/// Solve M x = b exactly. Returns nullopt if the system is inconsistent.
std::optional<LinearSolution> solve_linear(const ScalarMatrix& m, const ScalarVector& b);

} // namespace indicia
