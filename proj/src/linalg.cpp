#include "indicia/linalg.hpp"

#include <stdexcept>

namespace indicia {

ScalarMatrix ScalarMatrix::identity(std::size_t n) {
    ScalarMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
}

bool ScalarMatrix::is_zero() const {
    for (const auto& s : data_)
        if (!s.is_zero()) return false;
    return true;
}

ScalarVector ScalarMatrix::apply(const ScalarVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("ScalarMatrix::apply: size mismatch");
    ScalarVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            const Scalar& a = (*this)(r, c);
            if (!a.is_zero() && !v[c].is_zero()) out[r] += a * v[c];
        }
    return out;
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("ScalarMatrix product: size mismatch");
    ScalarMatrix out(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(r, k);
            if (a.is_zero()) continue;
            for (std::size_t c = 0; c < o.cols_; ++c)
                if (!o(k, c).is_zero()) out(r, c) += a * o(k, c);
        }
    return out;
}

RowEchelon row_reduce(ScalarMatrix m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
        const Scalar inv = Scalar(1) / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c)
            if (!m(row, c).is_zero()) m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            const Scalar factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const ScalarMatrix& m) { return row_reduce(m).pivot_cols.size(); }

std::size_t leading_index(const ScalarVector& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) return i;
    return v.size();
}

std::vector<ScalarVector> echelon_basis(const std::vector<ScalarVector>& vectors, std::size_t dim) {
    ScalarMatrix m(vectors.size(), dim);
    for (std::size_t r = 0; r < vectors.size(); ++r) {
        if (vectors[r].size() != dim) throw std::invalid_argument("echelon_basis: size mismatch");
        for (std::size_t c = 0; c < dim; ++c) m(r, c) = vectors[r][c];
    }
    const RowEchelon re = row_reduce(std::move(m));
    std::vector<ScalarVector> out;
    for (std::size_t r = 0; r < re.pivot_cols.size(); ++r) {
        ScalarVector v(dim);
        for (std::size_t c = 0; c < dim; ++c) v[c] = re.reduced(r, c);
        out.push_back(std::move(v));
    }
    return out;
}

ScalarVector reduce_modulo(ScalarVector v, const std::vector<ScalarVector>& echelon) {
    for (const auto& b : echelon) {
        const std::size_t p = leading_index(b);
        if (p == b.size() || v[p].is_zero()) continue;
        const Scalar factor = v[p] / b[p];
        for (std::size_t i = p; i < v.size(); ++i)
            if (!b[i].is_zero()) v[i] -= factor * b[i];
    }
    return v;
}

namespace {

std::vector<ScalarVector> kernel_from_rref(const RowEchelon& re, std::size_t cols) {
    std::vector<bool> is_pivot(cols, false);
    for (auto p : re.pivot_cols) is_pivot[p] = true;
    std::vector<ScalarVector> raw;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        ScalarVector v(cols);
        v[f] = Scalar(1);
        for (std::size_t r = 0; r < re.pivot_cols.size(); ++r)
            if (!re.reduced(r, f).is_zero()) v[re.pivot_cols[r]] = -re.reduced(r, f);
        raw.push_back(std::move(v));
    }
    return echelon_basis(raw, cols);
}

} // namespace

std::vector<ScalarVector> nullspace(const ScalarMatrix& m) {
    return kernel_from_rref(row_reduce(m), m.cols());
}

std::optional<LinearSolution> solve_linear(const ScalarMatrix& m, const ScalarVector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve_linear: size mismatch");
    ScalarMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    RowEchelon re = row_reduce(std::move(aug));
    if (!re.pivot_cols.empty() && re.pivot_cols.back() == m.cols()) return std::nullopt;
    LinearSolution sol;
    sol.particular.assign(m.cols(), Scalar());
    for (std::size_t r = 0; r < re.pivot_cols.size(); ++r) sol.particular[re.pivot_cols[r]] = re.reduced(r, m.cols());
    // The kernel of m is the kernel of the reduced augmented matrix minus its last column.
    ScalarMatrix left(re.pivot_cols.size(), m.cols());
    for (std::size_t r = 0; r < re.pivot_cols.size(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) left(r, c) = re.reduced(r, c);
    sol.kernel = kernel_from_rref(RowEchelon{std::move(left), re.pivot_cols}, m.cols());
    return sol;
}

} // namespace indicia
