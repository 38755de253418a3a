#include "indicia/poly_matrix.hpp"

#include <stdexcept>

namespace indicia {

PolyMatrix PolyMatrix::identity(std::size_t n) { return scalar_identity(n, Poly(1)); }

PolyMatrix PolyMatrix::scalar_identity(std::size_t n, const Poly& p) {
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = p;
    return m;
}

bool PolyMatrix::is_zero() const {
    for (const auto& p : data_)
        if (!p.is_zero()) return false;
    return true;
}

ExtendedInt PolyMatrix::valuation() const {
    ExtendedInt v = ExtendedInt::plus_infinity();
    for (const auto& p : data_) v = min(v, p.valuation());
    return v;
}

ExtendedInt PolyMatrix::degree() const {
    ExtendedInt d = ExtendedInt::minus_infinity();
    for (const auto& p : data_) d = max(d, p.degree());
    return d;
}

ScalarMatrix PolyMatrix::coefficient(std::int64_t t) const {
    ScalarMatrix out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c).coeff(t);
    return out;
}

ScalarMatrix PolyMatrix::evaluate(const Scalar& at) const {
    ScalarMatrix out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c).evaluate(at);
    return out;
}

PolyMatrix PolyMatrix::derivative() const {
    PolyMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i].derivative();
    return out;
}

PolyMatrix PolyMatrix::shifted(const Scalar& alpha) const {
    PolyMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i].shifted(alpha);
    return out;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("PolyMatrix +: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("PolyMatrix -: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("PolyMatrix *: shape mismatch");
    PolyMatrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Poly& x = a(r, k);
            if (x.is_zero()) continue;
            for (std::size_t c = 0; c < b.cols_; ++c)
                if (!b(k, c).is_zero()) out(r, c) += x * b(k, c);
        }
    return out;
}

PolyMatrix operator*(const Poly& p, const PolyMatrix& a) {
    PolyMatrix out = a;
    for (auto& e : out.data_) e = p * e;
    return out;
}

PolyMatrix PolyMatrix::operator-() const {
    PolyMatrix out = *this;
    for (auto& e : out.data_) e = -e;
    return out;
}

PolyVector PolyMatrix::operator*(const PolyVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("PolyMatrix * vector: size mismatch");
    PolyVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!(*this)(r, c).is_zero() && !v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
    return out;
}

Poly determinant(const PolyMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant: non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Poly(1);
    PolyMatrix a = m;
    Poly prev(1);
    bool negate = false;
    for (std::size_t k = 0; k < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t r = k + 1;
            while (r < n && a(r, k).is_zero()) ++r;
            if (r == n) return {};
            for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(r, c));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = exact_div(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
            a(i, k) = Poly();
        }
        prev = a(k, k);
    }
    return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

DetAdjugate det_adjugate(const PolyMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("det_adjugate: non-square matrix");
    const std::size_t n = m.rows();
    DetAdjugate out{determinant(m), PolyMatrix(n, n)};
    if (n == 1) {
        out.adjugate(0, 0) = Poly(1);
        return out;
    }
    PolyMatrix minor(n - 1, n - 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t r = 0, mr = 0; r < n; ++r) {
                if (r == i) continue;
                for (std::size_t c = 0, mc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor(mr, mc++) = m(r, c);
                }
                ++mr;
            }
            Poly cof = determinant(minor);
            // adj(M)_{j,i} = (-1)^{i+j} det(minor_{i,j})
            out.adjugate(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
        }
    return out;
}

void set_block(PolyMatrix& target, std::size_t row0, std::size_t col0, const PolyMatrix& block) {
    if (row0 + block.rows() > target.rows() || col0 + block.cols() > target.cols())
        throw std::invalid_argument("set_block: block out of range");
    for (std::size_t r = 0; r < block.rows(); ++r)
        for (std::size_t c = 0; c < block.cols(); ++c) target(row0 + r, col0 + c) = block(r, c);
}

} // namespace indicia
