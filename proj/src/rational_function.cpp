#include "indicia/rational_function.hpp"

#include <stdexcept>

#include "indicia/errors.hpp"

namespace indicia {

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    if (!den_.is_constant()) {
        const Poly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
    }
    const Scalar lead = den_.leading();
    if (!lead.is_one()) {
        const Scalar inv = Scalar(1) / lead;
        num_ *= inv;
        den_ *= inv;
    }
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (den_ == o.den_) num_ += o.num_;
    else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero()) throw std::domain_error("RationalFunction: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

RationalFunction RationalFunction::derivative() const {
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction RationalFunction::shifted(const Scalar& alpha) const {
    return RationalFunction(num_.shifted(alpha), den_.shifted(alpha));
}

ExtendedInt RationalFunction::pole_order(const Scalar& alpha) const {
    if (num_.is_zero()) return ExtendedInt::minus_infinity();
    const auto zeros = static_cast<std::int64_t>(root_multiplicity(num_, alpha));
    const auto poles = static_cast<std::int64_t>(root_multiplicity(den_, alpha));
    return poles - zeros;
}

std::string RationalFunction::to_string(std::string_view var) const {
    if (den_.is_constant()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

RationalMatrix::RationalMatrix(const PolyMatrix& m) : RationalMatrix(m.rows(), m.cols()) {
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = RationalFunction(m(r, c));
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = RationalFunction(1);
    return m;
}

bool RationalMatrix::is_zero() const {
    for (const auto& f : data_)
        if (!f.is_zero()) return false;
    return true;
}

RationalMatrix RationalMatrix::derivative() const {
    RationalMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i].derivative();
    return out;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("RationalMatrix +: shape");
    RationalMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) { return a + (-b); }

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("RationalMatrix *: shape");
    RationalMatrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a(r, k).is_zero()) continue;
            for (std::size_t c = 0; c < b.cols_; ++c)
                if (!b(k, c).is_zero()) out(r, c) += a(r, k) * b(k, c);
        }
    return out;
}

RationalMatrix operator*(const RationalFunction& f, const RationalMatrix& a) {
    RationalMatrix out = a;
    for (auto& e : out.data_) e = f * e;
    return out;
}

RationalMatrix RationalMatrix::operator-() const {
    RationalMatrix out = *this;
    for (auto& e : out.data_) e = -e;
    return out;
}

RationalFunction determinant(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square");
    const std::size_t n = m.rows();
    RationalMatrix a = m;
    RationalFunction det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k).is_zero()) ++p;
        if (p == n) return RationalFunction();
        if (p != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(p, c), a(k, c));
            det = -det;
        }
        det *= a(k, k);
        for (std::size_t r = k + 1; r < n; ++r) {
            if (a(r, k).is_zero()) continue;
            const RationalFunction f = a(r, k) / a(k, k);
            for (std::size_t c = k; c < n; ++c) a(r, c) -= f * a(k, c);
        }
    }
    return det;
}

RationalMatrix inverse(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: non-square");
    const std::size_t n = m.rows();
    RationalMatrix a = m;
    RationalMatrix inv = RationalMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k).is_zero()) ++p;
        if (p == n) throw SingularMatrix("matrix determinant vanishes identically");
        if (p != k)
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(a(p, c), a(k, c));
                std::swap(inv(p, c), inv(k, c));
            }
        const RationalFunction pivot = a(k, k);
        for (std::size_t c = 0; c < n; ++c) {
            a(k, c) /= pivot;
            inv(k, c) /= pivot;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == k || a(r, k).is_zero()) continue;
            const RationalFunction f = a(r, k);
            for (std::size_t c = 0; c < n; ++c) {
                a(r, c) -= f * a(k, c);
                inv(r, c) -= f * inv(k, c);
            }
        }
    }
    return inv;
}

} // namespace indicia
