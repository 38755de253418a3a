#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "indicia/poly.hpp"
#include "indicia/poly_matrix.hpp"

namespace indicia {

/// Element of Q(i)(x) kept as num/den with gcd(num, den) = 1 and den monic.
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(Poly num) : num_(std::move(num)), den_(1) {}
    RationalFunction(long c) : RationalFunction(Poly(c)) {}
    RationalFunction(Poly num, Poly den);

    const Poly& numerator() const { return num_; }
    const Poly& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    RationalFunction operator-() const { return RationalFunction(-num_, den_); }

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

    RationalFunction derivative() const;
    RationalFunction shifted(const Scalar& alpha) const;
    /// Order of the pole at alpha (negative for a zero, 0 if regular and nonzero).
    /// The zero function has order -inf.
    ExtendedInt pole_order(const Scalar& alpha) const;

    std::string to_string(std::string_view var = "x") const;

private:
    void normalize();
    Poly num_;
    Poly den_;
};

/// Dense square-or-rectangular matrix over Q(i)(x).
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    explicit RationalMatrix(const PolyMatrix& m);

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    RationalFunction& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const RationalFunction& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    RationalMatrix derivative() const;

    friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalMatrix operator*(const RationalFunction& f, const RationalMatrix& a);
    RationalMatrix operator-() const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<RationalFunction> data_;
};

/// Determinant by Gaussian elimination over the field Q(i)(x).
RationalFunction determinant(const RationalMatrix& m);

/// Inverse; throws SingularMatrix when the determinant vanishes identically.
RationalMatrix inverse(const RationalMatrix& m);

} // namespace indicia
