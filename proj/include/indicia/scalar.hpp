#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace indicia {

/// Exact Gaussian rational re + im*i. Both parts are canonical GMP rationals,
/// so equality is structural.
class Scalar {
public:
    Scalar() = default;
    Scalar(long value) : re_(value) {}
    Scalar(int value) : re_(value) {}
    Scalar(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }
    Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static Scalar rational(long num, long den) { return Scalar(mpq_class(num, den)); }
    static Scalar imaginary_unit() { return Scalar(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_integer() const { return is_real() && re_.get_den() == 1; }

    /// Value as int64; throws unless the scalar is an integer in range.
    std::int64_t to_int64() const;

    Scalar conj() const { return Scalar(re_, -im_); }
    /// |z|^2, exact.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const { return Scalar(-re_, -im_); }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    /// Lexicographic on (re, im). Deterministic ordering for root lists; not a field order.
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

    /// Canonical text: "3", "-1/2", "2i", "-i", "1/2+3i", "1/2-3/4i".
    std::string to_string() const;

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Text form of a rational that the expression grammar accepts.
std::string rational_to_string(const mpq_class& q);

} // namespace indicia
