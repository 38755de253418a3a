#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "indicia/extended_int.hpp"
#include "indicia/scalar.hpp"

namespace indicia {

/// Dense univariate polynomial over Q(i). The coefficient vector is indexed
/// by exponent and never carries a zero leading coefficient; the zero
/// polynomial is the empty vector.
///
/// The same type is used for polynomials in x (operator coefficients) and in
/// the symbolic exponent k (indicial data); only the printed variable differs.
class Poly {
public:
    Poly() = default;
    Poly(Scalar constant);
    Poly(long constant) : Poly(Scalar(constant)) {}
    Poly(int constant) : Poly(Scalar(constant)) {}
    explicit Poly(std::vector<Scalar> coeffs);
    Poly(std::initializer_list<Scalar> coeffs) : Poly(std::vector<Scalar>(coeffs)) {}

    static Poly x() { return Poly({Scalar(0), Scalar(1)}); }
    static Poly monomial(Scalar c, std::size_t exponent);
    /// k(k-1)...(k-i+1), expanded; 1 for i = 0.
    static Poly falling_factorial(std::size_t i);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    ExtendedInt degree() const;
    ExtendedInt valuation() const;
    /// Coefficient of x^e; zero outside the stored range (including e < 0).
    Scalar coeff(std::int64_t e) const;
    const Scalar& leading() const;
    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    std::size_t size() const { return coeffs_.size(); }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Scalar& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
    friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }
    Poly operator-() const;

    friend bool operator==(const Poly&, const Poly&) = default;

    Poly derivative() const;
    Poly derivative(std::size_t order) const;
    /// p(x + alpha).
    Poly shifted(const Scalar& alpha) const;
    Scalar evaluate(const Scalar& at) const;
    /// Multiply by x^e.
    Poly mul_x_pow(std::size_t e) const;
    Poly pow(std::size_t e) const;
    Poly monic() const;
    /// Apply the field automorphism i -> -i to the coefficients.
    Poly conj() const;
    Poly real_part() const;
    Poly imag_part() const;

    /// Canonical text, decreasing exponent order, e.g. "x^2 - 2*x + 1".
    std::string to_string(std::string_view var = "x") const;

private:
    void normalize();
    std::vector<Scalar> coeffs_;
};

/// Euclidean division; throws std::domain_error on a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Exact quotient; throws std::domain_error if b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
/// Multiplicity of alpha as a root of p (p nonzero).
std::size_t root_multiplicity(const Poly& p, const Scalar& alpha);

std::ostream& operator<<(std::ostream& os, const Poly& p);

} // namespace indicia
