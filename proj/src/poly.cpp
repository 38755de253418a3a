#include "indicia/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace indicia {

Poly::Poly(Scalar constant) {
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

Poly::Poly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::monomial(Scalar c, std::size_t exponent) {
    if (c.is_zero()) return {};
    std::vector<Scalar> v(exponent + 1);
    v[exponent] = std::move(c);
    return Poly(std::move(v));
}

Poly Poly::falling_factorial(std::size_t i) {
    Poly out(1);
    for (std::size_t j = 0; j < i; ++j) out *= Poly({Scalar(-static_cast<long>(j)), Scalar(1)});
    return out;
}

ExtendedInt Poly::degree() const {
    if (coeffs_.empty()) return ExtendedInt::minus_infinity();
    return static_cast<std::int64_t>(coeffs_.size() - 1);
}

ExtendedInt Poly::valuation() const {
    for (std::size_t e = 0; e < coeffs_.size(); ++e)
        if (!coeffs_[e].is_zero()) return static_cast<std::int64_t>(e);
    return ExtendedInt::plus_infinity();
}

Scalar Poly::coeff(std::int64_t e) const {
    if (e < 0 || static_cast<std::size_t>(e) >= coeffs_.size()) return Scalar();
    return coeffs_[static_cast<std::size_t>(e)];
}

const Scalar& Poly::leading() const {
    if (coeffs_.empty()) throw std::domain_error("Poly::leading of zero polynomial");
    return coeffs_.back();
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t e = 0; e < o.coeffs_.size(); ++e) coeffs_[e] += o.coeffs_[e];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t e = 0; e < o.coeffs_.size(); ++e) coeffs_[e] -= o.coeffs_[e];
    normalize();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Scalar> out(coeffs_.size() - 1);
    for (std::size_t e = 1; e < coeffs_.size(); ++e) out[e - 1] = coeffs_[e] * Scalar(static_cast<long>(e));
    return Poly(std::move(out));
}

Poly Poly::derivative(std::size_t order) const {
    Poly out = *this;
    for (std::size_t i = 0; i < order && !out.is_zero(); ++i) out = out.derivative();
    return out;
}

Poly Poly::shifted(const Scalar& alpha) const {
    if (alpha.is_zero() || coeffs_.size() <= 1) return *this;
    // Horner in the ring: p(x + a) = (...(c_d (x+a) + c_{d-1})(x+a) + ...)
    const Poly lin({alpha, Scalar(1)});
    Poly out;
    for (std::size_t e = coeffs_.size(); e-- > 0;) {
        out *= lin;
        out += Poly(coeffs_[e]);
    }
    return out;
}

Scalar Poly::evaluate(const Scalar& at) const {
    Scalar acc;
    for (std::size_t e = coeffs_.size(); e-- > 0;) {
        acc *= at;
        acc += coeffs_[e];
    }
    return acc;
}

Poly Poly::mul_x_pow(std::size_t e) const {
    if (is_zero() || e == 0) return *this;
    std::vector<Scalar> out(e, Scalar());
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return Poly(std::move(out));
}

Poly Poly::pow(std::size_t e) const {
    Poly result(1);
    Poly base = *this;
    while (e > 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e > 0) base *= base;
    }
    return result;
}

Poly Poly::monic() const {
    if (is_zero()) return {};
    const Scalar inv = Scalar(1) / leading();
    return *this * inv;
}

Poly Poly::conj() const {
    std::vector<Scalar> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.conj());
    return Poly(std::move(out));
}

Poly Poly::real_part() const {
    std::vector<Scalar> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.emplace_back(c.re());
    return Poly(std::move(out));
}

Poly Poly::imag_part() const {
    std::vector<Scalar> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.emplace_back(c.im());
    return Poly(std::move(out));
}

namespace {

std::string monomial_text(std::size_t e, std::string_view var) {
    if (e == 0) return "";
    std::string out(var);
    if (e > 1) out += "^" + std::to_string(e);
    return out;
}

} // namespace

std::string Poly::to_string(std::string_view var) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t e = coeffs_.size(); e-- > 0;) {
        const Scalar& c = coeffs_[e];
        if (c.is_zero()) continue;
        bool negative = false;
        std::string magnitude;
        if (c.is_real()) {
            negative = sgn(c.re()) < 0;
            magnitude = rational_to_string(negative ? mpq_class(-c.re()) : c.re());
        } else if (sgn(c.re()) == 0) {
            negative = sgn(c.im()) < 0;
            magnitude = Scalar(mpq_class(0), negative ? mpq_class(-c.im()) : c.im()).to_string();
        } else {
            magnitude = "(" + c.to_string() + ")";
        }
        const std::string mono = monomial_text(e, var);
        std::string term;
        if (mono.empty()) term = magnitude;
        else if (magnitude == "1") term = mono;
        else term = magnitude + "*" + mono;
        if (first) out += negative ? "-" + term : term;
        else out += (negative ? " - " : " + ") + term;
        first = false;
    }
    return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("Poly division by zero");
    if (a.size() < b.size()) return {Poly(), a};
    std::vector<Scalar> rem = a.coeffs();
    const std::size_t db = b.size() - 1;
    std::vector<Scalar> quot(a.size() - db);
    const Scalar inv_lead = Scalar(1) / b.leading();
    for (std::size_t e = rem.size(); e-- > db;) {
        if (rem[e].is_zero()) continue;
        const Scalar q = rem[e] * inv_lead;
        const std::size_t shift = e - db;
        quot[shift] = q;
        for (std::size_t j = 0; j <= db; ++j) {
            if (b.coeffs()[j].is_zero()) continue;
            rem[shift + j] -= q * b.coeffs()[j];
        }
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("Poly exact_div: nonzero remainder");
    return q;
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly u = a;
    Poly v = b;
    while (!v.is_zero()) {
        Poly r = divmod(u, v).second;
        u = std::move(v);
        v = r.monic();
    }
    return u.monic();
}

std::size_t root_multiplicity(const Poly& p, const Scalar& alpha) {
    if (p.is_zero()) throw std::domain_error("root_multiplicity of zero polynomial");
    const Poly lin({-alpha, Scalar(1)});
    std::size_t mult = 0;
    Poly cur = p;
    while (true) {
        auto [q, r] = divmod(cur, lin);
        if (!r.is_zero()) break;
        ++mult;
        cur = std::move(q);
    }
    return mult;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

} // namespace indicia
