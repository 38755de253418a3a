#include "indicia/scalar.hpp"

#include <limits>
#include <stdexcept>

namespace indicia {

std::int64_t Scalar::to_int64() const {
    if (!is_integer()) throw std::domain_error("Scalar::to_int64: not an integer: " + to_string());
    const mpz_class& z = re_.get_num();
    if (!z.fits_slong_p()) throw std::overflow_error("Scalar::to_int64: out of range");
    return z.get_si();
}

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
    if (sgn(o.im_) == 0) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    const mpq_class n = o.norm();
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    if (int c = cmp(a.re_, b.re_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (int c = cmp(a.im_, b.im_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

std::string Scalar::to_string() const {
    const bool has_re = sgn(re_) != 0;
    const bool has_im = sgn(im_) != 0;
    if (!has_im) return rational_to_string(re_);
    std::string imag;
    if (im_ == 1) imag = "i";
    else if (im_ == -1) imag = "-i";
    else imag = rational_to_string(im_) + "i";
    if (!has_re) return imag;
    std::string out = rational_to_string(re_);
    if (imag.front() != '-') out += '+';
    return out + imag;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

} // namespace indicia
