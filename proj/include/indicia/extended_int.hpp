#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace indicia {

// Integer extended by -inf and +inf. Degrees of zero polynomials are -inf,
// valuations of zero polynomials are +inf.
class ExtendedInt {
public:
    enum class Kind { MinusInfinity, Finite, PlusInfinity };

    constexpr ExtendedInt(std::int64_t value) : kind_(Kind::Finite), value_(value) {}

    static constexpr ExtendedInt minus_infinity() { return ExtendedInt(Kind::MinusInfinity); }
    static constexpr ExtendedInt plus_infinity() { return ExtendedInt(Kind::PlusInfinity); }

    constexpr Kind kind() const { return kind_; }
    constexpr bool is_finite() const { return kind_ == Kind::Finite; }
    constexpr bool is_minus_infinity() const { return kind_ == Kind::MinusInfinity; }
    constexpr bool is_plus_infinity() const { return kind_ == Kind::PlusInfinity; }

    std::int64_t value() const {
        if (!is_finite()) throw std::logic_error("ExtendedInt::value on infinite value");
        return value_;
    }

    constexpr ExtendedInt operator-() const {
        switch (kind_) {
        case Kind::MinusInfinity: return plus_infinity();
        case Kind::PlusInfinity: return minus_infinity();
        default: return ExtendedInt(-value_);
        }
    }

    friend ExtendedInt operator+(ExtendedInt a, ExtendedInt b) {
        if (a.is_finite() && b.is_finite()) return ExtendedInt(a.value_ + b.value_);
        if ((a.is_plus_infinity() && b.is_minus_infinity()) ||
            (a.is_minus_infinity() && b.is_plus_infinity()))
            throw std::logic_error("ExtendedInt: +inf + -inf is undefined");
        return a.is_finite() ? b : a;
    }
    friend ExtendedInt operator-(ExtendedInt a, ExtendedInt b) { return a + (-b); }

    friend ExtendedInt operator*(std::int64_t k, ExtendedInt a) {
        if (a.is_finite()) return ExtendedInt(k * a.value_);
        if (k == 0) throw std::logic_error("ExtendedInt: 0 * inf is undefined");
        return k > 0 ? a : -a;
    }

    friend constexpr bool operator==(ExtendedInt a, ExtendedInt b) {
        return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(ExtendedInt a, ExtendedInt b) {
        if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
        if (a.kind_ != Kind::Finite) return std::strong_ordering::equal;
        return a.value_ <=> b.value_;
    }

    std::string to_string() const {
        switch (kind_) {
        case Kind::MinusInfinity: return "-inf";
        case Kind::PlusInfinity: return "+inf";
        default: return std::to_string(value_);
        }
    }

private:
    explicit constexpr ExtendedInt(Kind k) : kind_(k), value_(0) {}

    Kind kind_;
    std::int64_t value_;
};

inline ExtendedInt max(ExtendedInt a, ExtendedInt b) { return a < b ? b : a; }
inline ExtendedInt min(ExtendedInt a, ExtendedInt b) { return b < a ? b : a; }

} // namespace indicia
