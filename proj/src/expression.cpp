#include "indicia/expression.hpp"

#include <cctype>

#include "indicia/errors.hpp"

namespace indicia {

namespace {

constexpr unsigned long kMaxExponent = 4096;

enum class Tok { Number, Imag, Var, Unit, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::size_t pos;
    std::string text; // digits for Number/Imag
};

class Parser {
public:
    Parser(std::string_view text, const ExpressionOptions& opts) : text_(text), opts_(opts) { advance(); }

    Poly parse() {
        if (cur_.kind == Tok::End) fail("empty expression", cur_.pos);
        Poly p = sum();
        if (cur_.kind != Tok::End) {
            if (starts_primary(cur_.kind)) fail("implicit multiplication is not allowed", cur_.pos);
            fail("unexpected '" + std::string(1, text_[cur_.pos]) + "'", cur_.pos);
        }
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg, std::size_t pos) const { throw ParseError(msg, 1, pos + 1); }

    static bool starts_primary(Tok k) {
        return k == Tok::Number || k == Tok::Imag || k == Tok::Var || k == Tok::Unit || k == Tok::LParen;
    }

    void advance() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
        const std::size_t start = i_;
        if (i_ >= text_.size()) {
            cur_ = {Tok::End, start, {}};
            return;
        }
        const char ch = text_[i_];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) ++i_;
            std::string digits(text_.substr(start, i_ - start));
            if (i_ < text_.size() && text_[i_] == '.') fail("decimal literals are not exact; use p/q", i_);
            if (i_ < text_.size() && text_[i_] == 'i' && !ident_continues(i_ + 1)) {
                ++i_;
                cur_ = {Tok::Imag, start, std::move(digits)};
                return;
            }
            cur_ = {Tok::Number, start, std::move(digits)};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            while (i_ < text_.size() && ident_char(text_[i_])) ++i_;
            const std::string_view word = text_.substr(start, i_ - start);
            if (word == "i") {
                cur_ = {Tok::Unit, start, {}};
                return;
            }
            if (word == opts_.variable) {
                cur_ = {Tok::Var, start, {}};
                return;
            }
            fail("unknown identifier '" + std::string(word) + "'", start);
        }
        ++i_;
        switch (ch) {
        case '+': cur_ = {Tok::Plus, start, {}}; return;
        case '-': cur_ = {Tok::Minus, start, {}}; return;
        case '*': cur_ = {Tok::Star, start, {}}; return;
        case '/': cur_ = {Tok::Slash, start, {}}; return;
        case '^': cur_ = {Tok::Caret, start, {}}; return;
        case '(': cur_ = {Tok::LParen, start, {}}; return;
        case ')': cur_ = {Tok::RParen, start, {}}; return;
        default: fail("unexpected character '" + std::string(1, ch) + "'", start);
        }
    }

    static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
    bool ident_continues(std::size_t j) const { return j < text_.size() && ident_char(text_[j]); }

    void require_imaginary(std::size_t pos) const {
        if (opts_.field == GroundField::Rational)
            fail("imaginary unit is not available over the rational field", pos);
    }

    Poly sum() {
        Poly acc = term();
        while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
            const bool minus = cur_.kind == Tok::Minus;
            advance();
            Poly t = term();
            if (minus) acc -= t;
            else acc += t;
        }
        return acc;
    }

    Poly term() {
        Poly acc = unary();
        while (true) {
            if (cur_.kind == Tok::Star) {
                advance();
                acc *= unary();
            } else if (starts_primary(cur_.kind)) {
                fail("implicit multiplication is not allowed", cur_.pos);
            } else {
                return acc;
            }
        }
    }

    Poly unary() {
        if (cur_.kind == Tok::Minus) {
            advance();
            return -unary();
        }
        if (cur_.kind == Tok::Plus) {
            advance();
            return unary();
        }
        return power();
    }

    Poly power() {
        Poly base = primary();
        if (cur_.kind != Tok::Caret) return base;
        advance();
        if (cur_.kind != Tok::Number) fail("exponent must be a nonnegative integer literal", cur_.pos);
        const mpz_class e(cur_.text);
        if (e > kMaxExponent) fail("exponent too large", cur_.pos);
        advance();
        if (cur_.kind == Tok::Caret) fail("chained exponentiation is not allowed", cur_.pos);
        return base.pow(e.get_ui());
    }

    Poly primary() {
        const Token t = cur_;
        switch (t.kind) {
        case Tok::Number:
        case Tok::Imag: {
            advance();
            bool imag = t.kind == Tok::Imag;
            if (imag) require_imaginary(t.pos);
            mpq_class value{mpz_class(t.text)};
            if (cur_.kind == Tok::Slash) {
                advance();
                if (cur_.kind != Tok::Number && cur_.kind != Tok::Imag)
                    fail("expected integer denominator after '/'", cur_.pos);
                if (cur_.kind == Tok::Imag) {
                    if (imag) fail("imaginary unit appears twice in literal", cur_.pos);
                    require_imaginary(cur_.pos);
                    imag = true;
                }
                const mpz_class den(cur_.text);
                if (den == 0) fail("zero denominator", cur_.pos);
                value /= den;
                advance();
            }
            value.canonicalize();
            return imag ? Poly(Scalar(mpq_class(0), value)) : Poly(Scalar(value));
        }
        case Tok::Unit:
            require_imaginary(t.pos);
            advance();
            return Poly(Scalar::imaginary_unit());
        case Tok::Var:
            advance();
            return Poly::x();
        case Tok::LParen: {
            advance();
            Poly inner = sum();
            if (cur_.kind != Tok::RParen) fail("expected ')'", cur_.pos);
            advance();
            return inner;
        }
        case Tok::Slash: fail("division is only allowed inside a rational literal p/q", t.pos);
        case Tok::End: fail("unexpected end of expression", t.pos);
        default: fail("expected a number, 'i', '" + opts_.variable + "' or '('", t.pos);
        }
    }

    std::string_view text_;
    const ExpressionOptions& opts_;
    std::size_t i_ = 0;
    Token cur_{Tok::End, 0, {}};
};

} // namespace

Poly parse_poly(std::string_view text, const ExpressionOptions& options) { return Parser(text, options).parse(); }

Scalar parse_scalar(std::string_view text, const ExpressionOptions& options) {
    const Poly p = parse_poly(text, options);
    if (!p.is_constant()) throw ParseError("expected a constant, found an expression in " + options.variable, 1, 1);
    return p.is_zero() ? Scalar() : p.coeffs().front();
}

} // namespace indicia
