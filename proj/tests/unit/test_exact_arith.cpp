#include <random>

#include "doctest.h"
#include "indicia/errors.hpp"
#include "indicia/expression.hpp"
#include "indicia/poly_matrix.hpp"
#include "indicia/rational_function.hpp"
#include "indicia/roots.hpp"
#include "support/builders.hpp"

using namespace indicia;
using indicia::testing::matrix_of;
using indicia::testing::random_matrix;
using indicia::testing::random_poly;

namespace {
Poly P(const char* s) { return parse_poly(s); }
} // namespace

TEST_CASE("scalar canonical form and arithmetic") {
    const Scalar half = Scalar::rational(2, 4);
    CHECK(half.re() == mpq_class(1, 2));
    CHECK(Scalar::rational(3, -6) == Scalar::rational(-1, 2));
    const Scalar i = Scalar::imaginary_unit();
    CHECK(i * i == Scalar(-1));
    CHECK((Scalar(1) / i) == -i);
    CHECK(Scalar(mpq_class(1, 2), mpq_class(3)).to_string() == "1/2+3i");
    CHECK(Scalar(mpq_class(1, 2), mpq_class(-3, 4)).to_string() == "1/2-3/4i");
    CHECK((-i).to_string() == "-i");
    CHECK(Scalar(mpq_class(0), mpq_class(2)).to_string() == "2i");
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), std::domain_error);
}

TEST_CASE("poly_arith examples") {
    CHECK(P("x-1") * P("x+1") == P("x^2-1"));
    const Poly z = P("x^2") * Poly();
    CHECK(z.is_zero());
    CHECK(z.degree() == ExtendedInt::minus_infinity());
    CHECK(P("1/2*x+i") + P("1/2*x-i") == Poly::x());
}

TEST_CASE("derivative examples") {
    CHECK(P("x^2").derivative() == P("2*x"));
    CHECK(P("x-1").derivative() == Poly(1));
    CHECK(Poly(5).derivative().is_zero());
}

TEST_CASE("valuation_and_degree examples") {
    CHECK(P("x^2").valuation() == 2);
    CHECK(P("x^2").degree() == 2);
    CHECK(P("x-1").valuation() == 0);
    CHECK(P("x-1").degree() == 1);
    CHECK(Poly().valuation() == ExtendedInt::plus_infinity());
    CHECK(Poly().degree() == ExtendedInt::minus_infinity());
}

TEST_CASE("mat_det_adj examples") {
    const auto id = det_adjugate(PolyMatrix::identity(2));
    CHECK(id.det == Poly(1));
    CHECK(id.adjugate == PolyMatrix::identity(2));

    // adj [[a,b],[c,d]] = [[d,-b],[-c,a]]
    const auto p1 = det_adjugate(matrix_of({{"0", "0"}, {"1", "-1"}}));
    CHECK(p1.det.is_zero());
    CHECK(p1.adjugate == matrix_of({{"-1", "0"}, {"-1", "0"}}));

    const auto d = det_adjugate(PolyMatrix::scalar_identity(2, P("x^3")));
    CHECK(d.det == P("x^6"));
    CHECK(d.adjugate == PolyMatrix::scalar_identity(2, P("x^3")));
}

TEST_CASE("mat_shift examples") {
    CHECK(P("x-1").shifted(Scalar(1)) == Poly::x());
    CHECK(P("x^2").shifted(Scalar(-1)) == P("x^2-2*x+1"));
    std::mt19937 rng(7);
    for (int t = 0; t < 10; ++t) {
        const PolyMatrix m = random_matrix(rng, 3, 4);
        const Scalar a(mpq_class(t, 3), mpq_class(1 - t));
        CHECK(m.shifted(a).shifted(-a) == m);
    }
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(11);
    for (int t = 0; t < 40; ++t) {
        const Poly a = random_poly(rng, 5, 0.1, true);
        const Poly b = random_poly(rng, 5, 0.1, true);
        const Poly c = random_poly(rng, 5, 0.1, true);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        if (!a.is_zero() && !b.is_zero()) {
            CHECK((a * b).valuation() == a.valuation() + b.valuation());
            CHECK((a * b).degree() == a.degree() + b.degree());
        }
    }
}

TEST_CASE("shift preserves degree and composes additively") {
    std::mt19937 rng(13);
    for (int t = 0; t < 30; ++t) {
        const Poly p = random_poly(rng, 6, 0.0, true);
        const Scalar a(mpq_class(t % 5, 2), mpq_class(1));
        const Scalar b(mpq_class(-1, 3), mpq_class(t % 3));
        CHECK(p.shifted(a).degree() == p.degree());
        CHECK(p.shifted(a + b) == p.shifted(a).shifted(b));
    }
}

TEST_CASE("M adj(M) = det(M) I on random matrices") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    for (int t = 0; t < 50; ++t) {
        const std::size_t N = dim(rng);
        const PolyMatrix m = random_matrix(rng, N, 3);
        const auto da = det_adjugate(m);
        const PolyMatrix scaled = PolyMatrix::scalar_identity(N, da.det);
        CHECK(m * da.adjugate == scaled);
        CHECK(da.adjugate * m == scaled);
        CHECK(determinant(m) == da.det);
    }
}

TEST_CASE("determinant agrees with Leibniz expansion on 3x3") {
    std::mt19937 rng(19);
    for (int t = 0; t < 10; ++t) {
        const PolyMatrix a = random_matrix(rng, 3, 2, 0.1);
        const Poly leibniz = a(0, 0) * a(1, 1) * a(2, 2) + a(0, 1) * a(1, 2) * a(2, 0) + a(0, 2) * a(1, 0) * a(2, 1) -
                             a(0, 2) * a(1, 1) * a(2, 0) - a(0, 0) * a(1, 2) * a(2, 1) - a(0, 1) * a(1, 0) * a(2, 2);
        CHECK(determinant(a) == leibniz);
    }
}

TEST_CASE("division, gcd and exact quotient") {
    const auto [q, r] = divmod(P("x^3-1"), P("x-1"));
    CHECK(q == P("x^2+x+1"));
    CHECK(r.is_zero());
    CHECK(gcd(P("x^2-1"), P("2*x^2+2*x")) == P("x+1"));
    CHECK_THROWS(exact_div(P("x^2+1"), P("x-1")));
    CHECK(root_multiplicity(P("x^3-3*x^2+3*x-1"), Scalar(1)) == 3);
}

TEST_CASE("root finding over Q and Q(i)") {
    const auto f = linear_factors(P("x^2+1"), GroundField::GaussianRational);
    REQUIRE(f.fully_resolved());
    REQUIRE(f.roots.size() == 2);
    CHECK(f.roots[0].value == Scalar(mpq_class(0), mpq_class(-1)));
    CHECK(f.roots[1].value == Scalar::imaginary_unit());

    const auto g = linear_factors(P("x^2+1"), GroundField::Rational);
    CHECK_FALSE(g.fully_resolved());
    CHECK(g.unresolved == P("x^2+1"));

    const auto h = linear_factors(P("2*x^3-x^2-2*x+1"), GroundField::Rational);
    REQUIRE(h.roots.size() == 3);
    CHECK(h.roots[0].value == Scalar(-1));
    CHECK(h.roots[1].value == Scalar::rational(1, 2));
    CHECK(h.roots[2].value == Scalar(1));

    // (x - (1+2i))^2 (x - 3/2) (x^2 + 2): the quadratic stays unresolved.
    const Poly a = P("x-1-2i");
    const Poly p = a * a * P("2*x-3") * P("x^2+2");
    const auto k = linear_factors(p, GroundField::GaussianRational);
    CHECK(k.unresolved == P("x^2+2"));
    REQUIRE(k.roots.size() == 2);
    CHECK(k.roots[0].value == Scalar(mpq_class(1), mpq_class(2)));
    CHECK(k.roots[0].multiplicity == 2);
    CHECK(k.roots[1].value == Scalar::rational(3, 2));

    CHECK(max_nonnegative_integer_root(P("x^2-x-6")) == 3);
    CHECK(min_integer_root(P("x^2-x-6")) == -2);
    CHECK_FALSE(max_nonnegative_integer_root(P("x+1")).has_value());
}

TEST_CASE("Gaussian roots with large norms") {
    // roots (7+10i) and (-3+8i)/5: divisor search must split 149 and 73.
    const Poly p = P("x-7-10i") * P("5*x+3-8i");
    const auto f = linear_factors(p, GroundField::GaussianRational);
    REQUIRE(f.fully_resolved());
    REQUIRE(f.roots.size() == 2);
    for (const auto& r : f.roots) CHECK(p.evaluate(r.value).is_zero());
}

TEST_CASE("integer factorization") {
    const auto f = factor_integer(mpz_class("600851475143"));
    REQUIRE(f.size() == 4);
    CHECK(f[3].first == 6857);
    const auto g = factor_integer(mpz_class("1000000016000000063")); // 1000000007 * 1000000009
    REQUIRE(g.size() == 2);
    CHECK(g[0].first == mpz_class("1000000007"));
}

TEST_CASE("rational functions normalize") {
    const RationalFunction f(P("x^2-1"), P("2*x-2"));
    CHECK(f.numerator() == P("1/2*x+1/2"));
    CHECK(f.denominator() == Poly(1));
    const RationalFunction g(Poly(1), P("x"));
    CHECK(g.derivative() == RationalFunction(Poly(-1), P("x^2")));
    CHECK((g * RationalFunction(P("x"))) == RationalFunction(1));
    CHECK(g.pole_order(Scalar(0)) == 1);
    CHECK(RationalFunction(P("x^2")).pole_order(Scalar(0)) == -2);
    CHECK(RationalFunction().pole_order(Scalar(0)) == ExtendedInt::minus_infinity());
}

TEST_CASE("rational matrix inverse") {
    RationalMatrix m(2, 2);
    m(0, 0) = RationalFunction(P("x"));
    m(0, 1) = RationalFunction(1);
    m(1, 1) = RationalFunction(P("x+1"));
    const RationalMatrix inv = inverse(m);
    CHECK(m * inv == RationalMatrix::identity(2));
    CHECK_THROWS_AS(inverse(RationalMatrix(2, 2)), SingularMatrix);
}
