#include <random>
#include <string>

#include "doctest.h"
#include "indicia/errors.hpp"
#include "indicia/io.hpp"
#include "support/builders.hpp"

using namespace indicia;
using indicia::testing::random_operator;
using indicia::testing::random_poly;

namespace {
std::string fixture(const std::string& name) { return read_file(std::string(INDICIA_FIXTURE_DIR) + "/" + name); }

template <class F>
ParseError parse_failure(F&& f) {
    try {
        f();
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected ParseError");
    return ParseError("", 0, 0);
}
} // namespace

TEST_CASE("operator fixtures") {
    const DiffOperator l = parse_operator(fixture("L.json"));
    CHECK(l.dimension() == 1);
    CHECK(l.order() == 1);
    CHECK(l.coefficient(0)(0, 0) == parse_poly("x-1"));

    const DiffOperator p1 = parse_operator(fixture("P1.json"));
    CHECK(p1.dimension() == 2);
    CHECK(p1.order() == 1);
    CHECK(p1.leading_determinant() == parse_poly("x^4"));

    CHECK_THROWS_AS(parse_operator(fixture("invalid-leading-zero.json")), InvalidOperator);
}

TEST_CASE("expression errors point into the file") {
    const ParseError e = parse_failure([] { parse_operator(fixture("bad-expression.json")); });
    CHECK(e.line() == 6);
    CHECK(e.column() == 9);
}

TEST_CASE("malformed documents") {
    const ParseError syntax = parse_failure([] { parse_operator("{\"N\": 1,\n  \"order\": }"); });
    CHECK(syntax.line() == 2);

    const ParseError type = parse_failure([] { parse_operator(R"({"N": 1, "order": 0, "coefficients": [[[3]]]})"); });
    CHECK(type.line() == 1);
    CHECK(type.column() == 41);

    const ParseError missing = parse_failure([] { parse_operator(R"({"N": 1, "coefficients": []})"); });
    CHECK(missing.bare_message().find("order") != std::string::npos);

    CHECK_THROWS_AS(parse_operator(R"({"N": 2, "order": 0, "coefficients": [[["1"]]]})"), InvalidOperator);
    CHECK_THROWS_AS(parse_operator(R"({"N": 1, "order": 1, "coefficients": [[["1"]]]})"), InvalidOperator);
    CHECK_THROWS_AS(parse_operator(R"({"N": 0, "order": 0, "coefficients": []})"), InvalidOperator);
    CHECK_THROWS_AS(read_file("/nonexistent/indicia.json"), InputFileError);
}

TEST_CASE("field option reaches the expression parser") {
    const std::string text = R"({"N": 1, "order": 0, "coefficients": [[["x + i"]]]})";
    CHECK(parse_operator(text).coefficient(0)(0, 0) == parse_poly("x+i"));
    ExpressionOptions rational;
    rational.field = GroundField::Rational;
    CHECK_THROWS_AS(parse_operator(text, rational), ParseError);
}

TEST_CASE("right-hand sides and rational matrices") {
    const RationalVector g = parse_rhs(fixture("P1-rhs.json"));
    CHECK(g.numerators() == PolyVector{Poly(), parse_poly("-x")});
    CHECK(g.denominator() == Poly(1));

    const RationalVector h = parse_rhs(R"({"numerators": ["2", "2*x"], "denominator": "2*x+2"})");
    CHECK(h.numerators() == PolyVector{Poly(1), parse_poly("x")});
    CHECK(h.denominator() == parse_poly("x+1"));
    CHECK_THROWS_AS(parse_rhs(R"({"numerators": ["1"], "denominator": "0"})"), ParseError);

    const RationalMatrix w = parse_rational_matrix(fixture("lift-neg-square.json"));
    REQUIRE(w.rows() == 1);
    CHECK(w(0, 0) == RationalFunction(parse_poly("x+1"), Poly(1)));
}

TEST_CASE("riccati fixtures") {
    const RiccatiSystem s = parse_riccati(fixture("ricc-x-square.json"));
    CHECK(s.dimension() == 1);
    CHECK(s.c1() == parse_poly("x"));
    CHECK_THROWS_AS(parse_riccati(R"({"N": 1, "A": [["0"]], "B": [["0"]], "C": [["0"]]})"), InvalidOperator);
}

TEST_CASE("canonical printer round-trips") {
    std::mt19937 rng(4711);
    for (int trial = 0; trial < 40; ++trial) {
        DiffOperator op = random_operator(rng, 3, 3, 4);
        if (trial % 2 == 1) {
            std::vector<PolyMatrix> mats = op.coefficients();
            for (auto& m : mats)
                for (std::size_t r = 0; r < m.rows(); ++r)
                    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) += random_poly(rng, 2, 0.5, true);
            try {
                op = DiffOperator(mats);
            } catch (const InvalidOperator&) {
                continue;
            }
        }
        const std::string text = print_operator(op);
        CHECK(parse_operator(text) == op);
        CHECK(print_operator(parse_operator(text)) == text);
    }
}
