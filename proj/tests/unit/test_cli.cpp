#include <sstream>
#include <string>

#include "doctest.h"
#include "indicia/cli.hpp"
#include "indicia/io.hpp"

using namespace indicia;

namespace {
struct Outcome {
    int code = 0;
    std::string out;
    std::string err;
    Json report() const { return Json::parse(out); }
};

std::string fixture(const std::string& name) { return std::string(INDICIA_FIXTURE_DIR) + "/" + name; }

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    Outcome o;
    o.code = cli::run(args, out, err);
    o.out = out.str();
    o.err = err.str();
    return o;
}
} // namespace

TEST_CASE("digest is FNV-1a 64") {
    CHECK(cli::digest("") == "cbf29ce484222325");
    CHECK(cli::digest("a") == "af63dc4c8601ec8c");
}

TEST_CASE("analyze reports the indices of the worked fixture") {
    const Outcome o = run({"analyze", fixture("L.json")});
    REQUIRE(o.code == 0);
    const Json r = o.report()["results"];
    CHECK(r["indices"]["chi_formal"] == 0);
    CHECK(r["indices"]["chi_convergent"] == -1);
    CHECK(r["indices"]["chi_polynomial"] == -1);
    CHECK(r["classification"]["verdict"] == "IRREGULAR");
    CHECK(r["rationality_condition"]["verdict"] == "HOLDS");
    CHECK(r["d"] == "k + 1");
    CHECK(!o.report()["citations"].empty());
}

TEST_CASE("undefined indices render as null with a reason") {
    const Outcome o = run({"analyze", fixture("P1.json")});
    REQUIRE(o.code == 0);
    const Json idx = o.report()["results"]["indices"];
    CHECK(idx["chi_formal"].is_null());
    CHECK(!idx["chi_formal_reason"].get<std::string>().empty());
    CHECK(idx["chi_convergent"] == -2);
    CHECK(o.report()["results"]["classification"]["verdict"] == "INDETERMINATE");
}

TEST_CASE("riccati neg-square holds with empty singular set") {
    const Outcome o = run({"riccati", fixture("ricc-neg-square.json"), "--theorem", "7"});
    REQUIRE(o.code == 0);
    const Json r = o.report()["results"];
    CHECK(r["theorem"] == "rational");
    CHECK(r["verdict"] == "HOLDS");
    CHECK(r["points"].empty());
    CHECK(r["singular_points"].empty());
    REQUIRE(!r["lifts"].empty());
    for (const auto& l : r["lifts"]) CHECK(l["verified"] == true);

    const Outcome lifted = run({"riccati", fixture("ricc-neg-square.json"), "--theorem", "rational", "--lift",
                                fixture("lift-neg-square.json")});
    REQUIRE(lifted.code == 0);
    CHECK(lifted.report()["results"]["lift"]["verified"] == true);
    CHECK(lifted.report().contains("auxiliary_digests"));
}

TEST_CASE("riccati criteria on the other fixtures") {
    CHECK(run({"riccati", fixture("ricc-tanh.json"), "--theorem", "7"}).report()["results"]["verdict"] == "FAILS");
    const Json x = run({"riccati", fixture("ricc-x-square.json"), "--theorem", "rational"}).report()["results"];
    CHECK(x["verdict"] == "HOLDS");
    REQUIRE(x["points"].size() == 1);
    CHECK(x["points"][0]["alpha"] == "0");
    CHECK(run({"riccati", fixture("ricc-x-square.json"), "--theorem", "8"}).report()["results"]["verdict"] == "FAILS");
    CHECK(run({"riccati", fixture("ricc-x-square.json"), "--theorem", "9"}).code == 1);
}

TEST_CASE("oracle stabilizes on the worked fixture") {
    const Outcome o = run({"oracle", fixture("L.json"), "--degrees", "3..8", "--witness-k", "auto"});
    REQUIRE(o.code == 0);
    const Json r = o.report()["results"];
    CHECK(r["polynomial_index"]["stabilized"] == true);
    CHECK(r["polynomial_index"]["stabilized_index"] == -1);
    CHECK(r["polynomial_index"]["rows"].size() == 6);
    CHECK(r["cokernel_witnesses"]["verified"] == true);
    CHECK(r["cokernel_witnesses"]["count"] == 1);

    const Json p2 = run({"oracle", fixture("P2.json"), "--jets", "4..8"}).report()["results"];
    CHECK(p2["formal_kernel"]["stabilized_dim"] == 1);
}

TEST_CASE("series subcommand") {
    const Json r = run({"series", fixture("P1.json"), "--rhs", fixture("P1-rhs.json"), "--terms", "6"}).report()["results"];
    REQUIRE(r["solvable"] == true);
    const Json c = r["jet"]["coefficients"];
    const char* factorials[] = {"0", "1", "1", "2", "6", "24", "120"};
    for (std::size_t j = 0; j < 7; ++j) {
        CHECK(c[j][0] == "0");
        CHECK(c[j][1] == factorials[j]);
    }

    const Json k = run({"series", fixture("P2.json"), "--terms", "6"}).report()["results"];
    CHECK(k["mode"] == "kernel");
    CHECK(k["jets"].size() == 1);

    const Json f = run({"series", fixture("L.json"), "--point", "1", "--exponent", "0", "--terms", "4"}).report()["results"];
    CHECK(f["mode"] == "frobenius");
    CHECK(f["point"] == "1");
}

TEST_CASE("solve subcommand") {
    const Json p = run({"solve", fixture("L.json"), "--mode", "polynomial"}).report()["results"];
    CHECK(p["kernel"].empty());
    CHECK(p["solvable"] == true);
    CHECK(run({"solve", fixture("ricc-neg-square.json")}).code == 1);
    CHECK(run({"solve", fixture("P1.json"), "--mode", "rational"}).code == 2);
}

TEST_CASE("exit codes") {
    CHECK(run({"analyze", fixture("invalid-leading-zero.json")}).code == 1);
    const Outcome bad = run({"analyze", fixture("bad-expression.json")});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("line 6, column 9") != std::string::npos);
    CHECK(run({"analyze", "/nonexistent/op.json"}).code == 1);
    CHECK(run({"series", fixture("P1.json"), "--exponent", "0"}).code == 2);
    CHECK(run({}).code == 1);
    CHECK(run({"--format", "yaml", "analyze", fixture("L.json")}).code == 1);
}

TEST_CASE("reports are deterministic") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"analyze", fixture("P2.json")},
             {"--format", "text", "riccati", fixture("ricc-x-square.json"), "--theorem", "rational"},
             {"oracle", fixture("L.json"), "--degrees", "2..5", "--jets", "2..4"}}) {
        const Outcome a = run(args), b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("text format renders the same report") {
    const Outcome o = run({"--format", "text", "analyze", fixture("L.json")});
    REQUIRE(o.code == 0);
    CHECK(o.out.find("chi_polynomial: -1") != std::string::npos);
    CHECK(o.out.find("verdict: IRREGULAR") != std::string::npos);
}
