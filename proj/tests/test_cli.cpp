#include "doctest.h"

#include "cfgspace/cli.hpp"

using namespace cfgspace;

namespace {

const CliOptions opts;

json classify_input(const char* spaces) {
    return json::parse(std::string(R"({"ring":{"p":3,"omega":2},"spaces":)") + spaces + "}");
}

} // namespace

TEST_CASE("classify one space") {
    const json out = cmd_classify(
        json::parse(R"({"ring":{"p":3,"omega":1},
                        "spaces":{"X":{"base":[[0]],"generators":[[[1]],[[2]]]}}})"),
        opts);
    CHECK(out["alphas"]["X"] == json::parse("[[1],[1]]"));
    CHECK_FALSE(out.contains("isometric"));
}

TEST_CASE("classify two isometric spaces emits the mapping") {
    const json out = cmd_classify(
        classify_input(R"({"X":{"base":[[0,0]],"generators":[[[1,0]]]},
                           "Y":{"base":[[1,1]],"generators":[[[2,1]]]}})"),
        opts);
    CHECK(out["isometric"] == true);
    CHECK(out["alphas"]["X"] == out["alphas"]["Y"]);
    CHECK(out["mapping"] == json::parse("[[[[0,0]],[[1,1]]],[[[1,0]],[[2,1]]]]"));
}

TEST_CASE("classify empty against non-empty") {
    const json out = cmd_classify(
        classify_input(R"({"X":{"empty":true,"n":1},
                           "Y":{"base":[[0,0]],"generators":[]}})"),
        opts);
    CHECK(out["isometric"] == false);
    CHECK(out["alphas"]["X"] == json::parse("{\"empty\":true}"));
}

TEST_CASE("classify output is deterministic") {
    const json in = classify_input(R"({"X":{"base":[[0,0]],"generators":[[[1,0]],[[2,2]]]},
                                       "Y":{"base":[[0,0]],"generators":[[[0,1]]]}})");
    CHECK(cmd_classify(in, opts).dump() == cmd_classify(in, opts).dump());
}

TEST_CASE("solve") {
    SUBCASE("x^2 - x over Z3") {
        const json out = cmd_solve(
            json::parse(R"({"ring":{"p":3,"omega":1},
                            "polynomials":[{"n":1,"monomials":[
                                {"exp":[2],"coeff":[1]},
                                {"exp":[1],"coeff":[2]}]}]})"),
            opts);
        CHECK(out["member_count"] == 2);
        CHECK(out["members"] == json::parse("[[[0]],[[1]]]"));
    }
    SUBCASE("a unit has an empty variety") {
        const json out = cmd_solve(
            json::parse(R"({"ring":{"p":3,"omega":1},
                            "polynomials":[{"n":1,"monomials":[{"exp":[0],"coeff":[1]}]}]})"),
            opts);
        CHECK(out["variety"]["empty"] == true);
        CHECK(out["member_count"] == 0);
    }
    SUBCASE("the zero polynomial leaves all nine points") {
        const json out = cmd_solve(
            json::parse(R"({"ring":{"p":3,"omega":2},
                            "polynomials":[{"n":1,"monomials":[]}]})"),
            opts);
        CHECK(out["member_count"] == 9);
    }
}

TEST_CASE("interpolate") {
    const json out = cmd_interpolate(
        json::parse(R"({"ring":{"p":3,"omega":1},
                        "table":[[[[0]],[[0]]],[[[1]],[[1]]],[[[2]],[[1]]]]})"),
        opts);
    CHECK(out["polynomials"] ==
          json::parse(R"([{"n":1,"monomials":[{"exp":[2],"coeff":[1]}]}])"));
}

TEST_CASE("orthogonalize and base") {
    const json space =
        json::parse(R"({"ring":{"p":3,"omega":2},
                        "space":{"base":[[0,0]],"generators":[[[1,1]],[[1,2]]]}})");
    const json ref = cmd_orthogonalize(space, opts);
    CHECK(ref["referential"] == json::parse("[[[1,1]],[[0,2]]]"));

    const json base = cmd_base(space, opts);
    CHECK(base["norms"] == json::parse("[[1,1],[0,1]]"));
    CHECK(base["alphas"] == base["norms"]);
}

TEST_CASE("verify a single small ring") {
    CliOptions fast;
    fast.seed = 3;
    const json out =
        cmd_verify(json::parse(R"({"ring":{"p":2,"omega":1},"n":1,"samples":5})"), fast);
    CHECK(out["pass"] == true);
    CHECK(out["runs"].size() == 1);
}

TEST_CASE("job file validation errors") {
    CHECK_THROWS_AS(cmd_classify(json::parse(R"({"spaces":{}})"), opts), ParseError);
    CHECK_THROWS_AS(cmd_classify(classify_input("{}"), opts), ParseError);
    CHECK_THROWS_AS(
        cmd_classify(classify_input(
                         R"({"A":{"base":[[0,0]],"generators":[]},
                             "B":{"base":[[0,0]],"generators":[]},
                             "C":{"base":[[0,0]],"generators":[]}})"),
                     opts),
        ParseError);
    // objects inconsistent with the declared ring are rejected while parsing
    CHECK_THROWS_AS(
        cmd_classify(classify_input(R"({"X":{"base":[[0]],"generators":[]}})"), opts),
        ParseError);
    CHECK_THROWS_AS(run_command("nonsense", json::parse("{}"), opts), ParseError);
    CHECK_THROWS_AS(run_command("classify", std::nullopt, opts), ParseError);
}
