#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liehr/parse.hpp"

using namespace liehr;

TEST_CASE("bare simple types") {
    GroupSpec g = parse_group("B3");
    REQUIRE(g.simple_factors.size() == 1);
    CHECK(g.simple_factors[0] == SimpleType(Family::B, 3));
    CHECK(parse_group("E7").simple_factors[0] == SimpleType(Family::E7, 7));
    CHECK(parse_group("G2").simple_factors[0] == SimpleType(Family::G2, 2));
}

TEST_CASE("classical names with and without parentheses") {
    CHECK(parse_group("SU6").simple_factors[0] == SimpleType(Family::A, 5));
    CHECK(parse_group("SU(6)").simple_factors[0] == SimpleType(Family::A, 5));
    CHECK(parse_group("Sp3").simple_factors[0] == SimpleType(Family::C, 3));
    CHECK(parse_group("Spin11").simple_factors[0] == SimpleType(Family::B, 5));
    CHECK(parse_group("SO7").simple_factors[0] == SimpleType(Family::B, 3));
    CHECK(parse_group("SO4").simple_factors.size() == 2);
    CHECK(parse_group("SO2").torus_rank == 1);
}

TEST_CASE("products and weights") {
    IrrepSpec s = parse_irrep("Sp1*Spin11", "[1]x[0,0,0,0,1]");
    REQUIRE(s.group.simple_factors.size() == 2);
    CHECK(s.weights[0].coords == std::vector<int>{1});
    CHECK(s.weights[1].coords == std::vector<int>{0, 0, 0, 0, 1});
    RealRepSpec r = realify(s);
    CHECK(r.real_dim == 64);

    // SO(4) expands to two A1 factors and needs two weight lists
    IrrepSpec so4 = parse_irrep("SO4*Spin7", "[1]x[1]x[0,0,1]");
    CHECK(realify(so4).real_dim == 32);
}

TEST_CASE("parse errors carry the offending span") {
    CHECK_THROWS_AS(parse_group("Q5"), parse_error);
    CHECK_THROWS_AS(parse_group("B3 + C2"), parse_error);
    CHECK_THROWS_AS(parse_group("E9"), parse_error);
    CHECK_THROWS_AS(parse_weights("[1,2"), parse_error);
    CHECK_THROWS_AS(parse_weights("1,2]"), parse_error);
    try {
        parse_group("B3 * Q5");
        FAIL("expected a parse error");
    } catch (const parse_error& e) {
        CHECK(std::string(e.what()).find("Q") != std::string::npos);
        CHECK(std::string(e.what()).find("offset 5") != std::string::npos);
    }
}

TEST_CASE("domain errors for structurally invalid input") {
    // weight list count must match the simple factor count
    CHECK_THROWS_AS(parse_irrep("B3*C2", "[0,0,1]"), domain_error);
    // coordinate count must match the rank
    CHECK_THROWS_AS(parse_irrep("B3", "[0,1]"), domain_error);
    // negative coordinates are rejected as domain errors, not parse errors
    CHECK_THROWS_AS(parse_weights("[-1]"), domain_error);
}

TEST_CASE("weight parsing") {
    auto w = parse_weights("[3]x[1,0,0]");
    REQUIRE(w.size() == 2);
    CHECK(w[0].coords == std::vector<int>{3});
    CHECK(w[1].coords == std::vector<int>{1, 0, 0});
}
