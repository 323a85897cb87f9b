#include <catch2/catch_amalgamated.hpp>

#include "kmv/parse.hpp"

using namespace kmv;

TEST_CASE("polynomial parsing round trip") {
    VarSetPtr hv = VarSet::make({"H1", "H2", "H3"});
    for (const char* s : {
             "-2/3*H1^2*H2^2 + 2/3*H1^2*H3^2 - H2",
             "H1*H2*H3",
             "5",
             "-5/2*H2",
         }) {
        MultiPoly p = parse_poly(s, hv);
        CHECK(parse_poly(p.str(), hv) == p);
    }
}

TEST_CASE("polynomial grammar forms") {
    VarSetPtr hv = VarSet::make({"H1", "H2"});
    CHECK(parse_poly("(H1 + H2)^2", hv) ==
          parse_poly("H1^2 + 2*H1*H2 + H2^2", hv));
    CHECK(parse_poly("-(H1 - H2)", hv) == parse_poly("H2 - H1", hv));
    CHECK(parse_poly("3/2 * (H1 + 2)", hv) == parse_poly("3/2*H1 + 3", hv));
    CHECK(parse_poly("0", hv).is_zero());
}

TEST_CASE("rational function parsing with negative powers") {
    VarSetPtr kv = VarSet::make({"k"});
    RationalFunc f = parse_rf("(2+k)*(5+2*k)/(4+k)", kv);
    CHECK(f.eval("k", rat(-5, 2)) == rat(0));
    CHECK(f.eval("k", rat(0)) == rat(10, 4));
    CHECK_THROWS_AS(f.eval("k", rat(-4)), EvalError);
    RationalFunc g = parse_rf("(4+k)^-1", kv);
    CHECK(g.eval("k", rat(-2)) == rat(1, 2));
}

TEST_CASE("rational scalar parsing") {
    CHECK(parse_rational("-5/2") == rat(-5, 2));
    CHECK(parse_rational("7") == rat(7));
    CHECK(parse_rational("3/2 * 4") == rat(6));
}

TEST_CASE("generator term lines") {
    ParsedTerm t = parse_term_line("-3/2 * e[1,2](-1) f[2,4]^2 h[3](0)", nullptr);
    REQUIRE(t.coeff.is_constant());
    CHECK(t.coeff.constant_value() == rat(-3, 2));
    REQUIRE(t.factors.size() == 3);
    CHECK(t.factors[0].kind == 'e');
    CHECK(t.factors[0].i == 1);
    CHECK(t.factors[0].j == 2);
    REQUIRE(t.factors[0].mode.has_value());
    CHECK(*t.factors[0].mode == -1);
    CHECK(t.factors[0].power == 1);
    CHECK(t.factors[1].kind == 'f');
    CHECK(t.factors[1].power == 2);
    CHECK_FALSE(t.factors[1].mode.has_value());
    CHECK(t.factors[2].kind == 'h');
    CHECK(t.factors[2].i == 3);
    REQUIRE(t.factors[2].mode.has_value());
    CHECK(*t.factors[2].mode == 0);
}

TEST_CASE("symbolic coefficients in term lines") {
    VarSetPtr nv = VarSet::make({"n"});
    ParsedTerm t = parse_term_line("(3*n - 1) * f[1,4](-2)", nv);
    CHECK(t.coeff == parse_poly("3*n - 1", nv));
    REQUIRE(t.factors.size() == 1);
    CHECK(*t.factors[0].mode == -2);
}

TEST_CASE("parse errors surface as data errors") {
    VarSetPtr hv = VarSet::make({"H1"});
    CHECK_THROWS(parse_poly("H1 +", hv));
    CHECK_THROWS(parse_poly("Q7", hv));
    CHECK_THROWS(parse_poly("(H1", hv));
}
