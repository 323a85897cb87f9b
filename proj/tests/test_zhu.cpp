#include <catch2/catch_amalgamated.hpp>

#include "kmv/io.hpp"
#include "kmv/zhu.hpp"

using namespace kmv;

TEST_CASE("graded projection of vacuum words") {
    RootSystem rs(4);
    ModuleContext ctx{&rs, rat(-5, 2), TrivialModel{}};
    int a = rs.gen_id('e', 1, 3), b = rs.gen_id('f', 2, 4);

    // a(-1)|0> projects to a
    CHECK(zhu_project(ctx, act(ctx, a, -1, mv_highest(ctx))) == u_gen(a));
    // a(-2)|0> picks up one sign
    CHECK(zhu_project(ctx, act(ctx, a, -2, mv_highest(ctx))) ==
          MultiPoly(Rational(-1)) * u_gen(a));
    // a(-3)|0> flips back
    CHECK(zhu_project(ctx, act(ctx, a, -3, mv_highest(ctx))) == u_gen(a));
    // two letters: the written word reverses
    ModuleVector ab = act(ctx, a, -1, act(ctx, b, -1, mv_highest(ctx)));
    CHECK(zhu_project(ctx, ab) == u_mul(rs, u_gen(b), u_gen(a)));
}

TEST_CASE("graded projection rejects bad inputs") {
    RootSystem rs(4);
    ModuleContext vac{&rs, rat(-5, 2), TrivialModel{}};
    ModuleVector withtop{{{AffWord{{rs.theta_f(), 1}}, TopMono{}}, MultiPoly(Rational(1))}};
    CHECK_THROWS_AS(zhu_project(vac, withtop), UsageError);
    ModuleContext mod{&rs, rat(-5, 2), SymPowerModel{SymPowerModel::First, MultiPoly(Rational(1))}};
    CHECK_THROWS_AS(zhu_project(mod, mv_highest(mod)), UsageError);
}

TEST_CASE("exact polynomial division") {
    VarSetPtr hv = VarSet::make({"H1", "H2"});
    MultiPoly p = parse_poly("H1^2*H2 + 2*H1*H2 + H2", hv);
    MultiPoly d = parse_poly("H1 + 1", hv);
    auto q = divide_exact(p, d);
    REQUIRE(q.has_value());
    CHECK(*q == parse_poly("H1*H2 + H2", hv));
    auto q2 = divide_exact(*q, d);
    REQUIRE(q2.has_value());
    CHECK(*q2 == parse_poly("H2", hv));
    CHECK_FALSE(divide_exact(parse_poly("H1 + H2", hv), parse_poly("H1*H2", hv)).has_value());
    CHECK_THROWS_AS(divide_exact(p, MultiPoly()), UsageError);
}

TEST_CASE("plane membership for polynomials") {
    VarSetPtr hv = VarSet::make({"H1", "H2", "H3"});
    MultiPoly a = parse_poly("H1 + H2", hv);
    MultiPoly b = parse_poly("H2 + H3", hv);
    CHECK(in_poly_span(parse_poly("H1 - H3", hv), a, b));
    CHECK(in_poly_span(parse_poly("2*H1 + 5*H2 + 3*H3", hv), a, b));
    CHECK(in_poly_span(MultiPoly(), a, b));
    CHECK_FALSE(in_poly_span(parse_poly("H1", hv), a, b));
    CHECK_FALSE(in_poly_span(parse_poly("H1*H2", hv), a, b));
}

TEST_CASE("the sixteen vanishing lines") {
    const auto& lines = weight_lines();
    REQUIRE(lines.size() == 16);
    for (size_t i = 0; i < lines.size(); ++i) CHECK(lines[i].id == static_cast<int>(i) + 1);
    // spot values on two lines
    auto p5 = line_point(lines[4], rat(2)); // (t, -3/2, 0)
    CHECK(p5[0] == rat(2));
    CHECK(p5[1] == rat(-3, 2));
    CHECK(p5[2] == rat(0));
    auto p16 = line_point(lines[15], rat(1)); // (-t-3/2, t, -1/2)
    CHECK(p16[0] == rat(-5, 2));
    CHECK(p16[1] == rat(1));
    CHECK(p16[2] == rat(-1, 2));
}

TEST_CASE("membership of a point in the line families") {
    // (0, -3/2, 0) sits on two lines: family 5 at t=0 and family 6 at t=0
    auto hits = family_membership({rat(0), rat(-3, 2), rat(0)});
    REQUIRE(hits.size() >= 2);
    bool has5 = false, has6 = false;
    for (const auto& [fam, t] : hits) {
        if (fam == 5 && t == rat(0)) has5 = true;
        if (fam == 6 && t == rat(0)) has6 = true;
    }
    CHECK(has5);
    CHECK(has6);
    // a generic point lies on no line
    CHECK(family_membership({rat(1), rat(1), rat(1)}).empty());
}

TEST_CASE("both polynomials vanish along every declared line") {
    RootSystem rs(4);
    ZhuP0 z = extract_p0(rs, data_dir());
    CHECK(verify_family_vanishing(z.p1, z.p2));
}
