#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "kmv/affine_module.hpp"

using namespace kmv;

namespace {

bool mv_equal(const ModuleVector& a, const ModuleVector& b) {
    ModuleVector d = a - b;
    for (const auto& [k, c] : d)
        if (!c.is_zero()) return false;
    return true;
}

// The normal form must satisfy the defining relation
//   x(m) y(l) - y(l) x(m) = [x,y](m+l) + m delta_{m+l,0} (x|y) k
// on every state, whichever order the two operators are applied in.
void check_contract(const ModuleContext& ctx, const std::vector<ModuleVector>& states,
                    std::mt19937_64& rng, int trials) {
    const RootSystem& rs = *ctx.rs;
    std::uniform_int_distribution<int> pick(0, rs.num_gens() - 1);
    std::uniform_int_distribution<int> md(-2, 2);
    for (int t = 0; t < trials; ++t) {
        int x = pick(rng), y = pick(rng), m = md(rng), l = md(rng);
        for (const auto& v : states) {
            ModuleVector lhs = act(ctx, x, m, act(ctx, y, l, v)) -
                               act(ctx, y, l, act(ctx, x, m, v));
            ModuleVector rhs = act(ctx, bracket(rs, gelem(x), gelem(y)), m + l, v);
            if (m + l == 0) {
                MultiPoly central(rs.form(x, y) * Rational(m) * ctx.k);
                rhs = rhs + central * v;
            }
            REQUIRE(mv_equal(lhs, rhs));
        }
    }
}

std::vector<ModuleVector> sample_states(const ModuleContext& ctx) {
    const RootSystem& rs = *ctx.rs;
    ModuleVector v0 = mv_highest(ctx);
    ModuleVector v1 = act(ctx, rs.theta_f(), -1, v0);
    ModuleVector v2 = act(ctx, rs.simple_f(1), -2, act(ctx, rs.simple_e(1), -1, v0));
    return {v0, v1, v2};
}

} // namespace

TEST_CASE("commutation contract over the vacuum module") {
    RootSystem rs(4);
    ModuleContext ctx{&rs, rat(-5, 2), TrivialModel{}};
    std::mt19937_64 rng(31);
    check_contract(ctx, sample_states(ctx), rng, 25);
}

TEST_CASE("commutation contract over both symmetric-power modules, symbolic n") {
    RootSystem rs(4);
    VarSetPtr nv = VarSet::make({"n"});
    MultiPoly n = MultiPoly::var(nv, "n");
    std::mt19937_64 rng(37);
    for (auto dir : {SymPowerModel::First, SymPowerModel::Last}) {
        ModuleContext ctx{&rs, rat(-5, 2), SymPowerModel{dir, n}};
        check_contract(ctx, sample_states(ctx), rng, 15);
    }
}

TEST_CASE("commutation contract over the lowered highest-weight module") {
    RootSystem rs(5);
    ModuleContext ctx{&rs, rat(-5, 2),
                      make_lowered(rs, {rat(-5, 2), rat(0), rat(0), rat(0)})};
    std::mt19937_64 rng(41);
    check_contract(ctx, sample_states(ctx), rng, 15);
}

TEST_CASE("highest state of the vacuum module") {
    RootSystem rs(4);
    ModuleContext ctx{&rs, rat(-5, 2), TrivialModel{}};
    ModuleVector v0 = mv_highest(ctx);
    REQUIRE(v0.size() == 1);
    CHECK(act(ctx, rs.simple_e(1), 0, v0).empty());
    CHECK(act(ctx, rs.h_id(2), 0, v0).empty());
    CHECK(act(ctx, rs.theta_e(), 1, v0).empty());
    auto [deg, w] = degree_and_weight(ctx, act(ctx, rs.theta_f(), -1, v0));
    CHECK(deg == 1);
    CHECK(weight_eq(w, weight_of_ints({-1, 0, -1})));
}

TEST_CASE("symmetric-power top actions, symbolic n") {
    RootSystem rs(4);
    VarSetPtr nv = VarSet::make({"n"});
    MultiPoly n = MultiPoly::var(nv, "n");

    ModuleContext first{&rs, rat(-5, 2), SymPowerModel{SymPowerModel::First, n}};
    ModuleVector v0 = mv_highest(first);
    CHECK(act(first, rs.simple_e(1), 0, v0).empty());
    CHECK(mv_equal(act(first, rs.simple_f(1), 0, v0),
                   ModuleVector{{{AffWord{}, TopMono{1, 0, 0}}, n}}));
    CHECK(mv_equal(act(first, rs.h_id(1), 0, v0), n * v0));
    auto [deg, w] = degree_and_weight(first, v0);
    CHECK(deg == 0);
    CHECK(weight_eq(w, Weight{n, MultiPoly(), MultiPoly()}));

    ModuleContext last{&rs, rat(-5, 2), SymPowerModel{SymPowerModel::Last, n}};
    ModuleVector u0 = mv_highest(last);
    CHECK(act(last, rs.simple_e(3), 0, u0).empty());
    CHECK(mv_equal(act(last, rs.simple_f(3), 0, u0),
                   ModuleVector{{{AffWord{}, TopMono{0, 0, 1}}, -n}}));
    CHECK(mv_equal(act(last, rs.h_id(3), 0, u0), n * u0));
    auto [degl, wl] = degree_and_weight(last, u0);
    CHECK(degl == 0);
    CHECK(weight_eq(wl, Weight{MultiPoly(), MultiPoly(), n}));
}

TEST_CASE("lowered module: declared annihilations and nothing else") {
    RootSystem rs(5);
    ModuleContext ctx{&rs, rat(-5, 2),
                      make_lowered(rs, {rat(-5, 2), rat(0), rat(0), rat(0)})};
    ModuleVector v0 = mv_highest(ctx);
    // zero-mode f's with root support on zero-label nodes act as zero
    CHECK(act(ctx, rs.gen_id('f', 2, 3), 0, v0).empty());
    CHECK(act(ctx, rs.gen_id('f', 3, 5), 0, v0).empty());
    // support touching the first node survives
    CHECK(act(ctx, rs.gen_id('f', 1, 2), 0, v0).size() == 1);
    CHECK(act(ctx, rs.gen_id('f', 1, 5), 0, v0).size() == 1);
    // negative modes are creation operators regardless of the label
    CHECK(act(ctx, rs.gen_id('f', 2, 3), -1, v0).size() == 1);
    // h eigenvalue is the declared weight
    CHECK(mv_equal(act(ctx, rs.h_id(1), 0, v0), MultiPoly(rat(-5, 2)) * v0));
    CHECK(act(ctx, rs.h_id(2), 0, v0).empty());
    // e(0) f(0) = h(0) on the top
    ModuleVector down = act(ctx, rs.simple_f(1), 0, v0);
    CHECK(mv_equal(act(ctx, rs.simple_e(1), 0, down), MultiPoly(rat(-5, 2)) * v0));
}

TEST_CASE("word keys stay sorted and strictly negative") {
    RootSystem rs(4);
    ModuleContext ctx{&rs, rat(-5, 2), TrivialModel{}};
    ModuleVector v = mv_highest(ctx);
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<int> pick(0, rs.num_gens() - 1);
    std::uniform_int_distribution<int> md(-3, -1);
    for (int i = 0; i < 6; ++i) v = act(ctx, pick(rng), md(rng), v);
    for (const auto& [key, c] : v) {
        for (size_t i = 0; i < key.first.size(); ++i) {
            CHECK(key.first[i].second < 0);
            if (i)
                CHECK(std::pair<int, int>(key.first[i - 1].second, key.first[i - 1].first) <=
                      std::pair<int, int>(key.first[i].second, key.first[i].first));
        }
    }
}
