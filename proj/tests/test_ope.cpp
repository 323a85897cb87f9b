#include <catch2/catch_amalgamated.hpp>

#include "kmv/io.hpp"
#include "kmv/walg_ope.hpp"

using namespace kmv;

namespace {

OpeTable load_table() { return OpeTable::load(data_dir().string()); }

} // namespace

TEST_CASE("operator product table loads every declared pair") {
    OpeTable t = load_table();
    for (auto [l, r] : std::vector<std::pair<std::string, std::string>>{
             {"L", "L"}, {"L", "J"}, {"L", "W"}, {"L", "G+"}, {"L", "G-"},
             {"J", "J"}, {"J", "G+"}, {"J", "G-"}, {"W", "G+"}, {"W", "G-"},
             {"G+", "G-"}, {"W", "W"}})
        CHECK_NOTHROW(t.at(l, r));
    CHECK_THROWS_AS(t.at("L", "X"), DataError);
}

TEST_CASE("coefficient evaluation at chosen levels") {
    OpeTable t = load_table();
    CHECK(t.coefficient("L", "L", 4, "1", rat(-5, 2)) == rat(1, 2));
    CHECK(t.coefficient("L", "L", 4, "1", rat(0)) == rat(-17));
    CHECK(t.coefficient("J", "J", 2, "1", rat(0)) == rat(2));
    CHECK(t.coefficient("L", "W", 2, "W", rat(0)) == rat(3));
    // absent fields contribute zero
    CHECK(t.coefficient("L", "L", 4, "W", rat(0)) == rat(0));
    CHECK(t.coefficient("L", "L", 3, "1", rat(0)) == rat(0));
}

TEST_CASE("evaluation at a pole of the level parameter is an error") {
    OpeTable t = load_table();
    CHECK_THROWS_AS(t.coefficient("L", "L", 4, "1", rat(-4)), EvalError);
}

TEST_CASE("collapse report at the two levels of interest") {
    OpeTable t = load_table();
    CollapseReport at_target = collapse_check(t, rat(-5, 2));
    CHECK(at_target.p4_vanishes);
    CHECK(at_target.p3_vanishes);
    CHECK(at_target.p2_is_combination);
    CHECK(at_target.central_is_half);
    CHECK(at_target.ww_vanishes);
    CHECK(at_target.collapsed());
    CHECK(at_target.charged_w == rat(-1, 2));

    CollapseReport generic = collapse_check(t, rat(0));
    CHECK_FALSE(generic.p4_vanishes);
    CHECK_FALSE(generic.p3_vanishes);
    CHECK_FALSE(generic.p2_is_combination);
    CHECK_FALSE(generic.central_is_half);
    CHECK_FALSE(generic.ww_vanishes);
    CHECK_FALSE(generic.collapsed());
}

TEST_CASE("reduced top data at the working level") {
    RootSystem rs(4);
    Rational k = rat(-5, 2);
    // delta(n w1) = n(n+1)/4 with charge 3n/4, checked at n = 2
    ReducedTopData d = reduced_top_data(rs, weight_of_ints({2, 0, 0}), k);
    CHECK(d.delta.constant_value() == rat(3, 2));
    CHECK(d.j0.constant_value() == rat(3, 2));
    // delta(n w3) = n(n-1)/4 with charge n/4, checked at n = 3
    ReducedTopData d3 = reduced_top_data(rs, weight_of_ints({0, 0, 3}), k);
    CHECK(d3.delta.constant_value() == rat(3, 2));
    CHECK(d3.j0.constant_value() == rat(3, 4));
}
