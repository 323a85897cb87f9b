#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "kmv/rational.hpp"

using kmv::BigInt;
using kmv::rat;
using kmv::Rational;

namespace {

// Unreduced fraction oracle: arithmetic without normalization, equality by
// cross-multiplication.
struct Frac {
    BigInt n, d;
};

Frac fadd(Frac a, Frac b) { return {a.n * b.d + b.n * a.d, a.d * b.d}; }
Frac fsub(Frac a, Frac b) { return {a.n * b.d - b.n * a.d, a.d * b.d}; }
Frac fmul(Frac a, Frac b) { return {a.n * b.n, a.d * b.d}; }
Frac fdiv(Frac a, Frac b) { return {a.n * b.d, a.d * b.n}; }

bool same(const Rational& r, const Frac& f) { return r.num() * f.d == f.n * r.den(); }

} // namespace

TEST_CASE("rational arithmetic agrees with the unreduced oracle") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> num(-40, 40);
    std::uniform_int_distribution<long long> den(1, 24);
    for (int trial = 0; trial < 300; ++trial) {
        long long an = num(rng), ad = den(rng), bn = num(rng), bd = den(rng);
        Rational a = rat(an, ad), b = rat(bn, bd);
        Frac fa{BigInt(an), BigInt(ad)}, fb{BigInt(bn), BigInt(bd)};
        CHECK(same(a + b, fadd(fa, fb)));
        CHECK(same(a - b, fsub(fa, fb)));
        CHECK(same(a * b, fmul(fa, fb)));
        if (bn != 0) CHECK(same(a / b, fdiv(fa, fb)));
        CHECK((a < b) == (fa.n * fb.d < fb.n * fa.d));
        CHECK((a == b) == (fa.n * fb.d == fb.n * fa.d));
    }
}

TEST_CASE("rationals are stored normalized") {
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat(2, 4).num() == 1);
    CHECK(rat(2, 4).den() == 2);
    CHECK(rat(3, -6) == rat(-1, 2));
    CHECK(rat(3, -6).den() == 2);
    CHECK(rat(0, 17).den() == 1);
    CHECK(rat(-5).str() == "-5");
    CHECK(rat(-5, 2).str() == "-5/2");
}

TEST_CASE("rational string round trip") {
    for (const char* s : {"0", "1", "-1", "5/3", "-7/2", "98765432123456789/3"}) {
        Rational r = Rational::from_string(s);
        CHECK(r.str() == s);
    }
}

TEST_CASE("rational error cases") {
    CHECK_THROWS_AS(rat(1, 0), kmv::UsageError);
    CHECK_THROWS_AS(rat(1, 2) / rat(0), kmv::EvalError);
}

TEST_CASE("rational predicates") {
    CHECK(rat(0).is_zero());
    CHECK(rat(1).is_one());
    CHECK(rat(4, 2).is_integer());
    CHECK_FALSE(rat(1, 2).is_integer());
    CHECK(rat(3).is_nonneg_integer());
    CHECK_FALSE(rat(-3).is_nonneg_integer());
    CHECK(rat(-7, 3).sign() == -1);
    CHECK(rat(0).sign() == 0);
    CHECK(Rational::gcd(rat(6), rat(4)) == rat(2));
    CHECK(Rational::gcd(rat(1, 2), rat(1, 3)) == rat(1, 6));
}
