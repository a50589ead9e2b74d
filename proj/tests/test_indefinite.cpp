#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "threefield/indefinite.hpp"

using namespace threefield;

namespace {

std::int64_t form_x2_6y2(IntPair p) { return p.first * p.first - 6 * p.second * p.second; }
std::int64_t form_2x2_3y2(IntPair p) { return 2 * p.first * p.first - 3 * p.second * p.second; }

IntPair random_pair(std::mt19937_64& rng, std::int64_t bound) {
    std::uniform_int_distribution<std::int64_t> d(-bound, bound);
    IntPair p{d(rng), d(rng)};
    while (p.first == 0 && p.second == 0) p = {d(rng), d(rng)};
    return p;
}

}  // namespace

TEST_CASE("canonicalize fixed points and walks") {
    const UnitAction u = UnitAction::pell_x2_6y2();
    CHECK(canonicalize({1, 0}, u) == IntPair{1, 0});
    // (5,2) and (49,20) sit on the orbit of (1,0)
    CHECK(canonicalize({5, 2}, u) == IntPair{1, 0});
    CHECK(canonicalize({49, 20}, u) == IntPair{1, 0});
    CHECK(u.apply({5, 2}) == IntPair{49, 20});
    CHECK(u.inverse().apply({5, 2}) == IntPair{1, 0});

    CHECK_THROWS_AS(canonicalize({0, 0}, u), InvalidInput);
}

TEST_CASE("canonicalize tie-breaking") {
    const UnitAction u = UnitAction::pell_x2_6y2();
    // u maps (-3,1) to (-3,-1): both attain the minimal |y|, same x, pick y > 0
    CHECK(u.apply({-3, 1}) == IntPair{-3, -1});
    CHECK(canonicalize({-3, 1}, u) == IntPair{-3, 1});
    CHECK(canonicalize({-3, -1}, u) == IntPair{-3, 1});
    // u maps (-2,1) to (2,1): tie broken by larger x
    CHECK(u.apply({-2, 1}) == IntPair{2, 1});
    CHECK(canonicalize({-2, 1}, u) == IntPair{2, 1});
    CHECK(canonicalize({2, 1}, u) == IntPair{2, 1});
}

TEST_CASE("canonicalize is idempotent and orbit-constant" * doctest::timeout(120)) {
    std::mt19937_64 rng(2024);
    for (const UnitAction& u : {UnitAction::pell_x2_6y2(), UnitAction::pell_2x2_3y2()}) {
        for (CanonicalRule rule : {CanonicalRule::MinAbsY, CanonicalRule::MinAbsX}) {
            for (int iter = 0; iter < 1100; ++iter) {
                IntPair p = random_pair(rng, 1'000'000);
                IntPair c = canonicalize(p, u, rule);
                CHECK(canonicalize(c, u, rule) == c);
                CHECK(canonicalize(u.apply(p), u, rule) == c);
                CHECK(canonicalize(u.inverse().apply(p), u, rule) == c);
            }
        }
    }
}

TEST_CASE("unit actions preserve their forms" * doctest::timeout(60)) {
    std::mt19937_64 rng(77);
    const UnitAction u1 = UnitAction::pell_x2_6y2();
    const UnitAction u2 = UnitAction::pell_2x2_3y2();
    CHECK(u1.m00 * u1.m11 - u1.m01 * u1.m10 == 1);
    CHECK(u2.m00 * u2.m11 - u2.m01 * u2.m10 == 1);
    for (int iter = 0; iter < 1200; ++iter) {
        IntPair p = random_pair(rng, 1'000'000);
        CHECK(form_x2_6y2(u1.apply(p)) == form_x2_6y2(p));
        CHECK(-form_x2_6y2(u1.apply(p)) == -form_x2_6y2(p));  // 6y^2 - x^2
        CHECK(form_2x2_3y2(u2.apply(p)) == form_2x2_3y2(p));
    }
}

TEST_CASE("wedge boundaries have no lattice points") {
    for (std::int64_t x = 1; x <= 1000; ++x) {
        for (std::int64_t y = 1; y <= 1000; ++y) {
            CHECK(2 * x * x != 3 * y * y);
            CHECK(x * x != 6 * y * y);
        }
    }
}

TEST_CASE("unit action maps each wedge into itself" * doctest::timeout(60)) {
    std::mt19937_64 rng(99);
    Wedge pos5{1, 6, Wedge::Dominant::X, Wedge::Sign::Positive};
    Wedge pos1{4, 6, Wedge::Dominant::X, Wedge::Sign::Positive};
    Wedge upper{1, 6, Wedge::Dominant::Y, Wedge::Sign::Positive};
    const UnitAction u1 = UnitAction::pell_x2_6y2();
    const UnitAction u2 = UnitAction::pell_2x2_3y2();
    int hits = 0;
    for (int iter = 0; iter < 20000 || hits < 1000; ++iter) {
        IntPair p = random_pair(rng, 2000);
        if (pos5.contains(p.first, p.second)) {
            ++hits;
            IntPair q = u1.apply(p), r = u1.inverse().apply(p);
            CHECK(pos5.contains(q.first, q.second));
            CHECK(pos5.contains(r.first, r.second));
        }
        if (pos1.contains(p.first, p.second)) {
            IntPair q = u2.apply(p), r = u2.inverse().apply(p);
            CHECK(pos1.contains(q.first, q.second));
            CHECK(pos1.contains(r.first, r.second));
        }
        if (upper.contains(p.first, p.second)) {
            IntPair q = u1.apply(p), r = u1.inverse().apply(p);
            CHECK(upper.contains(q.first, q.second));
            CHECK(upper.contains(r.first, r.second));
        }
        if (iter > 200000) break;
    }
    CHECK(hits >= 1000);
}

TEST_CASE("empty set gives the zero series") {
    Wedge pos{1, 6, Wedge::Dominant::X, Wedge::Sign::Positive};
    QSeries t = theta_indefinite(QuadForm{1, 0, -6, 1}, ResiduePairSet(), pos, std::nullopt,
                                 UnitAction::pell_x2_6y2(), 100);
    CHECK(t.is_zero());
}

TEST_CASE("indefinite guard") {
    Wedge pos{1, 6, Wedge::Dominant::X, Wedge::Sign::Positive};
    CHECK_THROWS_AS(theta_indefinite(QuadForm{1, 0, 6, 6}, ResiduePairSet(), pos, std::nullopt,
                                     UnitAction::pell_x2_6y2(), 10),
                    InvalidInput);
}

TEST_CASE("sigma and sigma* leading coefficients") {
    auto [sigma, sigmastar] = sigma_pair_bqf(10);
    std::vector<std::int64_t> s, ss;
    for (int n = 0; n <= 10; ++n) {
        s.push_back(sigma.coeff(n));
        ss.push_back(sigmastar.coeff(n));
    }
    // sigma = 1 + q - q^2 + 2q^3 - 2q^4 + q^5 + q^7 - 2q^8 + 2q^10 ...
    CHECK(s == std::vector<std::int64_t>{1, 1, -1, 2, -2, 1, 0, 1, -2, 0, 2});
    // sigma* coefficients are the even numbers 2S*(n)
    CHECK(ss == std::vector<std::int64_t>{0, -2, -2, -2, 0, 0, 0, 2, 2, 0, 2});
}

TEST_CASE("sigma* coefficients are even") {
    auto [sigma, sigmastar] = sigma_pair_bqf(120);
    for (std::int64_t n = 0; n <= 120; ++n) CHECK(sigmastar.coeff(n) % 2 == 0);
}

TEST_CASE("orbit counts do not depend on the canonicalization rule") {
    auto [s1, ss1] = sigma_pair_bqf(160, CanonicalRule::MinAbsY);
    auto [s2, ss2] = sigma_pair_bqf(160, CanonicalRule::MinAbsX);
    CHECK(qs_equal_upto(s1, s2, 160));
    CHECK(qs_equal_upto(ss1, ss2, 160));
}
