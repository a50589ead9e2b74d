#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "threefield/fields.hpp"
#include "threefield/quadform.hpp"

using namespace threefield;

TEST_CASE("theta_definite point examples") {
    // (x^2+6y^2)/6 with x=0, y=1 (mod 24): the point (0,1) alone reaches 1
    ResiduePairSet base({{24, 0, 24, 1, 1, +1}});
    QSeries t = theta_definite(form_k1_principal(), base, 1);
    CHECK(t.coeff(1) == 1);
    CHECK(t.coeff(0) == 0);

    // x=12, y=5 (mod 24): minimum at (12,5), value (144+150)/6 = 49;
    // (-12,5) is in the same class since -12 = 12 (mod 24)
    ResiduePairSet off({{24, 12, 24, 5, 1, +1}});
    QSeries t2 = theta_definite(form_k1_principal(), off, 200);
    for (std::int64_t n = 0; n < 49; ++n) CHECK(t2.coeff(n) == 0);
    CHECK(t2.coeff(49) == 2);
}

TEST_CASE("theta_definite empty set") {
    QSeries t = theta_definite(form_k1_principal(), ResiduePairSet(), 50);
    CHECK(t.is_zero());
}

TEST_CASE("single congruence class stays on one residue class mod 24") {
    ResiduePairSet off({{24, 12, 24, 5, 1, +1}});
    QSeries t = theta_definite(form_k1_principal(), off, 2000);
    for (std::int64_t n = 0; n <= 2000; ++n)
        if (t.coeff(n) != 0) CHECK(n % 24 == 1);
}

TEST_CASE("form divisibility is enforced against the residue set") {
    // x=1, y=1 (mod 24) gives numerator 7, not divisible by 6
    ResiduePairSet bad({{24, 1, 24, 1, 1, +1}});
    CHECK_THROWS_AS(theta_definite(form_k1_principal(), bad, 10), DataError);
}

TEST_CASE("residue set overlap detection") {
    CHECK_THROWS_AS(ResiduePairSet({{24, 1, 24, 1, 1, +1}, {24, 1, 24, 1, 1, -1}}), DataError);
    // overlap through different moduli: x=0 (2) meets x=2 (4)
    CHECK_THROWS_AS(ResiduePairSet({{2, 0, 1, 0, 1, +1}, {4, 2, 1, 0, 1, +1}}), DataError);
    CHECK_NOTHROW(ResiduePairSet({{2, 0, 1, 0, 1, +1}, {4, 1, 1, 0, 1, +1}}));
    CHECK_THROWS_AS(ResiduePairSet({{24, 25, 24, 0, 1, +1}}), InvalidInput);
}

TEST_CASE("residue_of_form matches printed norm residues") {
    const auto& k1 = field_k1();
    CHECK(residue_of_form(k1.rows[0]) == 1);   // [O]
    CHECK(residue_of_form(k1.rows[4]) == 5);   // [(5, 2+v)], i=3, j=22
    const auto& k2 = field_k2();
    CHECK(residue_of_form(k2.rows[1]) == 1);   // [(13)], i=13
}

TEST_CASE("theta_from_row basics") {
    const auto& k1 = field_k1();
    QSeries t0 = theta_from_row(k1.rows[0], 60);
    CHECK(t0.coeff(1) == 1);
    for (std::int64_t n = 0; n < 1; ++n) CHECK(t0.coeff(n) == 0);

    QSeries t1 = theta_from_row(k1.rows[1], 60);  // i=12, j=5
    for (std::int64_t n = 0; n < 49; ++n) CHECK(t1.coeff(n) == 0);

    const auto& k2 = field_k2();
    QSeries g = theta_from_row(k2.rows[0], 10);  // i=1, j=0
    CHECK(g.coeff(1) == 1);

    CHECK_THROWS_AS(theta_from_row(field_k3().rows[0], 10), InvalidInput);
}

TEST_CASE("K1 rows: support on exactly the printed residue, coefficients nonnegative") {
    for (const auto& row : field_k1().rows) {
        QSeries t = theta_from_row(row, 2000);
        for (std::int64_t n = 0; n <= 2000; ++n) {
            std::int64_t c = t.coeff(n);
            CHECK(c >= 0);
            if (c != 0) CHECK(n % 24 == row.q_residue);
        }
    }
}

TEST_CASE("K2 rows: support stays on the printed residue in {1, 5}") {
    for (const auto& row : field_k2().rows) {
        CHECK((row.q_residue == 1 || row.q_residue == 5));
        QSeries t = theta_from_row(row, 2000);
        for (std::int64_t n = 0; n <= 2000; ++n)
            if (t.coeff(n) != 0) CHECK(n % 24 == row.q_residue);
    }
}

TEST_CASE("theta_definite handles a cross term: x^2 + xy + y^2 against brute force") {
    QuadForm hex{1, 1, 1, 1};
    ResiduePairSet all({{1, 0, 1, 0, 1, +1}});
    const std::int64_t N = 300;
    QSeries t = theta_definite(hex, all, N);
    std::vector<std::int64_t> brute(static_cast<std::size_t>(N + 1), 0);
    for (std::int64_t x = -40; x <= 40; ++x)
        for (std::int64_t y = -40; y <= 40; ++y) {
            std::int64_t v = x * x + x * y + y * y;
            if (v <= N) ++brute[static_cast<std::size_t>(v)];
        }
    for (std::int64_t n = 0; n <= N; ++n) CHECK(t.coeff(n) == brute[static_cast<std::size_t>(n)]);
}

TEST_CASE("B rows pair with B' rows sharing the theta series") {
    const auto& rows = field_k1().rows;
    std::vector<const RayClassRow*> b, bp;
    for (const auto& r : rows) {
        if (r.coset == Coset::B) b.push_back(&r);
        if (r.coset == Coset::Bp) bp.push_back(&r);
    }
    REQUIRE(b.size() == 8);
    REQUIRE(bp.size() == 8);
    for (const auto* rb : b) {
        QSeries tb = theta_from_row(*rb, 2000);
        bool paired = false;
        for (const auto* rp : bp) {
            if (rp->principal_form != rb->principal_form) continue;
            bool residue_match = (rp->i % 24 == rb->i % 24 || (24 - rp->i) % 24 == rb->i % 24) &&
                                 (rp->j % 24 == rb->j % 24 || (24 - rp->j) % 24 == rb->j % 24);
            if (!residue_match) continue;
            if (qs_equal_upto(tb, theta_from_row(*rp, 2000), 2000)) {
                paired = true;
                break;
            }
        }
        CHECK_MESSAGE(paired, rb->label);
    }
}

TEST_CASE("all 32 K1 rows partition the ideals counted by the oracle") {
    const std::int64_t N = 500;
    QSeries total = QSeries::zero(N);
    for (const auto& row : field_k1().rows) total = qs_add(total, theta_from_row(row, N));
    for (std::int64_t n = 1; n <= N; ++n) {
        if (std::gcd(n, std::int64_t{6}) != 1) continue;
        CHECK_MESSAGE(total.coeff(n) == ideal_count_oracle(-24, n), "n = ", n);
    }
}

TEST_CASE("definite guard") {
    CHECK_THROWS_AS(theta_definite(QuadForm{1, 0, -6, 6}, ResiduePairSet(), 10), InvalidInput);
}
