#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "threefield/fields.hpp"

using namespace threefield;

TEST_CASE("kronecker oracle point values") {
    CHECK(ideal_count_oracle(-4, 5) == 2);
    CHECK(ideal_count_oracle(-4, 1) == 1);
    CHECK(ideal_count_oracle(-24, 1) == 1);
    CHECK(ideal_count_oracle(24, 1) == 1);
    CHECK(ideal_count_oracle(24, 25) == 3);
    CHECK_THROWS_AS(ideal_count_oracle(5, 3), InvalidInput);
}

TEST_CASE("kronecker symbol behaves on edge arguments") {
    CHECK(kronecker(-24, 2) == 0);
    CHECK(kronecker(-4, 2) == 0);
    CHECK(kronecker(7, 2) == 1);    // 7 = -1 (mod 8)
    CHECK(kronecker(3, 2) == -1);
    CHECK(kronecker(1, 1) == 1);
    CHECK(kronecker(-1, 0) == 1);
    CHECK(kronecker(2, 0) == 0);
}

TEST_CASE("ideal counts are multiplicative on coprime arguments" * doctest::timeout(120)) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::int64_t> d(1, 2000);
    for (std::int64_t D : {-24, -4, 24}) {
        int done = 0;
        while (done < 1050) {
            std::int64_t m = d(rng), n = d(rng);
            if (std::gcd(m, n) != 1) continue;
            ++done;
            CHECK(ideal_count_oracle(D, m * n) ==
                  ideal_count_oracle(D, m) * ideal_count_oracle(D, n));
        }
    }
}

TEST_CASE("sturm bounds") {
    SturmBound s = sturm_bound(2304);
    CHECK(s.integral);
    CHECK(s.bound == 294912);

    SturmBound t = sturm_bound(24);
    CHECK(t.integral);
    CHECK(t.bound == 32);

    SturmBound u = sturm_bound(1);
    CHECK_FALSE(u.integral);
    CHECK(u.value == Rational(1, 12));
}

TEST_CASE("eta quotient checks for the Theta quotient") {
    std::map<std::int64_t, std::int64_t> r{{24, -3}, {48, 8}, {96, -3}};
    ModularityReport rep = eta_quotient_checks(r, 2304);
    CHECK(rep.weight == Rational(1));
    CHECK(rep.weight_integral);
    CHECK(rep.sum_delta_r == 24);
    CHECK(rep.sum_level_over_delta_r == 24);
    CHECK(rep.sum_delta_ok);
    CHECK(rep.sum_level_ok);
    CHECK(rep.vanishes_at_infinity);
    CHECK(rep.cusp_form);
    CHECK(rep.sturm.bound == 294912);

    // 2304 = 2^8 * 3^2 has 27 divisors; order 10 exactly at 16, 48, 144
    CHECK(rep.cusp_orders.size() == 27);
    std::set<std::int64_t> deep{16, 48, 144};
    for (const auto& [d, ord] : rep.cusp_orders) {
        if (deep.count(d)) CHECK(ord == Rational(10));
        else CHECK(ord == Rational(1));
    }
}

TEST_CASE("cusp order point values") {
    std::map<std::int64_t, std::int64_t> r{{24, -3}, {48, 8}, {96, -3}};
    CHECK(cusp_order(r, 2304, 16) == Rational(10));
    CHECK(cusp_order(r, 2304, 24) == Rational(1));
    CHECK(cusp_order(r, 2304, 2304) == Rational(1));
    CHECK_THROWS_AS(cusp_order(r, 2304, 5), InvalidInput);
}

TEST_CASE("eta checks flag failing quotients") {
    ModularityReport rep = eta_quotient_checks({{1, 2}}, 1);
    CHECK(rep.weight == Rational(1));
    CHECK(rep.sum_delta_r == 2);
    CHECK_FALSE(rep.sum_delta_ok);
    CHECK_FALSE(rep.sum_level_ok);

    ModularityReport half = eta_quotient_checks({{24, 1}}, 24);
    CHECK(half.weight == Rational(1, 2));
    CHECK_FALSE(half.weight_integral);
    CHECK(half.sum_delta_r == 24);
    CHECK(half.sum_delta_ok);

    CHECK_THROWS_AS(eta_quotient_checks({{5, 1}}, 24), InvalidInput);
}

TEST_CASE("embedded tables pass their self-check") {
    CHECK_NOTHROW(self_check_tables());
    CHECK(field_k1().rows.size() == 32);
    CHECK(field_k2().rows.size() == 32);
    CHECK(field_k3().rows.size() == 16);
    CHECK(field_k1().discriminant == -24);
    CHECK(field_k1().conductor_norm == 96);
    CHECK(field_k2().conductor_norm == 576);
    CHECK(field_k3().conductor_norm == 96);
    CHECK(field_k3().has_nontorsion_unit);
}

TEST_CASE("K1 residues partition into the four classes by coset") {
    // I and J rows carry residues 1 and 5; B and B' rows carry 7 and 11
    for (const auto& row : field_k1().rows) {
        if (row.coset == Coset::I || row.coset == Coset::J)
            CHECK((row.q_residue == 1 || row.q_residue == 5));
        else
            CHECK((row.q_residue == 7 || row.q_residue == 11));
    }
    for (const auto& row : field_k2().rows) CHECK((row.q_residue == 1 || row.q_residue == 5));
    for (const auto& row : field_k3().rows) CHECK((row.q_residue == 1 || row.q_residue == 5));
}

TEST_CASE("rational arithmetic is exact and normalized") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK_THROWS_AS(Rational(1, 0), InvalidInput);
}
