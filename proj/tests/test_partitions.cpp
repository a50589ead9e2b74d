#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "threefield/partitions.hpp"

using namespace threefield;

TEST_CASE("colored partition counts, worked values") {
    ColoredPartitionCount c7 = colored_partition_counts(7);
    CHECK(c7.r_e == 37);
    CHECK(c7.r_o == 38);
    CHECK(c7.r == -1);

    ColoredPartitionCount c0 = colored_partition_counts(0);
    CHECK(c0.r_e == 1);
    CHECK(c0.r_o == 0);
    CHECK(c0.r == 1);

    // n = 2: {1+1} in C(3,2) = 3 color pairs (even count of even parts),
    // {2} in 2 colors (odd count)
    ColoredPartitionCount c2 = colored_partition_counts(2);
    CHECK(c2.r_e == 3);
    CHECK(c2.r_o == 2);
    CHECK(c2.r == 1);

    CHECK_THROWS_AS(colored_partition_counts(-1), InvalidInput);
}

TEST_CASE("rho via the product expansion") {
    QSeries rho = rho_partition_series(7);
    std::vector<std::int64_t> got;
    for (int n = 0; n <= 7; ++n) got.push_back(rho.coeff(n));
    CHECK(got == std::vector<std::int64_t>{1, 3, 1, -2, 2, 1, -4, -1});
    CHECK(rho.coeff(0) == 1);
}

TEST_CASE("DP and product expansion agree; unsigned companion checks the parity split") {
    // within the 64-bit horizon the full (r_e, r_o) split is checkable
    const std::int64_t N = 200;
    auto table = colored_partition_table(N);
    QSeries rho = rho_partition_series(N);
    QSeries rho_abs = rho_partition_series_unsigned(N);
    for (std::int64_t n = 0; n <= N; ++n) {
        CHECK(rho.coeff(n) == table[static_cast<std::size_t>(n)].r);
        CHECK(rho_abs.coeff(n) ==
              table[static_cast<std::size_t>(n)].r_e + table[static_cast<std::size_t>(n)].r_o);
        CHECK(std::abs(rho.coeff(n)) <= rho_abs.coeff(n));
    }
}

TEST_CASE("the wide DP tracks r(n) past the point where the split counts overflow") {
    const std::int64_t N = 600;
    QSeries dp = rho_colored_count_series(N);
    QSeries rho = rho_partition_series(N);
    std::int64_t where = -1;
    CHECK_MESSAGE(qs_equal_upto(dp, rho, N, &where), "first mismatch at ", where);
    // the individual counts no longer fit by now
    CHECK_THROWS_AS(colored_partition_table(N), ArithmeticOverflow);
}

TEST_CASE("sigma hypergeometric, both conventions") {
    QSeries tri = sigma_hypergeometric(10, SigmaConvention::TriangularExponent);
    std::vector<std::int64_t> got;
    for (int n = 0; n <= 10; ++n) got.push_back(tri.coeff(n));
    CHECK(got == std::vector<std::int64_t>{1, 1, -1, 2, -2, 1, 0, 1, -2, 0, 2});

    // the binomial convention doubles the constant term (terms n=0 and n=1
    // both start at q^0), which is what rules it out against the lattice route
    QSeries bin = sigma_hypergeometric(10, SigmaConvention::BinomialExponent);
    CHECK(bin.coeff(0) == 2);
}
