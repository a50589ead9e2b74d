#ifndef THREEFIELD_PARTITIONS_HPP
#define THREEFIELD_PARTITIONS_HPP

#include <cstdint>
#include <vector>

#include "threefield/qseries.hpp"

namespace threefield {

// Counts of partitions of n into distinct 3-colored odd parts together with
// distinct 2-colored even parts, split by the parity of the number of even
// parts. "Distinct c-colored" means each (part, color) pair occurs at most
// once, so a part size k contributes C(c, m) colorings when used m times.
struct ColoredPartitionCount {
    std::int64_t n = 0;
    std::int64_t r_e = 0;  // even number of even parts
    std::int64_t r_o = 0;  // odd number of even parts
    std::int64_t r = 0;    // r_e - r_o
};

ColoredPartitionCount colored_partition_counts(std::int64_t n);

// All counts for 0..N in one DP pass. The counts r_e, r_o grow like
// exp(pi sqrt(5n/6)) and stop fitting 64 bits near n = 225; past that the
// conversion reports overflow rather than wrapping.
std::vector<ColoredPartitionCount> colored_partition_table(std::int64_t N);

// The signed count r(n) = r_e(n) - r_o(n) for all n <= N, as a q-series.
// Runs the same parity-split DP in 256-bit arithmetic, so the difference
// stays exact far beyond the point where the individual counts leave the
// 64-bit range. This is the combinatorial route to rho.
QSeries rho_colored_count_series(std::int64_t N);

// rho(q) = (-q;q^2)^3 (q^2;q^2)^2, exact to q^N. Coefficient n equals
// colored_partition_counts(n).r; the DP above is the independent check.
QSeries rho_partition_series(std::int64_t N);

// Unsigned companion product (-q;q^2)^3 (-q^2;q^2)^2, whose coefficients
// are r_e + r_o.
QSeries rho_partition_series_unsigned(std::int64_t N);

enum class SigmaConvention {
    TriangularExponent,  // q^(n(n+1)/2), the convention the lattice route matches
    BinomialExponent,    // q^(C(n,2)) as sometimes printed
};

// sigma(q) = sum_{n>=0} q^(e(n)) / ((1+q)(1+q^2)...(1+q^n)), exact to q^N.
QSeries sigma_hypergeometric(std::int64_t N, SigmaConvention convention);

}  // namespace threefield

#endif
