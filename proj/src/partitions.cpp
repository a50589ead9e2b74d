#include "threefield/partitions.hpp"

#include <array>
#include <limits>

namespace threefield {

namespace {

// Unsigned 256-bit accumulator for the partition DP. The parity-split
// counts overflow int64 near n = 225 while their difference stays tiny,
// so the DP runs wide and narrows at the end.
struct U256 {
    std::array<std::uint64_t, 4> w{0, 0, 0, 0};

    void add_scaled(const U256& o, std::uint64_t k) {
        unsigned __int128 carry = 0;
        for (int i = 0; i < 4; ++i) {
            unsigned __int128 s =
                static_cast<unsigned __int128>(o.w[i]) * k + w[i] + carry;
            w[i] = static_cast<std::uint64_t>(s);
            carry = s >> 64;
        }
        if (carry != 0) throw ArithmeticOverflow("partition count exceeds 256 bits");
    }

    bool operator>=(const U256& o) const {
        for (int i = 3; i >= 0; --i) {
            if (w[i] != o.w[i]) return w[i] > o.w[i];
        }
        return true;
    }

    // this - o, requires *this >= o
    U256 minus(const U256& o) const {
        U256 r;
        unsigned __int128 borrow = 0;
        for (int i = 0; i < 4; ++i) {
            unsigned __int128 lhs = w[i];
            unsigned __int128 rhs = static_cast<unsigned __int128>(o.w[i]) + borrow;
            if (lhs >= rhs) {
                r.w[i] = static_cast<std::uint64_t>(lhs - rhs);
                borrow = 0;
            } else {
                r.w[i] = static_cast<std::uint64_t>((lhs + (static_cast<unsigned __int128>(1) << 64)) - rhs);
                borrow = 1;
            }
        }
        return r;
    }

    bool fits_int64() const {
        return w[1] == 0 && w[2] == 0 && w[3] == 0 &&
               w[0] <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());
    }

    std::int64_t to_int64() const {
        if (!fits_int64()) throw ArithmeticOverflow("partition count exceeds 64 bits");
        return static_cast<std::int64_t>(w[0]);
    }
};

struct ParityTables {
    std::vector<U256> even;
    std::vector<U256> odd;
};

// dp over part sizes: odd size used m in 0..3 times weighted C(3,m), even
// size m in 0..2 times weighted C(2,m), parity of the even-part count
// tracked in the table split.
ParityTables run_dp(std::int64_t N) {
    if (N < 0) throw InvalidInput("partition DP requires N >= 0");
    std::size_t len = static_cast<std::size_t>(N + 1);
    ParityTables t;
    t.even.assign(len, U256{});
    t.odd.assign(len, U256{});
    t.even[0].w[0] = 1;
    std::vector<U256> ne(len), no(len);
    for (std::int64_t k = 1; k <= N; ++k) {
        ne = t.even;
        no = t.odd;
        if (k % 2 == 1) {
            static constexpr std::uint64_t choose3[4] = {1, 3, 3, 1};
            for (int m = 1; m <= 3; ++m) {
                std::int64_t mk = m * k;
                if (mk > N) break;
                for (std::int64_t s = mk; s <= N; ++s) {
                    std::size_t i = static_cast<std::size_t>(s);
                    std::size_t p = static_cast<std::size_t>(s - mk);
                    ne[i].add_scaled(t.even[p], choose3[m]);
                    no[i].add_scaled(t.odd[p], choose3[m]);
                }
            }
        } else {
            static constexpr std::uint64_t choose2[3] = {1, 2, 1};
            for (int m = 1; m <= 2; ++m) {
                std::int64_t mk = m * k;
                if (mk > N) break;
                bool flip = m % 2 == 1;
                for (std::int64_t s = mk; s <= N; ++s) {
                    std::size_t i = static_cast<std::size_t>(s);
                    std::size_t p = static_cast<std::size_t>(s - mk);
                    ne[i].add_scaled(flip ? t.odd[p] : t.even[p], choose2[m]);
                    no[i].add_scaled(flip ? t.even[p] : t.odd[p], choose2[m]);
                }
            }
        }
        t.even.swap(ne);
        t.odd.swap(no);
    }
    return t;
}

}  // namespace

std::vector<ColoredPartitionCount> colored_partition_table(std::int64_t N) {
    ParityTables t = run_dp(N);
    std::vector<ColoredPartitionCount> out(static_cast<std::size_t>(N + 1));
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i].n = static_cast<std::int64_t>(i);
        out[i].r_e = t.even[i].to_int64();
        out[i].r_o = t.odd[i].to_int64();
        out[i].r = checked_add(out[i].r_e, -out[i].r_o);
    }
    return out;
}

ColoredPartitionCount colored_partition_counts(std::int64_t n) {
    if (n < 0) throw InvalidInput("colored_partition_counts requires n >= 0");
    return colored_partition_table(n).back();
}

QSeries rho_colored_count_series(std::int64_t N) {
    ParityTables t = run_dp(N);
    std::vector<std::int64_t> c(static_cast<std::size_t>(N + 1), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (t.even[i] >= t.odd[i]) c[i] = t.even[i].minus(t.odd[i]).to_int64();
        else c[i] = -t.odd[i].minus(t.even[i]).to_int64();
    }
    return QSeries(0, N, std::move(c));
}

QSeries rho_partition_series(std::int64_t N) {
    return qpochhammer_product({{+1, 1, 2, 3}, {-1, 2, 2, 2}}, N);
}

QSeries rho_partition_series_unsigned(std::int64_t N) {
    return qpochhammer_product({{+1, 1, 2, 3}, {+1, 2, 2, 2}}, N);
}

QSeries sigma_hypergeometric(std::int64_t N, SigmaConvention convention) {
    if (N < 0) return QSeries::zero(N);
    auto exponent = [convention](std::int64_t n) {
        return convention == SigmaConvention::TriangularExponent ? n * (n + 1) / 2
                                                                 : n * (n - 1) / 2;
    };
    QSeries acc = QSeries::zero(N);
    QSeries denom_inv = QSeries::one(N);  // 1 / prod_{j<=n} (1 + q^j)
    for (std::int64_t n = 0;; ++n) {
        if (n > 0) {
            // divide by (1 + q^n)
            std::vector<std::int64_t> c(static_cast<std::size_t>(N + 1), 0);
            for (std::size_t k = 0; k < denom_inv.coeffs().size(); ++k) c[k] = denom_inv.coeffs()[k];
            for (std::int64_t m = n; m <= N; ++m)
                c[static_cast<std::size_t>(m)] =
                    checked_add(c[static_cast<std::size_t>(m)], -c[static_cast<std::size_t>(m - n)]);
            denom_inv = QSeries(0, N, std::move(c));
        }
        std::int64_t e = exponent(n);
        // every later term starts at a strictly larger exponent once e > N
        if (e > N) break;
        acc = qs_add(acc, qs_shift(denom_inv, e));
    }
    return acc;
}

}  // namespace threefield
