#include "threefield/fields.hpp"

#include <numeric>

namespace threefield {

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw InvalidInput("rational with zero denominator");
    if (den < 0) {
        num = checked_mul(num, -1);
        den = checked_mul(den, -1);
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(checked_add(checked_mul(num, o.den), checked_mul(o.num, den)),
                    checked_mul(den, o.den));
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(checked_mul(num, o.num), checked_mul(den, o.den));
}

int kronecker(std::int64_t a, std::int64_t n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int k = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) k = -k;
    }
    // factor out 2s of n; (a|2) is 0 for even a, +-1 by a mod 8 otherwise
    while (n % 2 == 0) {
        n /= 2;
        if (a % 2 == 0) return 0;
        std::int64_t a8 = ((a % 8) + 8) % 8;
        if (a8 == 3 || a8 == 5) k = -k;
    }
    a %= n;
    if (a < 0) a += n;
    // Jacobi loop with reciprocity
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            std::int64_t n8 = n % 8;
            if (n8 == 3 || n8 == 5) k = -k;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) k = -k;
        a %= n;
    }
    return n == 1 ? k : 0;
}

std::int64_t ideal_count_oracle(std::int64_t D, std::int64_t n) {
    if (D != -24 && D != -4 && D != 24)
        throw InvalidInput("ideal_count_oracle supports discriminants -24, -4, 24 only");
    if (n < 1) throw InvalidInput("ideal_count_oracle requires n >= 1");
    std::int64_t s = 0;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        s += kronecker(D, d);
        if (d != n / d) s += kronecker(D, n / d);
    }
    return s;
}

SturmBound sturm_bound(std::int64_t level) {
    if (level < 1) throw InvalidInput("sturm_bound requires level >= 1");
    Rational v(checked_mul(level, level), 12);
    std::int64_t m = level;
    for (std::int64_t p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        v = v * Rational(p * p - 1, p * p);
    }
    if (m > 1) v = v * Rational(m * m - 1, m * m);
    SturmBound out;
    out.value = v;
    out.integral = v.is_integral();
    out.bound = out.integral ? v.num : 0;
    return out;
}

Rational cusp_order(const std::map<std::int64_t, std::int64_t>& exponents, std::int64_t level,
                    std::int64_t d) {
    if (d < 1 || level % d != 0) throw InvalidInput("cusp_order requires d | level");
    Rational acc(0);
    for (const auto& [delta, r] : exponents) {
        if (delta < 1 || level % delta != 0)
            throw InvalidInput("eta quotient delta must divide the level");
        std::int64_t g = std::gcd(d, delta);
        Rational term(checked_mul(checked_mul(g, g), r),
                      checked_mul(checked_mul(std::gcd(d, level / d), d), delta));
        acc = acc + term;
    }
    return Rational(level, 24) * acc;
}

ModularityReport eta_quotient_checks(const std::map<std::int64_t, std::int64_t>& exponents,
                                     std::int64_t level) {
    ModularityReport rep;
    rep.level = level;
    std::int64_t rsum = 0;
    for (const auto& [delta, r] : exponents) {
        if (delta < 1 || level % delta != 0)
            throw InvalidInput("eta quotient delta must divide the level");
        rep.sum_delta_r = checked_add(rep.sum_delta_r, checked_mul(delta, r));
        rep.sum_level_over_delta_r =
            checked_add(rep.sum_level_over_delta_r, checked_mul(level / delta, r));
        rsum = checked_add(rsum, r);
    }
    rep.weight = Rational(rsum, 2);
    rep.weight_integral = rep.weight.is_integral();
    rep.sum_delta_ok = ((rep.sum_delta_r % 24) + 24) % 24 == 0;
    rep.sum_level_ok = ((rep.sum_level_over_delta_r % 24) + 24) % 24 == 0;
    bool all_positive = true;
    for (std::int64_t d = 1; d <= level; ++d) {
        if (level % d != 0) continue;
        Rational c = cusp_order(exponents, level, d);
        if (c.num <= 0) all_positive = false;
        rep.cusp_orders.emplace(d, c);
    }
    rep.vanishes_at_infinity = rep.sum_delta_r > 0;  // leading exponent sum(delta r)/24
    rep.cusp_form = all_positive;
    rep.sturm = sturm_bound(level);
    return rep;
}

#ifndef NDEBUG
namespace {
// Debug builds validate the embedded tables before anything can use them.
const bool tables_validated = [] {
    self_check_tables();
    return true;
}();
}  // namespace
#endif

void self_check_tables() {
    for (const FieldData* f : {&field_k1(), &field_k2(), &field_k3()}) {
        for (const auto& row : f->rows) {
            if (row.x1.den == 0 || row.y1.den == 0 || row.m % row.x1.den != 0 ||
                row.m % row.y1.den != 0)
                throw DataError("table row has x1/y1 denominators not dividing M");
            if (row.i != row.m / row.x1.den * row.x1.num)
                throw DataError(std::string("table row i != M*x1 for ") + row.label);
            if (row.j != row.m / row.y1.den * row.y1.num)
                throw DataError(std::string("table row j != M*y1 for ") + row.label);
            if (residue_of_form(row) != row.q_residue)
                throw DataError(std::string("table row norm residue mismatch for ") + row.label);
        }
    }
    if (field_k1().rows.size() != 32 || field_k2().rows.size() != 32 ||
        field_k3().rows.size() != 16)
        throw DataError("embedded tables have unexpected row counts");
}

}  // namespace threefield
