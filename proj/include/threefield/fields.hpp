#ifndef THREEFIELD_FIELDS_HPP
#define THREEFIELD_FIELDS_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "threefield/quadform.hpp"

namespace threefield {

// Exact rational arithmetic on int64 numerator/denominator, normalized,
// overflow-checked. Only needs to carry cusp orders and index formulas.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1);

    Rational operator+(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool is_integral() const { return den == 1; }
};

// Kronecker symbol (a|n), full 2-adic and sign conventions.
int kronecker(std::int64_t a, std::int64_t n);

// Number of integral ideals of norm n in the quadratic field of fundamental
// discriminant D: sum over d|n of (D|d). Serves as the table-independent
// oracle for the embedded ray-class data.
std::int64_t ideal_count_oracle(std::int64_t D, std::int64_t n);

struct SturmBound {
    Rational value;        // (level^2/12) * prod_{p | level} (1 - 1/p^2)
    bool integral;
    std::int64_t bound;    // meaningful when integral
};

SturmBound sturm_bound(std::int64_t level);

struct ModularityReport {
    std::int64_t level = 0;
    Rational weight;
    std::int64_t sum_delta_r = 0;
    std::int64_t sum_level_over_delta_r = 0;
    bool weight_integral = false;
    bool sum_delta_ok = false;        // sum_delta_r = 0 (mod 24)
    bool sum_level_ok = false;        // sum_level_over_delta_r = 0 (mod 24)
    std::map<std::int64_t, Rational> cusp_orders;  // one entry per divisor of level
    bool vanishes_at_infinity = false;
    bool cusp_form = false;           // all cusp orders > 0
    SturmBound sturm;
};

// Order of vanishing indicator of prod eta(delta tau)^{r_delta} at the cusp
// associated with d | level, in the normalization (level/24) *
// sum_delta gcd(d,delta)^2 r_delta / (gcd(d, level/d) d delta).
Rational cusp_order(const std::map<std::int64_t, std::int64_t>& exponents, std::int64_t level,
                    std::int64_t d);

// Weight, the two mod-24 congruence sums, all cusp orders, and the Sturm
// bound for an eta quotient at the given level. Every delta must divide
// the level.
ModularityReport eta_quotient_checks(const std::map<std::int64_t, std::int64_t>& exponents,
                                     std::int64_t level);

struct FieldData {
    FieldId field_id;
    std::int64_t discriminant;      // -24, -4, 24
    std::int64_t conductor_norm;    // 96, 576, 96
    bool conductor_has_infinite_part;
    std::int64_t unit_count;        // roots of unity
    bool has_nontorsion_unit;
    std::vector<RayClassRow> rows;
};

const FieldData& field_k1();
const FieldData& field_k2();
const FieldData& field_k3();

// Verifies every embedded row: i = M*x1, j = M*y1, and the form value at
// (i, j) reduces to the printed norm residue. Throws DataError on any
// transcription slip.
void self_check_tables();

}  // namespace threefield

#endif
