#ifndef THREEFIELD_INDEFINITE_HPP
#define THREEFIELD_INDEFINITE_HPP

#include <cstdint>
#include <optional>
#include <utility>

#include "threefield/quadform.hpp"
#include "threefield/qseries.hpp"

namespace threefield {

using IntPair = std::pair<std::int64_t, std::int64_t>;

// Integer 2x2 matrix with determinant 1 acting on column vectors; the
// automorph of an indefinite form induced by the fundamental unit
// 5 + 2*sqrt(6) on the relevant lattice.
struct UnitAction {
    std::int64_t m00, m01, m10, m11;

    IntPair apply(IntPair p) const {
        return {checked_add(checked_mul(m00, p.first), checked_mul(m01, p.second)),
                checked_add(checked_mul(m10, p.first), checked_mul(m11, p.second))};
    }

    UnitAction inverse() const { return {m11, -m01, -m10, m00}; }

    // Multiplication by 5 + 2*sqrt(6) on x + y*sqrt(6); preserves x^2 - 6y^2.
    static UnitAction pell_x2_6y2() { return {5, 12, 2, 5}; }

    // Multiplication by 5 + 2*sqrt(6) on 2x + y*sqrt(6); preserves 2x^2 - 3y^2.
    static UnitAction pell_2x2_3y2() { return {5, 6, 4, 5}; }
};

// Which orbit element canonicalize() picks.
enum class CanonicalRule { MinAbsY, MinAbsX };

// The unique distinguished element of the <u>-orbit of p. For MinAbsY the
// element of minimal |y|, ties broken by larger x then larger y; MinAbsX is
// the mirrored rule. Idempotent and constant on orbits.
IntPair canonicalize(IntPair p, const UnitAction& u, CanonicalRule rule = CanonicalRule::MinAbsY);

// Sign-selected region between the null lines of an indefinite form,
// expressed with integer comparisons only: x2_coeff * x^2 vs y2_coeff * y^2
// with a strict inequality in favor of `dominant`, plus a sign condition on
// the dominant coordinate.
struct Wedge {
    enum class Dominant { X, Y };
    enum class Sign { Positive, Negative };

    std::int64_t x2_coeff;
    std::int64_t y2_coeff;
    Dominant dominant;
    Sign sign;

    bool contains(std::int64_t x, std::int64_t y) const {
        __int128 lhs = __int128(x2_coeff) * x * x;
        __int128 rhs = __int128(y2_coeff) * y * y;
        if (dominant == Dominant::X)
            return lhs > rhs && (sign == Sign::Positive ? x > 0 : x < 0);
        return rhs > lhs && (sign == Sign::Positive ? y > 0 : y < 0);
    }
};

// Theta series of an indefinite diagonal form over unit orbits:
// coefficient of q^n = sum over entries of sign * weight *
//   (#orbits meeting wedge_pos with value n  -  #orbits meeting wedge_neg).
// Orbits are deduplicated by canonical representative; the enumeration
// radius is grown until a full extra doubling finds no new orbit, so no
// admissible orbit is missed.
QSeries theta_indefinite(const QuadForm& form, const ResiduePairSet& set, const Wedge& wedge_pos,
                         const std::optional<Wedge>& wedge_neg, const UnitAction& u, std::int64_t N,
                         CanonicalRule rule = CanonicalRule::MinAbsY);

// sigma and sigma* by the indefinite binary quadratic form construction:
// x = a (mod 12), y = b (mod 4) classes, form x^2 - 6y^2 on the branch
// x > sqrt(6)|y| for sigma and 6y^2 - x^2 on the branch y > |x|/sqrt(6)
// for sigma*, one representative per unit orbit. Exact to q^N.
std::pair<QSeries, QSeries> sigma_pair_bqf(std::int64_t N,
                                           CanonicalRule rule = CanonicalRule::MinAbsY);

// The weighted congruence data behind the two K3 sums, orientation signs
// included, and the matching wedges/actions. The orientation sign of a row
// records which cone of the row's residue class carries the class's own
// ideals (the reduced coset generator of the printed row is totally
// negative for the rows carrying sign -1).
ResiduePairSet k3_rho_set();        // mod 24, form (2x^2 - 3y^2)/6
ResiduePairSet k3_rhostar_set();    // mod 24, form (x^2 - 6y^2)/6
ResiduePairSet sigma_plusminus_set();  // mod (12, 4), ADH sets A+ and A-

}  // namespace threefield

#endif
