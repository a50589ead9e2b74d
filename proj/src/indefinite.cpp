#include "threefield/indefinite.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace threefield {

namespace {

using i128 = __int128;

std::int64_t isqrt_floor(i128 v) {
    if (v < 0) return -1;
    std::int64_t r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && i128(r) * r > v) --r;
    while (i128(r + 1) * (r + 1) <= v) ++r;
    return r;
}

std::int64_t first_at_least(std::int64_t lo, std::int64_t r, std::int64_t m) {
    std::int64_t d = lo - r;
    std::int64_t q = d / m + ((d % m) > 0 ? 1 : 0);
    return r + q * m;
}

std::int64_t key_coord(IntPair p, CanonicalRule rule) {
    return rule == CanonicalRule::MinAbsY ? p.second : p.first;
}

// Strict "is a better canonical representative" order.
bool better(IntPair a, IntPair b, CanonicalRule rule) {
    std::int64_t ka = std::abs(key_coord(a, rule));
    std::int64_t kb = std::abs(key_coord(b, rule));
    if (ka != kb) return ka < kb;
    if (rule == CanonicalRule::MinAbsY) {
        if (a.first != b.first) return a.first > b.first;
        return a.second > b.second;
    }
    if (a.second != b.second) return a.second > b.second;
    return a.first > b.first;
}

struct PairHash {
    std::size_t operator()(const IntPair& p) const {
        std::uint64_t h = static_cast<std::uint64_t>(p.first) * 0x9e3779b97f4a7c15ULL;
        h ^= static_cast<std::uint64_t>(p.second) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

}  // namespace

IntPair canonicalize(IntPair p, const UnitAction& u, CanonicalRule rule) {
    if (p.first == 0 && p.second == 0) throw InvalidInput("canonicalize requires a nonzero pair");
    const UnitAction uinv = u.inverse();
    // |key| is unimodal along the orbit (the coordinate sequences satisfy a
    // trace-10 linear recurrence), so walking downhill finds the minimum.
    IntPair cur = p;
    for (;;) {
        IntPair nxt = uinv.apply(cur);
        if (std::abs(key_coord(nxt, rule)) < std::abs(key_coord(cur, rule))) cur = nxt;
        else break;
    }
    for (;;) {
        IntPair nxt = u.apply(cur);
        if (std::abs(key_coord(nxt, rule)) < std::abs(key_coord(cur, rule))) cur = nxt;
        else break;
    }
    // At most one neighbor can tie the minimal |key|.
    IntPair best = cur;
    for (IntPair nb : {u.apply(cur), uinv.apply(cur)}) {
        if (std::abs(key_coord(nb, rule)) == std::abs(key_coord(cur, rule)) && better(nb, best, rule))
            best = nb;
    }
    return best;
}

namespace {

struct OrbitRecord {
    std::int64_t exponent;
    std::int64_t contribution;
};

// One enumeration sweep: all admitted points with |y| <= ybound, orbits
// keyed by canonical representative.
void sweep(const QuadForm& form, const ResiduePairSet& set, const Wedge& wedge_pos,
           const std::optional<Wedge>& wedge_neg, const UnitAction& u, std::int64_t N,
           CanonicalRule rule, std::int64_t ybound,
           std::unordered_map<IntPair, OrbitRecord, PairHash>& orbits) {
    orbits.clear();
    const i128 nd = i128(N) * form.d;
    auto admit = [&](std::int64_t x, std::int64_t y) {
        int w = 0;
        if (wedge_pos.contains(x, y)) w = 1;
        else if (wedge_neg && wedge_neg->contains(x, y)) w = -1;
        else return;
        i128 num = i128(form.a) * x * x + i128(form.c) * y * y;
        if (num <= 0 || num > nd) return;
        if (num % form.d != 0)
            throw DataError("indefinite form value not integral at admitted point");
        std::int64_t v = static_cast<std::int64_t>(num / form.d);
        for (const auto& e : set.entries()) {
            std::int64_t rx = ((x % e.mx) + e.mx) % e.mx;
            std::int64_t ry = ((y % e.my) + e.my) % e.my;
            if (rx != e.rx || ry != e.ry) continue;
            IntPair key = canonicalize({x, y}, u, rule);
            std::int64_t contribution = w * e.sign * e.weight;
            auto [it, inserted] = orbits.try_emplace(key, OrbitRecord{v, contribution});
            if (!inserted && (it->second.exponent != v || it->second.contribution != contribution))
                throw DataError("unit orbit meets the congruence set inconsistently");
            return;  // entries are disjoint
        }
    };
    for (const auto& e : set.entries()) {
        for (std::int64_t y = first_at_least(-ybound, e.ry, e.my); y <= ybound; y += e.my) {
            if (form.a > 0 && form.c < 0) {
                // a x^2 in (-c y^2, -c y^2 + ND]
                i128 floor2 = i128(-form.c) * y * y;
                std::int64_t xlo = isqrt_floor(floor2 / form.a);
                std::int64_t xhi = isqrt_floor((floor2 + nd) / form.a) + 1;
                for (std::int64_t x = first_at_least(xlo, e.rx, e.mx); x <= xhi; x += e.mx)
                    admit(x, y);
                for (std::int64_t x = first_at_least(xlo, (e.mx - e.rx) % e.mx, e.mx); x <= xhi;
                     x += e.mx)
                    admit(-x, y);
            } else if (form.a < 0 && form.c > 0) {
                // x^2 in [max(0, (c y^2 - ND) / -a), (c y^2 - 1) / -a]
                i128 top = i128(form.c) * y * y;
                std::int64_t xhi = isqrt_floor((top - 1) / (-form.a));
                for (std::int64_t x = first_at_least(0, e.rx, e.mx); x <= xhi; x += e.mx)
                    admit(x, y);
                for (std::int64_t x = first_at_least(1, (e.mx - e.rx) % e.mx, e.mx); x <= xhi;
                     x += e.mx)
                    admit(-x, y);
            } else {
                throw InvalidInput("theta_indefinite requires a diagonal indefinite form");
            }
        }
    }
}

}  // namespace

QSeries theta_indefinite(const QuadForm& form, const ResiduePairSet& set, const Wedge& wedge_pos,
                         const std::optional<Wedge>& wedge_neg, const UnitAction& u, std::int64_t N,
                         CanonicalRule rule) {
    if (form.definite()) throw InvalidInput("theta_indefinite requires an indefinite form");
    if (form.b != 0) throw InvalidInput("theta_indefinite requires a diagonal form");
    if (N < 0) return QSeries::zero(N);

    std::unordered_map<IntPair, OrbitRecord, PairHash> orbits, wider;
    // The canonical representatives of admissible orbits satisfy an
    // explicit |y| bound; start near it and let the doubling check verify.
    std::int64_t ybound = isqrt_floor(i128(6) * form.d * std::max<std::int64_t>(N, 1)) + 16;
    sweep(form, set, wedge_pos, wedge_neg, u, N, rule, ybound, orbits);
    for (;;) {
        ybound *= 2;
        sweep(form, set, wedge_pos, wedge_neg, u, N, rule, ybound, wider);
        if (wider.size() == orbits.size()) break;
        orbits.swap(wider);
    }

    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(N + 1), 0);
    for (const auto& [key, rec] : orbits) {
        auto& slot = coeffs[static_cast<std::size_t>(rec.exponent)];
        slot = checked_add(slot, rec.contribution);
    }
    return QSeries(0, N, std::move(coeffs));
}

ResiduePairSet k3_rho_set() {
    return ResiduePairSet({
        {24, 3, 24, 2, 1, +1},
        {24, 9, 24, 14, 1, -1},
        {24, 9, 24, 22, 1, +1},
        {24, 21, 24, 14, 1, +1},
    });
}

ResiduePairSet k3_rhostar_set() {
    return ResiduePairSet({
        {24, 6, 24, 11, 1, -1},
        {24, 18, 24, 5, 1, -1},
        {24, 18, 24, 7, 1, +1},
        {24, 18, 24, 23, 1, -1},
    });
}

ResiduePairSet sigma_plusminus_set() {
    return ResiduePairSet({
        {12, 1, 4, 0, 1, +1},
        {12, 11, 4, 0, 1, +1},
        {12, 5, 4, 2, 1, +1},
        {12, 7, 4, 2, 1, +1},
        {12, 5, 4, 0, 1, -1},
        {12, 7, 4, 0, 1, -1},
        {12, 1, 4, 2, 1, -1},
        {12, 11, 4, 2, 1, -1},
    });
}

std::pair<QSeries, QSeries> sigma_pair_bqf(std::int64_t N, CanonicalRule rule) {
    if (N < 0) return {QSeries::zero(N), QSeries::zero(N)};
    const UnitAction u = UnitAction::pell_x2_6y2();
    const ResiduePairSet set = sigma_plusminus_set();

    // sigma: x^2 - 6y^2 = 24n + 1 on the positive branch of x^2 > 6y^2.
    Wedge pos_branch{1, 6, Wedge::Dominant::X, Wedge::Sign::Positive};
    QSeries theta1 = theta_indefinite(QuadForm{1, 0, -6, 1}, set, pos_branch, std::nullopt, u,
                                      24 * N + 1, rule);
    // sigma*: 6y^2 - x^2 = 24n - 1 on the upper branch of 6y^2 > x^2.
    Wedge upper_branch{1, 6, Wedge::Dominant::Y, Wedge::Sign::Positive};
    QSeries theta23 = theta_indefinite(QuadForm{-1, 0, 6, 1}, set, upper_branch, std::nullopt, u,
                                       N > 0 ? 24 * N - 1 : 0, rule);

    std::vector<std::int64_t> s(static_cast<std::size_t>(N + 1), 0);
    std::vector<std::int64_t> sstar(static_cast<std::size_t>(N + 1), 0);
    for (std::int64_t n = 0; n <= theta1.truncation(); ++n) {
        std::int64_t c = theta1.coeff(n);
        if (c == 0) continue;
        if (n % 24 != 1)
            throw DataError("sigma lattice sum has support off 1 mod 24 at exponent " +
                            std::to_string(n));
        s[static_cast<std::size_t>((n - 1) / 24)] = c;
    }
    for (std::int64_t n = 0; n <= theta23.truncation(); ++n) {
        std::int64_t c = theta23.coeff(n);
        if (c == 0) continue;
        if (n % 24 != 23)
            throw DataError("sigma* lattice sum has support off 23 mod 24 at exponent " +
                            std::to_string(n));
        sstar[static_cast<std::size_t>((n + 1) / 24)] = c;
    }
    return {QSeries(0, N, std::move(s)), QSeries(0, N, std::move(sstar))};
}

}  // namespace threefield
