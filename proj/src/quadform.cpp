#include "threefield/quadform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

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

// Smallest x >= lo with x = r (mod m), 0 <= r < m.
std::int64_t first_at_least(std::int64_t lo, std::int64_t r, std::int64_t m) {
    std::int64_t d = lo - r;
    std::int64_t q = d / m + ((d % m) > 0 ? 1 : 0);  // ceil(d / m)
    return r + q * m;
}

std::int64_t mod_norm(std::int64_t v, std::int64_t m) {
    std::int64_t r = v % m;
    return r < 0 ? r + m : r;
}

}  // namespace

std::int64_t QuadForm::numerator(std::int64_t x, std::int64_t y) const {
    i128 v = i128(a) * x * x + i128(b) * x * y + i128(c) * y * y;
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw ArithmeticOverflow("quadratic form value exceeds 64 bits");
    return static_cast<std::int64_t>(v);
}

std::int64_t QuadForm::value(std::int64_t x, std::int64_t y) const {
    std::int64_t n = numerator(x, y);
    if (n % d != 0)
        throw DataError("form numerator not divisible by denominator at admitted point");
    return n / d;
}

ResiduePairSet::ResiduePairSet(std::vector<ResidueEntry> entries) : entries_(std::move(entries)) {
    for (const auto& e : entries_) {
        if (e.mx < 1 || e.my < 1) throw InvalidInput("residue moduli must be >= 1");
        if (e.rx < 0 || e.rx >= e.mx || e.ry < 0 || e.ry >= e.my)
            throw InvalidInput("residues must lie in [0, modulus)");
        if (e.weight < 1) throw InvalidInput("entry weight must be positive");
        if (e.sign != 1 && e.sign != -1) throw InvalidInput("entry sign must be +-1");
    }
    // CRT overlap test: two classes intersect iff the residues agree modulo
    // the gcd of the moduli, coordinate-wise.
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        for (std::size_t j = i + 1; j < entries_.size(); ++j) {
            const auto& p = entries_[i];
            const auto& q = entries_[j];
            std::int64_t gx = std::gcd(p.mx, q.mx);
            std::int64_t gy = std::gcd(p.my, q.my);
            if (mod_norm(p.rx - q.rx, gx) == 0 && mod_norm(p.ry - q.ry, gy) == 0)
                throw DataError("residue pair set entries overlap; points would be double-counted");
        }
    }
}

QSeries theta_definite(const QuadForm& form, const ResiduePairSet& set, std::int64_t N) {
    if (!form.definite()) throw InvalidInput("theta_definite requires a definite form");
    if (N < 0) return QSeries::zero(N);

    // Divisibility must hold on every lattice point of every entry; the
    // numerator mod D is periodic in each coordinate with period D, so a
    // D x D sweep per entry settles it.
    for (const auto& e : set.entries()) {
        for (std::int64_t s = 0; s < form.d; ++s)
            for (std::int64_t t = 0; t < form.d; ++t)
                if (mod_norm(form.numerator(e.rx + s * e.mx, e.ry + t * e.my), form.d) != 0)
                    throw DataError("congruence class admits points where the form is not integral");
    }

    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(N + 1), 0);
    const i128 nd = i128(N) * form.d;
    const std::int64_t fourac = 4 * form.a * form.c - form.b * form.b;  // > 0

    for (const auto& e : set.entries()) {
        // A x^2 + B x y + C y^2 <= ND confines x to x^2 <= 4C*ND / (4AC - B^2).
        std::int64_t xbound = isqrt_floor(4 * form.c * nd / fourac);
        for (std::int64_t x = first_at_least(-xbound, e.rx, e.mx); x <= xbound; x += e.mx) {
            // C y^2 + Bx y + (A x^2 - ND) <= 0.
            i128 disc = i128(form.b) * form.b * x * x - 4 * form.c * (i128(form.a) * x * x - nd);
            if (disc < 0) continue;
            std::int64_t sq = isqrt_floor(disc);
            // y in [(-Bx - sq) / 2C, (-Bx + sq) / 2C]
            std::int64_t lo = -form.b * x - sq;
            std::int64_t hi = -form.b * x + sq;
            std::int64_t twoc = 2 * form.c;
            std::int64_t ylo = lo >= 0 ? (lo + twoc - 1) / twoc : -((-lo) / twoc);
            std::int64_t yhi = hi >= 0 ? hi / twoc : -((-hi + twoc - 1) / twoc);
            for (std::int64_t y = first_at_least(ylo, e.ry, e.my); y <= yhi; y += e.my) {
                std::int64_t v = form.value(x, y);
                if (v < 0 || v > N) continue;
                auto& slot = coeffs[static_cast<std::size_t>(v)];
                slot = checked_add(slot, e.sign * e.weight);
            }
        }
    }
    return QSeries(0, N, std::move(coeffs));
}

QuadForm form_k1_principal() { return QuadForm{1, 0, 6, 6}; }
QuadForm form_k1_nonprincipal() { return QuadForm{2, 0, 3, 6}; }
QuadForm form_k2() { return QuadForm{1, 0, 1, 1}; }

QuadForm form_for_row(const RayClassRow& row) {
    switch (row.field_id) {
        case FieldId::K1:
            return row.principal_form ? form_k1_principal() : form_k1_nonprincipal();
        case FieldId::K2:
            return form_k2();
        case FieldId::K3:
            // indefinite pair; see the indefinite module
            return row.principal_form ? QuadForm{2, 0, -3, 6} : QuadForm{1, 0, -6, 6};
    }
    throw InvalidInput("unknown field id");
}

QSeries theta_from_row(const RayClassRow& row, std::int64_t N) {
    if (row.field_id == FieldId::K3)
        throw InvalidInput("K3 rows are indefinite; use the indefinite module");
    ResiduePairSet set({ResidueEntry{row.m, row.i, row.m, row.j, 1, +1}});
    return theta_definite(form_for_row(row), set, N);
}

std::int64_t residue_of_form(const RayClassRow& row) {
    QuadForm f = form_for_row(row);
    std::int64_t num = f.numerator(row.i, row.j);
    if (num % f.d != 0) throw DataError("table row form value not integral at (i, j)");
    return mod_norm(num / f.d, 24);
}

namespace {

ResiduePairSet make24(std::initializer_list<std::pair<std::int64_t, std::int64_t>> pos,
                      std::initializer_list<std::pair<std::int64_t, std::int64_t>> neg) {
    std::vector<ResidueEntry> es;
    for (auto [a, b] : pos) es.push_back({24, a, 24, b, 1, +1});
    for (auto [a, b] : neg) es.push_back({24, a, 24, b, 1, -1});
    return ResiduePairSet(std::move(es));
}

}  // namespace

ResiduePairSet k1_rho_set() {
    return make24({{0, 1}, {0, 19}, {12, 1}, {12, 5}}, {{0, 7}, {0, 11}, {12, 7}, {12, 13}});
}

ResiduePairSet k1_rhostar_set() {
    return make24({{3, 2}, {3, 22}, {9, 10}, {9, 14}}, {{15, 2}, {15, 22}, {21, 10}, {21, 14}});
}

ResiduePairSet k2_rho_set() {
    return ResiduePairSet({
        {24, 0, 6, 1, 1, +1},    // axis classes, once
        {24, 4, 12, 3, 2, +1},   // off-axis classes, twice
        {24, 12, 6, 1, 1, -1},
        {24, 8, 12, 3, 2, -1},
    });
}

ResiduePairSet k2_rhostar_set() {
    return ResiduePairSet({
        {24, 2, 12, 1, 2, +1},
        {24, 10, 12, 5, 2, +1},
        {24, 2, 12, 5, 2, -1},
        {24, 10, 12, 1, 2, -1},
    });
}

}  // namespace threefield
