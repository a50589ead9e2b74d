#ifndef THREEFIELD_QUADFORM_HPP
#define THREEFIELD_QUADFORM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "threefield/qseries.hpp"

namespace threefield {

// Binary quadratic form (A x^2 + B x y + C y^2) / D with integer
// numerator coefficients and positive integer denominator.
struct QuadForm {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;
    std::int64_t d = 1;

    bool definite() const { return b * b - 4 * a * c < 0 && a > 0; }

    // Numerator value A x^2 + B x y + C y^2 (exact, overflow-checked).
    std::int64_t numerator(std::int64_t x, std::int64_t y) const;

    // Full value; the numerator must be divisible by D.
    std::int64_t value(std::int64_t x, std::int64_t y) const;
};

// One weighted congruence condition on integer pairs:
// x = rx (mod mx), y = ry (mod my), counted sign * weight times.
struct ResidueEntry {
    std::int64_t mx = 1;
    std::int64_t rx = 0;
    std::int64_t my = 1;
    std::int64_t ry = 0;
    std::int64_t weight = 1;
    int sign = 1;
};

// A disjoint union of congruence conditions. Entries are checked pairwise
// for CRT overlap so no lattice point is ever double-counted.
class ResiduePairSet {
public:
    ResiduePairSet() = default;
    explicit ResiduePairSet(std::vector<ResidueEntry> entries);

    const std::vector<ResidueEntry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

private:
    std::vector<ResidueEntry> entries_;
};

enum class FieldId { K1, K2, K3 };
enum class Coset { I, J, B, Bp };

// Exact rational with small terms, enough for the table columns x1, y1.
struct SmallFraction {
    std::int64_t num = 0;
    std::int64_t den = 1;
};

// One row of the embedded ray-class tables: the ideal label as printed
// (kept as a comment; the congruence data is what computes), the reduced
// coset generator coordinates x1, y1, the common denominator M, the
// residues i = M*x1 and j = M*y1, the norm residue mod 24, and which of
// the field's two quadratic forms applies.
struct RayClassRow {
    FieldId field_id;
    const char* label;
    SmallFraction x1;
    SmallFraction y1;
    std::int64_t m;
    std::int64_t i;
    std::int64_t j;
    std::int64_t q_residue;
    Coset coset;
    bool principal_form;
};

// Theta series of a positive-definite form restricted to a congruence set:
// coefficient of q^n = sum over entries of sign * weight * #{(x,y) in the
// entry's class : Q(x,y) = n}, exact for all n <= N. Every admitted lattice
// point must evaluate to a D-divisible numerator (checked).
QSeries theta_definite(const QuadForm& form, const ResiduePairSet& set, std::int64_t N);

// The quadratic form a table row uses.
QuadForm form_for_row(const RayClassRow& row);

// Theta series of a single table row (definite fields only; K3 rows are
// handled by the indefinite module).
QSeries theta_from_row(const RayClassRow& row, std::int64_t N);

// Row's form evaluated at (i, j), reduced into [0, 24).
std::int64_t residue_of_form(const RayClassRow& row);

// Forms appearing in the tables.
QuadForm form_k1_principal();      // (x^2 + 6y^2)/6
QuadForm form_k1_nonprincipal();   // (2x^2 + 3y^2)/6
QuadForm form_k2();                // x^2 + y^2

// Congruence sets for the two definite routes, signs included:
// K1 uses the four positive and four negative mod-24 classes from the
// imaginary-field table; K2 uses the symmetry-reduced classes with their
// weight-2 entries.
ResiduePairSet k1_rho_set();
ResiduePairSet k1_rhostar_set();
ResiduePairSet k2_rho_set();
ResiduePairSet k2_rhostar_set();

}  // namespace threefield

#endif
