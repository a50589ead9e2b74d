#ifndef THREEFIELD_QSERIES_HPP
#define THREEFIELD_QSERIES_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace threefield {

// Thrown when a coefficient computation would exceed the signed 64-bit
// range. Results are never silently wrapped.
struct ArithmeticOverflow : std::runtime_error {
    explicit ArithmeticOverflow(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidInput : std::invalid_argument {
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when embedded table data fails a consistency check, or when a
// computed series violates a support constraint that the table data implies.
struct DataError : std::runtime_error {
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// Truncated formal power series over the integers.
//
// A series stores exact coefficients for the exponents offset..truncation;
// exponents below offset are zero, exponents above truncation are
// unspecified. Stored coefficients may end before truncation, in which case
// the remaining coefficients up to truncation are zero. Every operation
// computes the tightest truncation it can guarantee, and comparisons only
// ever look at the common guaranteed range.
class QSeries {
public:
    // Truncation value used for series that are exact at every order
    // (constants, monomials). Large enough that min() with any real
    // truncation picks the real one, small enough that offset arithmetic
    // cannot overflow.
    static constexpr std::int64_t kUnbounded = std::int64_t{1} << 56;

    QSeries() : offset_(0), truncation_(-1) {}
    QSeries(std::int64_t offset, std::int64_t truncation, std::vector<std::int64_t> coeffs);

    static QSeries zero(std::int64_t truncation = kUnbounded);
    static QSeries one(std::int64_t truncation = kUnbounded);
    static QSeries monomial(std::int64_t coeff, std::int64_t exponent,
                            std::int64_t truncation = kUnbounded);

    std::int64_t offset() const { return offset_; }
    std::int64_t truncation() const { return truncation_; }
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

    // Coefficient of q^n; n must not exceed the truncation.
    std::int64_t coeff(std::int64_t n) const;

    bool is_zero() const;

    // Number of nonzero stored coefficients.
    std::size_t nonzero_count() const;

private:
    std::int64_t offset_;
    std::int64_t truncation_;
    std::vector<std::int64_t> coeffs_;

    void normalize();
};

QSeries qs_add(const QSeries& a, const QSeries& b);
QSeries qs_sub(const QSeries& a, const QSeries& b);
QSeries qs_neg(const QSeries& a);

// Cauchy product. Result truncation = min(a.trunc + b.offset, b.trunc + a.offset).
QSeries qs_mul(const QSeries& a, const QSeries& b);

// q -> q^k. Coefficient of q^n moves to q^(kn); the gaps in between are
// known zeros, so the result stays exact through k*truncation + (k-1).
QSeries qs_substitute_power(const QSeries& a, std::int64_t k);

// Multiplication by q^m, m >= 0.
QSeries qs_shift(const QSeries& a, std::int64_t m);

// Division by a series with constant term 1 (offset 0), via the standard
// recurrence b[n] = a[n] - sum_{k>=1} c[k] b[n-k].
QSeries qs_div_unit(const QSeries& a, const QSeries& c);

// True iff a and b agree on every exponent <= min(n, a.trunc, b.trunc).
// first_mismatch, when non-null, receives the smallest disagreeing exponent.
bool qs_equal_upto(const QSeries& a, const QSeries& b, std::int64_t n,
                   std::int64_t* first_mismatch = nullptr);

struct PochhammerTerm {
    int sign;             // +1 or -1 inside the factors (1 + sign*q^e)
    std::int64_t first;   // exponent of the first factor, >= 1
    std::int64_t step;    // exponent increment between factors, >= 1
    std::int64_t power;   // may be negative (series inversion)
};

// prod_over_terms prod_{k>=0} (1 + sign*q^(first + k*step))^power, exact to q^N.
//
// Full Euler products (sign=-1, first=step) go through the pentagonal-number
// expansion, so large truncations stay cheap; everything else multiplies the
// binomial factors in one at a time.
QSeries qpochhammer_product(const std::vector<PochhammerTerm>& terms, std::int64_t N);

// (q^a;q^a)_inf to q^N by Euler's pentagonal number theorem.
QSeries euler_product(std::int64_t a, std::int64_t N);

// q^(sum delta*r/24) * prod_delta (q^delta;q^delta)^r_delta, exact to q^N.
// The prefactor exponent must come out integral.
QSeries eta_quotient_series(const std::map<std::int64_t, std::int64_t>& exponents,
                            std::int64_t N);

}  // namespace threefield

#endif
