#include "threefield/qseries.hpp"

#include <algorithm>
#include <limits>

namespace threefield {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw ArithmeticOverflow("integer overflow in coefficient addition");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw ArithmeticOverflow("integer overflow in coefficient multiplication");
    return r;
}

namespace {

// Saturating arithmetic for truncation bookkeeping. Truncations live well
// below kUnbounded*4, so plain adds of two of them cannot overflow int64,
// but we still clamp to keep "unbounded" absorbing.
std::int64_t trunc_add(std::int64_t a, std::int64_t b) {
    std::int64_t r = a + b;
    return std::min(r, QSeries::kUnbounded);
}

}  // namespace

QSeries::QSeries(std::int64_t offset, std::int64_t truncation, std::vector<std::int64_t> coeffs)
    : offset_(offset), truncation_(truncation), coeffs_(std::move(coeffs)) {
    if (offset_ < 0) throw InvalidInput("QSeries offset must be >= 0");
    if (truncation_ < offset_ - 1) throw InvalidInput("QSeries truncation < offset - 1");
    if (static_cast<std::int64_t>(coeffs_.size()) > truncation_ - offset_ + 1)
        throw InvalidInput("QSeries has more coefficients than its truncation allows");
    normalize();
}

void QSeries::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QSeries QSeries::zero(std::int64_t truncation) {
    return QSeries(0, std::max<std::int64_t>(truncation, -1), {});
}

QSeries QSeries::one(std::int64_t truncation) { return QSeries(0, truncation, {1}); }

QSeries QSeries::monomial(std::int64_t coeff, std::int64_t exponent, std::int64_t truncation) {
    if (exponent < 0) throw InvalidInput("monomial exponent must be >= 0");
    return QSeries(exponent, truncation, {coeff});
}

std::int64_t QSeries::coeff(std::int64_t n) const {
    if (n > truncation_)
        throw InvalidInput("coefficient request beyond guaranteed truncation");
    if (n < offset_) return 0;
    std::size_t k = static_cast<std::size_t>(n - offset_);
    return k < coeffs_.size() ? coeffs_[k] : 0;
}

bool QSeries::is_zero() const { return coeffs_.empty(); }

std::size_t QSeries::nonzero_count() const {
    std::size_t c = 0;
    for (auto v : coeffs_)
        if (v != 0) ++c;
    return c;
}

QSeries qs_add(const QSeries& a, const QSeries& b) {
    std::int64_t off = std::min(a.offset(), b.offset());
    std::int64_t tr = std::min(a.truncation(), b.truncation());
    std::int64_t hi = std::min(tr, std::max(a.offset() + static_cast<std::int64_t>(a.coeffs().size()),
                                            b.offset() + static_cast<std::int64_t>(b.coeffs().size())) -
                                       1);
    if (hi < off) return QSeries(off, tr, {});
    std::vector<std::int64_t> c(static_cast<std::size_t>(hi - off + 1), 0);
    for (std::size_t k = 0; k < a.coeffs().size(); ++k) {
        std::int64_t n = a.offset() + static_cast<std::int64_t>(k);
        if (n > hi) break;
        c[static_cast<std::size_t>(n - off)] = a.coeffs()[k];
    }
    for (std::size_t k = 0; k < b.coeffs().size(); ++k) {
        std::int64_t n = b.offset() + static_cast<std::int64_t>(k);
        if (n > hi) break;
        auto& slot = c[static_cast<std::size_t>(n - off)];
        slot = checked_add(slot, b.coeffs()[k]);
    }
    return QSeries(off, tr, std::move(c));
}

QSeries qs_neg(const QSeries& a) {
    std::vector<std::int64_t> c = a.coeffs();
    for (auto& v : c) v = checked_mul(v, -1);
    return QSeries(a.offset(), a.truncation(), std::move(c));
}

QSeries qs_sub(const QSeries& a, const QSeries& b) { return qs_add(a, qs_neg(b)); }

QSeries qs_mul(const QSeries& a, const QSeries& b) {
    std::int64_t off = trunc_add(a.offset(), b.offset());
    std::int64_t tr = std::min(trunc_add(a.truncation(), b.offset()),
                               trunc_add(b.truncation(), a.offset()));
    if (a.is_zero() || b.is_zero()) return QSeries(off, tr, {});
    // Iterate the factor with fewer nonzeros on the outside.
    const QSeries& x = a.nonzero_count() <= b.nonzero_count() ? a : b;
    const QSeries& y = a.nonzero_count() <= b.nonzero_count() ? b : a;
    std::int64_t hi = std::min(tr, a.offset() + static_cast<std::int64_t>(a.coeffs().size()) - 1 +
                                       b.offset() + static_cast<std::int64_t>(b.coeffs().size()) - 1);
    if (hi < off) return QSeries(off, tr, {});
    std::vector<std::int64_t> c(static_cast<std::size_t>(hi - off + 1), 0);
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
        std::int64_t xi = x.coeffs()[i];
        if (xi == 0) continue;
        std::int64_t base = x.offset() + static_cast<std::int64_t>(i) + y.offset();
        if (base > hi) break;
        std::size_t jmax = std::min(y.coeffs().size(), static_cast<std::size_t>(hi - base + 1));
        for (std::size_t j = 0; j < jmax; ++j) {
            std::int64_t yj = y.coeffs()[j];
            if (yj == 0) continue;
            auto& slot = c[static_cast<std::size_t>(base - off) + j];
            slot = checked_add(slot, checked_mul(xi, yj));
        }
    }
    return QSeries(off, tr, std::move(c));
}

QSeries qs_substitute_power(const QSeries& a, std::int64_t k) {
    if (k < 1) throw InvalidInput("qs_substitute_power requires k >= 1");
    if (k == 1) return a;
    std::int64_t off = checked_mul(a.offset(), k);
    std::int64_t tr = a.truncation() >= QSeries::kUnbounded / k
                          ? QSeries::kUnbounded
                          : a.truncation() * k + (k - 1);
    std::vector<std::int64_t> c;
    if (!a.coeffs().empty()) {
        c.assign(static_cast<std::size_t>((a.coeffs().size() - 1) * k + 1), 0);
        for (std::size_t i = 0; i < a.coeffs().size(); ++i)
            c[i * static_cast<std::size_t>(k)] = a.coeffs()[i];
    }
    return QSeries(off, tr, std::move(c));
}

QSeries qs_shift(const QSeries& a, std::int64_t m) {
    if (m < 0) throw InvalidInput("qs_shift requires m >= 0");
    return QSeries(a.offset() + m, trunc_add(a.truncation(), m), a.coeffs());
}

QSeries qs_div_unit(const QSeries& a, const QSeries& c) {
    if (c.offset() != 0 || c.coeff(0) != 1)
        throw InvalidInput("qs_div_unit divisor must have constant term 1");
    std::int64_t tr = std::min(a.truncation(), trunc_add(c.truncation(), a.offset()));
    std::int64_t off = a.offset();
    if (tr < off) return QSeries(off, tr, {});
    std::size_t len = static_cast<std::size_t>(tr - off + 1);
    std::vector<std::int64_t> b(len, 0);
    // Indices of nonzero divisor coefficients beyond the constant term.
    std::vector<std::pair<std::int64_t, std::int64_t>> cs;
    for (std::size_t k = 1; k < c.coeffs().size(); ++k)
        if (c.coeffs()[k] != 0) cs.emplace_back(static_cast<std::int64_t>(k), c.coeffs()[k]);
    for (std::size_t n = 0; n < len; ++n) {
        std::int64_t s = a.coeff(off + static_cast<std::int64_t>(n));
        for (const auto& [k, ck] : cs) {
            if (k > static_cast<std::int64_t>(n)) break;
            s = checked_add(s, -checked_mul(ck, b[n - static_cast<std::size_t>(k)]));
        }
        b[n] = s;
    }
    return QSeries(off, tr, std::move(b));
}

bool qs_equal_upto(const QSeries& a, const QSeries& b, std::int64_t n, std::int64_t* first_mismatch) {
    std::int64_t hi = std::min({n, a.truncation(), b.truncation()});
    for (std::int64_t i = 0; i <= hi; ++i) {
        if (a.coeff(i) != b.coeff(i)) {
            if (first_mismatch) *first_mismatch = i;
            return false;
        }
    }
    return true;
}

QSeries euler_product(std::int64_t a, std::int64_t N) {
    if (a < 1) throw InvalidInput("euler_product requires a >= 1");
    if (N < 0) return QSeries::zero(N);
    std::vector<std::int64_t> c(static_cast<std::size_t>(N + 1), 0);
    // sum_{k in Z} (-1)^k q^{a k(3k-1)/2}
    for (std::int64_t k = 0;; ++k) {
        std::int64_t g1 = a * (k * (3 * k - 1) / 2);
        std::int64_t g2 = a * (k * (3 * k + 1) / 2);
        if (g1 > N && g2 > N) break;
        std::int64_t s = (k % 2 == 0) ? 1 : -1;
        if (g1 <= N) c[static_cast<std::size_t>(g1)] += s;
        if (k > 0 && g2 <= N) c[static_cast<std::size_t>(g2)] += s;
    }
    return QSeries(0, N, std::move(c));
}

namespace {

// In-place multiplication of dense data by (1 + sign*q^m), data exact to N.
void mul_binomial(std::vector<std::int64_t>& c, int sign, std::int64_t m) {
    for (std::int64_t n = static_cast<std::int64_t>(c.size()) - 1; n >= m; --n) {
        std::int64_t t = checked_mul(static_cast<std::int64_t>(sign), c[static_cast<std::size_t>(n - m)]);
        c[static_cast<std::size_t>(n)] = checked_add(c[static_cast<std::size_t>(n)], t);
    }
}

// In-place division by (1 + sign*q^m).
void div_binomial(std::vector<std::int64_t>& c, int sign, std::int64_t m) {
    for (std::int64_t n = m; n < static_cast<std::int64_t>(c.size()); ++n) {
        std::int64_t t = checked_mul(static_cast<std::int64_t>(sign), c[static_cast<std::size_t>(n - m)]);
        c[static_cast<std::size_t>(n)] = checked_add(c[static_cast<std::size_t>(n)], -t);
    }
}

}  // namespace

QSeries qpochhammer_product(const std::vector<PochhammerTerm>& terms, std::int64_t N) {
    if (N < 0) return QSeries::zero(N);
    bool all_euler = true;
    for (const auto& t : terms) {
        if (t.step < 1) throw InvalidInput("qpochhammer_product requires step >= 1");
        if (t.first < 1) throw InvalidInput("qpochhammer_product requires first >= 1");
        if (t.sign != 1 && t.sign != -1) throw InvalidInput("qpochhammer_product sign must be +-1");
        if (!(t.sign == -1 && t.first == t.step)) all_euler = false;
    }
    if (all_euler) {
        // Full Euler products go through the sparse pentagonal expansions,
        // positive powers before negative so balanced quotients stay small.
        QSeries acc = QSeries::one(N);
        for (int phase = 0; phase < 2; ++phase) {
            for (const auto& t : terms) {
                if ((phase == 0) != (t.power > 0) || t.power == 0) continue;
                QSeries base = euler_product(t.step, N);
                for (std::int64_t p = 0; p < std::abs(t.power); ++p)
                    acc = t.power > 0 ? qs_mul(acc, base) : qs_div_unit(acc, base);
            }
        }
        return acc;
    }
    // Mixed products: fold the binomial factors in ascending exponent order
    // across all terms. Cancellation between the terms then keeps the
    // intermediate coefficients near the final ones; multiplying one term
    // out completely before the next can overflow long before the (small)
    // combined product does.
    std::vector<std::int64_t> c(static_cast<std::size_t>(N + 1), 0);
    c[0] = 1;
    for (std::int64_t m = 1; m <= N; ++m) {
        for (const auto& t : terms) {
            if (t.power == 0 || m < t.first || (m - t.first) % t.step != 0) continue;
            for (std::int64_t p = 0; p < std::abs(t.power); ++p)
                t.power > 0 ? mul_binomial(c, t.sign, m) : div_binomial(c, t.sign, m);
        }
    }
    return QSeries(0, N, std::move(c));
}

QSeries eta_quotient_series(const std::map<std::int64_t, std::int64_t>& exponents, std::int64_t N) {
    std::int64_t lead = 0;
    for (const auto& [delta, r] : exponents) {
        if (delta < 1) throw InvalidInput("eta quotient requires delta >= 1");
        lead = checked_add(lead, checked_mul(delta, r));
    }
    if (lead % 24 != 0)
        throw InvalidInput("eta quotient prefactor exponent sum(delta*r) = " + std::to_string(lead) +
                           " is not divisible by 24");
    std::int64_t pre = lead / 24;
    if (pre < 0)
        throw InvalidInput("eta quotient has a pole at q=0 (negative leading exponent)");
    if (N < pre) return QSeries::zero(N);
    std::int64_t M = N - pre;
    QSeries acc = QSeries::one(M);
    for (int phase = 0; phase < 2; ++phase) {
        for (const auto& [delta, r] : exponents) {
            if ((phase == 0) != (r > 0) || r == 0) continue;
            QSeries base = euler_product(delta, M);
            for (std::int64_t p = 0; p < std::abs(r); ++p)
                acc = r > 0 ? qs_mul(acc, base) : qs_div_unit(acc, base);
        }
    }
    return qs_shift(acc, pre);
}

}  // namespace threefield
