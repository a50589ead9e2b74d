#include "threefield/identity.hpp"

#include <map>

namespace threefield {

const char* route_name(RouteId route) {
    switch (route) {
        case RouteId::K1Congruence: return "k1";
        case RouteId::K2Congruence: return "k2";
        case RouteId::K3Indefinite: return "k3";
        case RouteId::EtaQuotient: return "eta";
        case RouteId::PartitionProduct: return "partitions";
        case RouteId::SigmaBqf: return "bqf";
        case RouteId::SigmaHypergeometric: return "hyper";
    }
    return "?";
}

std::optional<RouteId> route_from_name(const std::string& name) {
    for (RouteId r : {RouteId::K1Congruence, RouteId::K2Congruence, RouteId::K3Indefinite,
                      RouteId::EtaQuotient, RouteId::PartitionProduct, RouteId::SigmaBqf,
                      RouteId::SigmaHypergeometric})
        if (name == route_name(r)) return r;
    return std::nullopt;
}

const char* series_name(SeriesKind kind) {
    switch (kind) {
        case SeriesKind::Theta: return "theta";
        case SeriesKind::Rho: return "rho";
        case SeriesKind::RhoStar: return "rhostar";
        case SeriesKind::Sigma: return "sigma";
        case SeriesKind::SigmaStar: return "sigmastar";
    }
    return "?";
}

std::optional<SeriesKind> series_from_name(const std::string& name) {
    for (SeriesKind k : {SeriesKind::Theta, SeriesKind::Rho, SeriesKind::RhoStar,
                         SeriesKind::Sigma, SeriesKind::SigmaStar})
        if (name == series_name(k)) return k;
    return std::nullopt;
}

namespace {

const std::map<std::int64_t, std::int64_t>& theta_eta_exponents() {
    static const std::map<std::int64_t, std::int64_t> r = {{24, -3}, {48, 8}, {96, -3}};
    return r;
}

// Collapse a Theta-scale series supported on residue (mod 24) down to the
// rho scale: coefficient of q^n moves to q^((n - residue)/24). Any nonzero
// coefficient off the residue class aborts.
QSeries collapse_support(const QSeries& theta_scale, std::int64_t residue, std::int64_t N) {
    std::int64_t hi = theta_scale.truncation();
    std::vector<std::int64_t> c(static_cast<std::size_t>(N + 1), 0);
    for (std::int64_t n = theta_scale.offset(); n <= hi; ++n) {
        std::int64_t v = theta_scale.coeff(n);
        if (v == 0) continue;
        if (n % 24 != residue)
            throw DataError("support violation: exponent " + std::to_string(n) + " not " +
                            std::to_string(residue) + " mod 24");
        std::int64_t k = (n - residue) / 24;
        if (k <= N) c[static_cast<std::size_t>(k)] = v;
    }
    return QSeries(0, std::min(N, (hi - residue) / 24), std::move(c));
}

QSeries theta_part_k1(std::int64_t theta_terms, bool star) {
    return theta_definite(star ? form_k1_nonprincipal() : form_k1_principal(),
                          star ? k1_rhostar_set() : k1_rho_set(), theta_terms);
}

QSeries theta_part_k2(std::int64_t theta_terms, bool star) {
    return theta_definite(form_k2(), star ? k2_rhostar_set() : k2_rho_set(), theta_terms);
}

QSeries theta_part_k3(std::int64_t theta_terms, bool star) {
    // The wedge pair is the two components of the form's positivity region;
    // the unit action matches the lattice the form lives on.
    if (star) {
        Wedge pos{1, 6, Wedge::Dominant::X, Wedge::Sign::Positive};
        Wedge neg{1, 6, Wedge::Dominant::X, Wedge::Sign::Negative};
        return theta_indefinite(QuadForm{1, 0, -6, 6}, k3_rhostar_set(), pos, neg,
                                UnitAction::pell_x2_6y2(), theta_terms);
    }
    Wedge pos{4, 6, Wedge::Dominant::X, Wedge::Sign::Positive};
    Wedge neg{4, 6, Wedge::Dominant::X, Wedge::Sign::Negative};
    return theta_indefinite(QuadForm{2, 0, -3, 6}, k3_rho_set(), pos, neg,
                            UnitAction::pell_2x2_3y2(), theta_terms);
}

}  // namespace

QSeries rho_via(RouteId route, std::int64_t N) {
    if (N < 0) return QSeries::zero(N);
    std::int64_t theta_terms = checked_add(checked_mul(24, N), 1);
    switch (route) {
        case RouteId::K1Congruence:
            return collapse_support(theta_part_k1(theta_terms, false), 1, N);
        case RouteId::K2Congruence:
            return collapse_support(theta_part_k2(theta_terms, false), 1, N);
        case RouteId::K3Indefinite:
            return collapse_support(theta_part_k3(theta_terms, false), 1, N);
        case RouteId::EtaQuotient:
            return collapse_support(eta_quotient_series(theta_eta_exponents(), theta_terms), 1, N);
        case RouteId::PartitionProduct:
            return rho_partition_series(N);
        default:
            throw InvalidInput("route does not produce rho");
    }
}

QSeries rhostar_via(RouteId route, std::int64_t N) {
    if (N < 0) return QSeries::zero(N);
    std::int64_t theta_terms = checked_add(checked_mul(24, N), 5);
    switch (route) {
        case RouteId::K1Congruence:
            return collapse_support(theta_part_k1(theta_terms, true), 5, N);
        case RouteId::K2Congruence:
            return collapse_support(theta_part_k2(theta_terms, true), 5, N);
        case RouteId::K3Indefinite:
            return collapse_support(theta_part_k3(theta_terms, true), 5, N);
        default:
            throw InvalidInput("route does not produce rhostar");
    }
}

QSeries theta_full(RouteId route, std::int64_t N) {
    if (N < 0) return QSeries::zero(N);
    QSeries part1, part5;
    switch (route) {
        case RouteId::K1Congruence:
            part1 = theta_part_k1(N, false);
            part5 = theta_part_k1(N, true);
            break;
        case RouteId::K2Congruence:
            part1 = theta_part_k2(N, false);
            part5 = theta_part_k2(N, true);
            break;
        case RouteId::K3Indefinite:
            part1 = theta_part_k3(N, false);
            part5 = theta_part_k3(N, true);
            break;
        case RouteId::EtaQuotient:
            // only the 1 mod 24 part of Theta is an eta quotient
            throw InvalidInput("theta_full requires a field route (k1, k2, k3)");
        default:
            throw InvalidInput("theta_full requires a field route (k1, k2, k3)");
    }
    QSeries theta = qs_add(part1, part5);
    for (std::int64_t n = theta.offset(); n <= std::min(N, theta.truncation()); ++n) {
        std::int64_t c = theta.coeff(n);
        if (c != 0 && n % 24 != 1 && n % 24 != 5)
            throw DataError("Theta support violation at exponent " + std::to_string(n));
    }
    return theta;
}

QSeries compute_series(SeriesKind kind, RouteId route, std::int64_t N, SigmaConvention convention) {
    switch (kind) {
        case SeriesKind::Theta: return theta_full(route, N);
        case SeriesKind::Rho: return rho_via(route, N);
        case SeriesKind::RhoStar: return rhostar_via(route, N);
        case SeriesKind::Sigma:
            if (route == RouteId::SigmaBqf) return sigma_pair_bqf(N).first;
            if (route == RouteId::SigmaHypergeometric) return sigma_hypergeometric(N, convention);
            throw InvalidInput("sigma routes are bqf and hyper");
        case SeriesKind::SigmaStar:
            if (route == RouteId::SigmaBqf) return sigma_pair_bqf(N).second;
            throw InvalidInput("sigmastar has only the bqf route");
    }
    throw InvalidInput("unknown series kind");
}

IdentityReport verify(SeriesKind kind, RouteId lhs, RouteId rhs, std::int64_t N) {
    IdentityReport rep;
    rep.kind = kind;
    rep.lhs = lhs;
    rep.rhs = rhs;
    auto t0 = std::chrono::steady_clock::now();
    QSeries a = compute_series(kind, lhs, N);
    QSeries b = compute_series(kind, rhs, N);
    rep.compared_up_to = std::min({N, a.truncation(), b.truncation()});
    std::int64_t where = -1;
    rep.equal = qs_equal_upto(a, b, N, &where);
    if (!rep.equal) {
        rep.mismatch_exponent = where;
        rep.mismatch_lhs = a.coeff(where);
        rep.mismatch_rhs = b.coeff(where);
    }
    rep.elapsed = std::chrono::steady_clock::now() - t0;
    return rep;
}

IdentityReport sigma_identity_check(std::int64_t N) {
    IdentityReport rep;
    rep.kind = SeriesKind::Sigma;
    rep.lhs = RouteId::SigmaHypergeometric;
    rep.rhs = RouteId::SigmaBqf;
    auto t0 = std::chrono::steady_clock::now();

    auto [sigma_b, sigmastar_b] = sigma_pair_bqf(N);
    QSeries sigma_h = sigma_hypergeometric(N, SigmaConvention::TriangularExponent);

    // lhs: q^2 sigma(q^24) + sigma*(q^24), sigma from the q-hypergeometric sum.
    QSeries lhs = qs_add(qs_shift(qs_substitute_power(sigma_h, 24), 2),
                         qs_substitute_power(sigmastar_b, 24));
    // rhs: q * (q sigma(q^24) + q^{-1} sigma*(q^24)) with both parts from the
    // lattice route, so the exponents land on 24n+2 and 24n.
    QSeries rhs = qs_add(qs_shift(qs_substitute_power(sigma_b, 24), 2),
                         qs_substitute_power(sigmastar_b, 24));

    std::int64_t hi = std::min(lhs.truncation(), rhs.truncation());
    rep.compared_up_to = hi;
    std::int64_t where = -1;
    rep.equal = qs_equal_upto(lhs, rhs, hi, &where);
    if (!rep.equal) {
        rep.mismatch_exponent = where;
        rep.mismatch_lhs = lhs.coeff(where);
        rep.mismatch_rhs = rhs.coeff(where);
    }
    rep.elapsed = std::chrono::steady_clock::now() - t0;
    return rep;
}

IdentityReport sturm_scale_check(std::int64_t theta_terms) {
    IdentityReport rep;
    rep.kind = SeriesKind::Theta;
    rep.lhs = RouteId::EtaQuotient;
    rep.rhs = RouteId::K1Congruence;
    auto t0 = std::chrono::steady_clock::now();
    QSeries eta = eta_quotient_series(theta_eta_exponents(), theta_terms);
    QSeries k1 = theta_part_k1(theta_terms, false);
    rep.compared_up_to = std::min({theta_terms, eta.truncation(), k1.truncation()});
    std::int64_t where = -1;
    rep.equal = qs_equal_upto(eta, k1, theta_terms, &where);
    if (!rep.equal) {
        rep.mismatch_exponent = where;
        rep.mismatch_lhs = eta.coeff(where);
        rep.mismatch_rhs = k1.coeff(where);
    }
    rep.elapsed = std::chrono::steady_clock::now() - t0;
    return rep;
}

}  // namespace threefield
