#ifndef THREEFIELD_IDENTITY_HPP
#define THREEFIELD_IDENTITY_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "threefield/indefinite.hpp"
#include "threefield/partitions.hpp"
#include "threefield/qseries.hpp"

namespace threefield {

enum class RouteId {
    K1Congruence,        // definite lattice sums, discriminant -24 tables
    K2Congruence,        // definite lattice sums, Gaussian congruence sets
    K3Indefinite,        // unit-orbit lattice sums, discriminant 24 tables
    EtaQuotient,         // eta(48t)^8 / (eta(24t)^3 eta(96t)^3)
    PartitionProduct,    // (-q;q^2)^3 (q^2;q^2)^2
    SigmaBqf,            // indefinite route for sigma / sigma*
    SigmaHypergeometric,
};

const char* route_name(RouteId route);
std::optional<RouteId> route_from_name(const std::string& name);

enum class SeriesKind { Theta, Rho, RhoStar, Sigma, SigmaStar };

const char* series_name(SeriesKind kind);
std::optional<SeriesKind> series_from_name(const std::string& name);

// rho to q^N via the named route. The congruence routes compute in the
// Theta exponent scale and then invert n -> (n-1)/24; any coefficient off
// the 1 mod 24 support aborts, since that can only mean bad table data or
// an enumeration bug.
QSeries rho_via(RouteId route, std::int64_t N);

// rho* to q^N; support assertion is 5 mod 24, inversion n -> (n-5)/24.
// Only the three field routes produce rho*.
QSeries rhostar_via(RouteId route, std::int64_t N);

// Theta = q rho(q^24) + q^5 rho*(q^24) to q^N, computed at the Theta scale.
QSeries theta_full(RouteId route, std::int64_t N);

// Series dispatch used by verify and the command surface.
QSeries compute_series(SeriesKind kind, RouteId route, std::int64_t N,
                       SigmaConvention convention = SigmaConvention::TriangularExponent);

struct IdentityReport {
    SeriesKind kind;
    RouteId lhs;
    RouteId rhs;
    std::int64_t compared_up_to = -1;
    bool equal = false;
    std::optional<std::int64_t> mismatch_exponent;
    std::int64_t mismatch_lhs = 0;
    std::int64_t mismatch_rhs = 0;
    std::chrono::duration<double> elapsed{0};
};

IdentityReport verify(SeriesKind kind, RouteId lhs, RouteId rhs, std::int64_t N);

// q^2 sigma(q^24) + sigma*(q^24) against q * (combined indefinite series
// for the real field), all exponents shifted nonnegative.
IdentityReport sigma_identity_check(std::int64_t N);

// The modularity-side equality at full precision: the eta quotient against
// the 1 mod 24 part of the imaginary-field congruence route, both at the
// Theta exponent scale, through q^N (the Sturm bound for the full-scale
// run is 294912).
IdentityReport sturm_scale_check(std::int64_t theta_terms);

}  // namespace threefield

#endif
