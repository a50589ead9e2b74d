#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "threefield/identity.hpp"
#include "threefield/serialize.hpp"

using namespace threefield;

namespace {

std::vector<std::int64_t> take(const QSeries& s, std::int64_t upto) {
    std::vector<std::int64_t> out;
    for (std::int64_t n = 0; n <= upto; ++n) out.push_back(s.coeff(n));
    return out;
}

const std::vector<std::int64_t> kRho8{1, 3, 1, -2, 2, 1, -4, -1};
const std::vector<std::int64_t> kRhoStar9{2, -2, -2, 0, -2, 4, 2, 2, -2};

}  // namespace

TEST_CASE("rho leading coefficients via every route") {
    for (RouteId r : {RouteId::EtaQuotient, RouteId::PartitionProduct, RouteId::K1Congruence,
                      RouteId::K2Congruence, RouteId::K3Indefinite}) {
        QSeries rho = rho_via(r, 7);
        CHECK_MESSAGE(take(rho, 7) == kRho8, route_name(r));
    }
}

TEST_CASE("rhostar leading coefficients via the three field routes") {
    for (RouteId r : {RouteId::K1Congruence, RouteId::K2Congruence, RouteId::K3Indefinite}) {
        QSeries rs = rhostar_via(r, 8);
        CHECK_MESSAGE(take(rs, 8) == kRhoStar9, route_name(r));
    }
}

TEST_CASE("all pairwise rho route verifications agree to 2000") {
    const std::int64_t N = 2000;
    std::vector<RouteId> routes{RouteId::K1Congruence, RouteId::K2Congruence,
                                RouteId::K3Indefinite, RouteId::EtaQuotient,
                                RouteId::PartitionProduct};
    std::vector<QSeries> series;
    for (RouteId r : routes) series.push_back(rho_via(r, N));
    for (std::size_t a = 0; a < routes.size(); ++a) {
        for (std::size_t b = a + 1; b < routes.size(); ++b) {
            std::int64_t where = -1;
            bool eq = qs_equal_upto(series[a], series[b], N, &where);
            CHECK_MESSAGE(eq, route_name(routes[a]), " vs ", route_name(routes[b]),
                          " first mismatch at ", where);
        }
    }
}

TEST_CASE("rhostar route agreement to 2000") {
    const std::int64_t N = 2000;
    QSeries ref = rhostar_via(RouteId::K1Congruence, N);
    CHECK(qs_equal_upto(ref, rhostar_via(RouteId::K2Congruence, N), N));
    CHECK(qs_equal_upto(ref, rhostar_via(RouteId::K3Indefinite, N), N));
}

TEST_CASE("theta support law and definitional decomposition") {
    const std::int64_t N = 1000;
    for (RouteId r : {RouteId::K1Congruence, RouteId::K2Congruence, RouteId::K3Indefinite}) {
        QSeries theta = theta_full(r, N);
        CHECK(theta.coeff(1) == 1);
        for (std::int64_t n = 0; n <= N; ++n)
            if (theta.coeff(n) != 0) CHECK((n % 24 == 1 || n % 24 == 5));
        QSeries rebuilt =
            qs_add(qs_shift(qs_substitute_power(rho_via(r, (N - 1) / 24), 24), 1),
                   qs_shift(qs_substitute_power(rhostar_via(r, (N - 5) / 24), 24), 5));
        CHECK(qs_equal_upto(theta, rebuilt, N));
    }
}

TEST_CASE("theta_full rejects non-field routes") {
    CHECK_THROWS_AS(theta_full(RouteId::EtaQuotient, 100), InvalidInput);
    CHECK_THROWS_AS(rhostar_via(RouteId::PartitionProduct, 10), InvalidInput);
    CHECK_THROWS_AS(rho_via(RouteId::SigmaBqf, 10), InvalidInput);
}

TEST_CASE("negative depth yields the empty series") {
    CHECK(rho_via(RouteId::EtaQuotient, -1).is_zero());
    CHECK(rhostar_via(RouteId::K1Congruence, -3).is_zero());
    CHECK(theta_full(RouteId::K1Congruence, -1).is_zero());
    auto [s, ss] = sigma_pair_bqf(-2);
    CHECK(s.is_zero());
    CHECK(ss.is_zero());
}

TEST_CASE("verify reports") {
    IdentityReport same = verify(SeriesKind::Rho, RouteId::EtaQuotient, RouteId::EtaQuotient, 50);
    CHECK(same.equal);
    CHECK_FALSE(same.mismatch_exponent.has_value());
    CHECK(same.compared_up_to == 50);

    IdentityReport cross = verify(SeriesKind::Rho, RouteId::EtaQuotient, RouteId::K1Congruence, 200);
    CHECK(cross.equal);

    IdentityReport sigma = verify(SeriesKind::Sigma, RouteId::SigmaHypergeometric,
                                  RouteId::SigmaBqf, 150);
    CHECK(sigma.equal);
}

TEST_CASE("sigma identity check") {
    IdentityReport rep = sigma_identity_check(150);
    CHECK(rep.equal);
    CHECK(rep.compared_up_to >= 24 * 150);
}

TEST_CASE("sturm-scale check at a modest depth") {
    IdentityReport rep = sturm_scale_check(5000);
    CHECK(rep.equal);
    CHECK(rep.compared_up_to == 5000);
}

TEST_CASE("route and series names round-trip") {
    for (RouteId r : {RouteId::K1Congruence, RouteId::K2Congruence, RouteId::K3Indefinite,
                      RouteId::EtaQuotient, RouteId::PartitionProduct, RouteId::SigmaBqf,
                      RouteId::SigmaHypergeometric})
        CHECK(route_from_name(route_name(r)) == r);
    for (SeriesKind k : {SeriesKind::Theta, SeriesKind::Rho, SeriesKind::RhoStar,
                         SeriesKind::Sigma, SeriesKind::SigmaStar})
        CHECK(series_from_name(series_name(k)) == k);
    CHECK_FALSE(route_from_name("nope").has_value());
}

TEST_CASE("series JSON round trip") {
    QSeries rho = rho_via(RouteId::EtaQuotient, 40);
    QSeries back = series_from_json(series_to_json(rho, "rho"));
    CHECK(back.offset() == rho.offset());
    CHECK(back.truncation() == rho.truncation());
    CHECK(qs_equal_upto(back, rho, rho.truncation()));
}

TEST_CASE("csv emission") {
    QSeries rho = rho_via(RouteId::EtaQuotient, 7);
    std::string csv = series_to_csv(rho, false);
    CHECK(csv.find("0,1\n") == 0);
    CHECK(csv.find("7,-1\n") != std::string::npos);

    QSeries theta = theta_full(RouteId::K1Congruence, 49);
    std::string sparse = series_to_csv(theta, true);
    CHECK(sparse.find("1,1\n") == 0);
    CHECK(sparse.find("0,0") == std::string::npos);
}
