#include "nullwave/gauge/constraints.hpp"
#include "nullwave/geometry/null_config.hpp"

#include <catch_amalgamated.hpp>

using namespace nullwave;

TEST_CASE("rank-one polarizations satisfy both constraints", "[gauge]") {
    const NullConfig c = standard_config();
    for (int i = 1; i <= 4; ++i) {
        CHECK(harmonic_gauge_residual(c.metric(), c.zeta(i), c.polarization(i)).is_zero());
        CHECK(conservation_residual(c.metric(), c.zeta(i), c.polarization(i)).is_zero());
    }
}

TEST_CASE("a trace part violates the gauge condition", "[gauge]") {
    const CoVec4 xi(1, 1, 0, 0);
    Mat4 id = Mat4::identity();
    id(0, 0) = RhoRational(-1);
    const CoVec4 r = harmonic_gauge_residual(Metric4(), xi, Sym2T(id));
    // -xi_mu + 1/2 xi_mu * trace(h^-1 h) = -xi + 2 xi = xi
    CHECK(r == xi);
}

TEST_CASE("scalar and Maxwell residuals", "[gauge]") {
    const NullConfig c = standard_config();
    const CoVec4 eta = c.zeta(1) + c.zeta(2);
    const Sym2T a = sym_outer(c.zeta(1), c.zeta(2));
    const RhoRational b = RhoRational(Rational(-1, 2)) * pairing(c.metric(), c.zeta(1), c.zeta(2));
    CHECK(scalar_conservation_residual(c.metric(), eta, a, {b}, {eta}).is_zero());
    CHECK_THROWS_AS(scalar_conservation_residual(c.metric(), eta, a, {}, {}), std::invalid_argument);
    CHECK_THROWS_AS(scalar_conservation_residual(c.metric(), eta, a, {b, b}, {eta}), std::invalid_argument);

    CHECK(maxwell_conservation_residual(CoVec4(1, 0, 1, 0), CoVec4(1, 0, -1, 0)).is_zero());
    CHECK(maxwell_conservation_residual(CoVec4(1, 0, 1, 0), CoVec4(1, 0, 0, 0)) == RhoRational(1));
}

TEST_CASE("constraint space dimensions", "[gauge]") {
    std::mt19937_64 rng(11);
    for (int n = 0; n < 25; ++n) {
        const CoVec4 xi = random_null_covector(rng);
        REQUIRE(norm_sq(Metric4(), xi).is_zero());
        REQUIRE_FALSE(xi.is_zero());
        for (auto kind : {ConstraintKind::HarmonicGauge, ConstraintKind::ConservationLaw}) {
            const auto d = constraint_space_dim(kind, Metric4(), xi);
            CHECK(d.fiber_dimension == 10);
            CHECK(d.rank == 4);
            CHECK(d.dimension == 6);
        }
        CHECK(constraint_space_dim(ConstraintKind::MaxwellConservation, Metric4(), xi).dimension == 3);
    }
    const auto zero = constraint_space_dim(ConstraintKind::HarmonicGauge, Metric4(), CoVec4());
    CHECK(zero.degenerate);
    CHECK(zero.dimension == 10);
}

TEST_CASE("exact rank", "[gauge]") {
    const RhoRational r = RhoRational::rho();
    CHECK(exact_rank({{1, r}, {r, r * r}}) == 1);
    CHECK(exact_rank({{1, r}, {r, 1}}) == 2);
    CHECK(exact_rank({{0, 0}, {0, 0}}) == 0);
}

TEST_CASE("constraint names", "[gauge]") {
    CHECK(to_string(ConstraintKind::HarmonicGauge) != to_string(ConstraintKind::ConservationLaw));
}
