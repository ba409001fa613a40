#include "nullwave/geometry/null_config.hpp"

#include <catch_amalgamated.hpp>

using namespace nullwave;

namespace {

RhoRational rho_pow(std::int64_t e, Rational c = 1) { return RhoRational::monomial(c, e); }

FlatPoint point(long t, long x, long y, long z) { return FlatPoint{{Rational(t), Rational(x), Rational(y), Rational(z)}}; }

}  // namespace

TEST_CASE("standard configuration", "[geometry]") {
    const NullConfig c = standard_config();
    CHECK(c.zeta(1) == CoVec4(1, 0, 1, 0));
    CHECK(c.zeta(2) == CoVec4(-1, 0, 0, -1));
    CHECK(c.zeta(3) == CoVec4(rho_pow(-10, Rational(1, 2)), rho_pow(-10, Rational(1, 2)), 0, 0));
    CHECK(c.zeta(4) == CoVec4(rho_pow(10), -rho_pow(10), 0, 0));
    for (int i = 1; i <= 4; ++i) CHECK(norm_sq(c.metric(), c.zeta(i)).is_zero());
    CHECK(norm_sq(c.metric(), c.sum()).is_zero());
}

TEST_CASE("pairing table values", "[geometry]") {
    const auto t = pairing_table(standard_config());
    REQUIRE(t.size() == 6);
    const RhoRational expected[] = {1, -rho_pow(-10, Rational(1, 2)), -rho_pow(10), rho_pow(-10, Rational(1, 2)),
                                    rho_pow(10), -1};
    for (std::size_t n = 0; n < 6; ++n) {
        INFO("pair " << t[n].i << t[n].j);
        CHECK(t[n].value == expected[n]);
    }
    CHECK(t[2].i == 1);
    CHECK(t[2].j == 4);
}

TEST_CASE("triple norms", "[geometry]") {
    const auto n = triple_norm_table(standard_config());
    REQUIRE(n.size() == 4);
    CHECK(n[0].waves == std::array<int, 3>{1, 2, 3});
    CHECK(n[0].value == RhoRational(2));
    CHECK(n[3].value == rho_pow(10, 2) - RhoRational(2) + rho_pow(-10));
    // |S - zeta_k|^2 = -2 h(S, zeta_k) for null S, so the four norms sum to -2|S|^2 = 0.
    RhoRational sum;
    for (const auto& e : n) sum += e.value;
    CHECK(sum.is_zero());
}

TEST_CASE("null scale solver", "[geometry]") {
    const auto tilde = tilde_zetas();
    CHECK(solve_null_scale(1, -1, rho_pow(10), tilde) == rho_pow(-10, Rational(-1, 2)));
    CHECK(solve_null_scale(1, -1, RhoRational(1), tilde) == RhoRational(Rational(-1, 2)));
    // alpha4 = 0 leaves the alpha3 coefficient h(tilde3, tilde1 - tilde2) = 0.
    CHECK_THROWS_AS(solve_null_scale(1, -1, RhoRational(), tilde), ConfigError);
}

TEST_CASE("configurations are validated", "[geometry]") {
    auto z = standard_config().zetas();
    z[0] = CoVec4(1, 1, 1, 0);
    CHECK_THROWS_AS(NullConfig(z), ConfigError);
    z = standard_config().zetas();
    z[3] = CoVec4(rho_pow(10), rho_pow(10), 0, 0);
    CHECK_THROWS_AS(NullConfig(z), ConfigError);
    z = standard_config().zetas();
    z[2] = CoVec4();
    CHECK_THROWS_AS(NullConfig(z), ConfigError);
}

TEST_CASE("causal relation in the flat model", "[geometry]") {
    CHECK(causally_unrelated(point(0, 0, 0, 0), point(0, 1, 0, 0)));
    CHECK_FALSE(causally_unrelated(point(0, 0, 0, 0), point(1, 1, 0, 0)));
    CHECK_FALSE(causally_unrelated(point(0, 0, 0, 0), point(-2, 1, 0, 0)));
    CHECK_FALSE(causally_unrelated(point(0, 0, 0, 0), point(0, 0, 0, 0)));
}

TEST_CASE("backtraced sources at rho = 2", "[geometry]") {
    const std::array<Rational, 4> ones{Rational(1), Rational(1), Rational(1), Rational(1)};
    const Backtrace bt = backtrace_sources(FlatPoint{}, standard_config(), Rational(2), ones);
    CHECK(bt.sources[0].to_string() == "(-1, 0, 1, 0)");
    CHECK(bt.sources[1].to_string() == "(-1, 0, 0, 1)");
    CHECK(bt.sources[2].to_string() == "(-1, 1, 0, 0)");
    CHECK(bt.sources[3].to_string() == "(-1, -1, 0, 0)");
    CHECK(bt.pairs.size() == 6);
    CHECK(bt.all_unrelated());
    CHECK(bt.tangents_independent);
    for (const auto& d : bt.directions) CHECK(d[0] == 1);

    CHECK_THROWS_AS(backtrace_sources(FlatPoint{}, standard_config(), Rational(1), ones), std::invalid_argument);
    auto negative = ones;
    negative[2] = -1;
    CHECK_THROWS_AS(backtrace_sources(FlatPoint{}, standard_config(), Rational(2), negative), std::invalid_argument);
}
