#include "nullwave/conformal/weights.hpp"
#include "nullwave/interaction/term.hpp"

#include <catch_amalgamated.hpp>

using namespace nullwave;

TEST_CASE("pure powers", "[conformal]") {
    CHECK(pure_power_exponent(Rational(1, 8), Rational(2)) == -3);
    CHECK(pure_power_exponent(Rational(81), Rational(3)) == 4);
    CHECK(pure_power_exponent(Rational(1), Rational(5)) == 0);
    CHECK_FALSE(pure_power_exponent(Rational(3), Rational(2)).has_value());
    CHECK_FALSE(pure_power_exponent(Rational(-4), Rational(2)).has_value());
}

TEST_CASE("scaling degrees of the forms", "[conformal]") {
    for (int k = 2; k <= 4; ++k) {
        CHECK(form_scaling_degree({FormKind::Quasilinear, k}).exponent == -2 * k);
        CHECK(form_scaling_degree({FormKind::Semilinear, k}).exponent == -2 * k);
        CHECK(monomial_scaling_degree(FormFamily::instance().semilinear(k)).exponent == -2 * k);
    }
    CHECK(form_scaling_degree({FormKind::WaveOperator, 1}).exponent == -2);
}

TEST_CASE("mixed monomials are not homogeneous", "[conformal]") {
    RawMonomial two_inverse{Rational(1), {RawFactor::inverse_metric(2, 3), RawFactor::inverse_metric(4, 5),
                                          RawFactor::field(0, 0, 2, {4}), RawFactor::field(1, 1, 3, {5})}};
    RawMonomial three_inverse{Rational(1), {RawFactor::inverse_metric(2, 3), RawFactor::inverse_metric(4, 5),
                                            RawFactor::inverse_metric(6, 7), RawFactor::field(0, 0, 2, {4, 6}),
                                            RawFactor::field(1, 1, 3, {5, 7})}};
    CHECK(monomial_scaling_degree(FormalTensorPoly::from_raw(2, 2, {two_inverse})).exponent == -4);
    CHECK(monomial_scaling_degree(FormalTensorPoly::from_raw(2, 2, {three_inverse})).exponent == -6);
    CHECK_THROWS_AS(monomial_scaling_degree(FormalTensorPoly::from_raw(2, 2, {two_inverse, three_inverse})),
                    HomogeneityError);
}

TEST_CASE("weight chain", "[conformal]") {
    const auto chain = canonical_weight_chain();
    REQUIRE(chain.size() == 7);
    CHECK(compose_total_weight(chain).exponent == -9);
    int suppressed = 0;
    for (const auto& f : chain) suppressed += f.suppressed;
    CHECK(suppressed == 1);
    CHECK(chain.back().kind == FactorKind::QFlowoutTarget);
    CHECK(to_string(FactorKind::Coefficient) == "coefficient");
}

TEST_CASE("causal inverse weight", "[conformal]") {
    CHECK(q_diag_weight().exponent == 2);
    CHECK(q_diag_weight_from_symbol(Rational(2)).exponent == 2);
    CHECK(q_diag_weight_from_symbol(Rational(5, 3)).exponent == 2);
}

TEST_CASE("end-to-end scaling of complete terms", "[conformal]") {
    const NullConfig c = standard_config();
    for (int k = 1; k <= 5; ++k) {
        const auto terms = enumerate_H(k);
        const ScalingCheck s = end_to_end_scaling(terms.front(), c, Rational(3));
        INFO(terms.front().to_string());
        if (s.nonzero) CHECK(s.exponent == -12);
    }
    const ScalingCheck s = end_to_end_scaling(enumerate_H(5).front(), c, Rational(2));
    CHECK(s.nonzero);
    CHECK(s.exponent == -12);
}
