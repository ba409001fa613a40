#include "nullwave/interaction/term.hpp"
#include "nullwave/orders/order_calculus.hpp"

#include <catch_amalgamated.hpp>

using namespace nullwave;

namespace {

MicroOrder wave(const Rational& mu) { return {mu - Rational(1, 2), Lagrangian::WaveFlowout}; }

std::array<MicroOrder, 4> four(const Rational& mu) { return {wave(mu), wave(mu), wave(mu), wave(mu)}; }

}  // namespace

TEST_CASE("distorted plane waves", "[orders]") {
    ProofTrace t;
    const auto [flowout, conormal] = distorted_wave_order({Rational(-17), Lagrangian::SourceConormal}, &t);
    CHECK(flowout == MicroOrder{Rational(-37, 2), Lagrangian::WaveFlowout});
    CHECK(conormal == MicroOrder{Rational(-19), Lagrangian::SourceConormal});
    REQUIRE(t.lines().size() == 1);
    CHECK(t.lines()[0].rule == "distorted-wave");
    CHECK(flowout.to_string() == "I^{-37/2}(Lambda_i)");
    CHECK_THROWS_AS(distorted_wave_order({Rational(-17), Lagrangian::WaveFlowout}), std::invalid_argument);
}

TEST_CASE("interaction pattern table", "[orders]") {
    const auto& patterns = interaction_patterns();
    REQUIRE(patterns.size() == 5);
    const Rational offsets[] = {Rational(3, 2), Rational(1, 2), Rational(1, 2), Rational(-1, 2), Rational(-1, 2)};
    for (std::size_t n = 0; n < 5; ++n) {
        const auto& p = patterns[n];
        CHECK(p.number == static_cast<int>(n + 1));
        CHECK(p.offset == offsets[n]);
        ProofTrace t;
        const MicroOrder m = interaction_order(four(-18), p.derivative_count, p.inner_q_count, &t);
        CHECK(m.value - 4 * wave(-18).value == p.offset);
        CHECK(m.lagrangian == Lagrangian::InteractionFlowout);
        CHECK_FALSE(t.lines().empty());
    }
}

TEST_CASE("two-derivative and lower-derivative orders", "[orders]") {
    for (const Rational mu : {Rational(-18), Rational(-20), Rational(-35, 2)}) {
        CHECK(interaction_order(four(mu), 2, 0).value == 4 * mu + Rational(3, 2));
        CHECK(interaction_order(four(mu), 6, 2).value == 4 * mu + Rational(3, 2));
        CHECK(interaction_order(four(mu), 1, 0).value == 4 * mu + Rational(1, 2));
    }
    CHECK_THROWS_AS(interaction_order(four(-18), -1, 0), std::invalid_argument);
    CHECK_THROWS_AS(interaction_order(four(-18), 0, -1), std::invalid_argument);
}

TEST_CASE("restriction to a curve", "[orders]") {
    ProofTrace t;
    const MicroOrder r = restriction_order({Rational(-19), Lagrangian::InteractionFlowout}, &t);
    CHECK(r.value == Rational(-73, 4));
    CHECK(r.lagrangian == Lagrangian::PointConormal);
    CHECK(t.lines().size() == 1);
    CHECK_THROWS_AS(restriction_order({Rational(1), Lagrangian::PointConormal}), std::invalid_argument);
    CHECK_THROWS_AS(restriction_order({Rational(1), Lagrangian::Paired}), std::invalid_argument);
}

TEST_CASE("geodesic ledger", "[orders]") {
    const GeodesicLedger g = geodesic_perturbation_orders(Rational(-20));
    CHECK(g.christoffel.value == -19);
    CHECK(g.restricted.value == Rational(-73, 4));
    CHECK(g.solved.value == Rational(-81, 4));
    CHECK(g.pullback_term.value == Rational(-77, 4));
    CHECK(g.coordinate_term.value == Rational(-20) - 1 + Rational(3, 4));
    CHECK(g.jacobian_term_vanishes);
    CHECK(g.dominance == 1);
    CHECK(g.trace.lines().size() == 7);
}

TEST_CASE("rule registry", "[orders]") {
    CHECK(order_rules().size() == 11);
    CHECK(order_rule("restriction").citation.size() > 0);
    CHECK_THROWS_AS(order_rule("no-such-rule"), std::out_of_range);
    CHECK(kSourceOrderBound == -17);
}

TEST_CASE("tree counts and degree bounds", "[orders]") {
    const FormKey p2{FormKind::Quasilinear, 2};
    const TermPtr t = apply_form(p2, {leaf(1), causal_inverse(apply_form(p2, {leaf(2), causal_inverse(apply_form(
                                                                                     p2, {leaf(3), leaf(4)}))}))});
    const TreeCounts c = tree_counts(*t);
    CHECK(c.derivative_count == 6);
    CHECK(c.inner_q_count == 2);
    CHECK(rho_order_bound(*t, standard_config()) == 50);
    CHECK(rho_order_bound(*leaf(4), standard_config()) == 20);
}

TEST_CASE("derivative cap on the derived forms", "[orders]") { CHECK(derivative_cap_violations().empty()); }

TEST_CASE("lagrangian names", "[orders]") {
    CHECK(to_string(Lagrangian::InteractionFlowout) == "Lambda_q0");
    CHECK(to_string(Lagrangian::Paired) == "(N*Y, Lambda)");
}
