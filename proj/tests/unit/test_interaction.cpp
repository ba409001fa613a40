#include "nullwave/interaction/analysis.hpp"
#include "nullwave/interaction/oracle.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <set>

using namespace nullwave;

namespace {

const FormKey kP2{FormKind::Quasilinear, 2};
const FormKey kH2{FormKind::Semilinear, 2};

// P2(v1, Q(P2(v3, v4)))
TermPtr nested_p2() { return apply_form(kP2, {leaf(1), causal_inverse(apply_form(kP2, {leaf(3), leaf(4)}))}); }

RhoRational rho_pow(std::int64_t e, Rational c = 1) { return RhoRational::monomial(c, e); }

}  // namespace

TEST_CASE("term trees", "[interaction]") {
    const TermPtr t = nested_p2();
    CHECK(t->to_string() == "P2(v1,Q(P2(v3,v4)))");
    CHECK(t->wave_mask() == 0b1101);
    CHECK(t->form_count() == 2);
    CHECK_THROWS_AS(apply_form(kP2, {leaf(1)}), std::invalid_argument);
}

TEST_CASE("enumeration of the five groups", "[interaction]") {
    const std::size_t unsplit[] = {24, 72, 48, 24, 96};
    const std::size_t split[] = {48, 288, 192, 192, 768};
    const int shapes[] = {1, 3, 2, 1, 4};
    for (int k = 1; k <= 5; ++k) {
        INFO("group " << k);
        CHECK(shape_count(k) == shapes[k - 1]);
        CHECK(enumerate_H(k, false).size() == unsplit[k - 1]);
        CHECK(enumerate_H(k).size() == split[k - 1]);
    }
    CHECK(enumerate_H(2).front().to_string() == "+P3(v1,v2,Q(P2(v3,v4)))");
    CHECK(enumerate_H(5).front().to_string() == "-P2(v1,Q(P2(v2,Q(P2(v3,v4)))))");

    const auto all = enumerate_all_terms();
    CHECK(all.size() == 1488);
    std::set<std::string> distinct;
    for (const auto& t : all) distinct.insert(t.to_string());
    CHECK(distinct.size() == all.size());
    CHECK_THROWS_AS(enumerate_H(0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_H(6), std::invalid_argument);
}

TEST_CASE("exact evaluation of a nested quasilinear term", "[interaction]") {
    InteractionEvaluator ev(standard_config());
    const SymbolValue v = ev.eval(*nested_p2());
    CHECK(v.i_power == 4);
    CHECK(v.prefactor_2pi == 1);
    const RhoRational entry =
        (rho_pow(40, -4) - rho_pow(20, 4) - RhoRational(1)) / RhoRational(8);
    const Sym2T r = v.realized();
    CHECK(r(0, 0) == entry);
    CHECK(r(0, 1) == -entry);
    CHECK(r(2, 2).is_zero());
    CHECK(v.total_covector == standard_config().zeta(1) + standard_config().zeta(3) + standard_config().zeta(4));
    CHECK(eval_term(*nested_p2(), standard_config()).matrix == v.matrix);
}

TEST_CASE("odd powers of the imaginary unit are rejected", "[interaction]") {
    SymbolValue v;
    v.i_power = 3;
    CHECK_THROWS_AS(v.realized(), std::logic_error);
}

TEST_CASE("characteristic denominators are reported", "[interaction]") {
    InteractionEvaluator ev(standard_config());
    try {
        ev.eval(*causal_inverse(leaf(1)));
        FAIL("expected CharacteristicDenominator");
    } catch (const CharacteristicDenominator& e) {
        CHECK(e.waves() == std::vector<int>{1});
    }
}

TEST_CASE("evaluation is linear in the amplitudes", "[interaction]") {
    const NullConfig c = standard_config();
    std::array<Sym2T, 4> doubled{c.polarization(1), c.polarization(2), c.polarization(3), c.polarization(4)};
    doubled[0] = RhoRational(2) * doubled[0];
    InteractionEvaluator base(c), scaled(c, doubled);
    const TermPtr t = apply_form(kH2, {leaf(1), causal_inverse(apply_form(kP2, {leaf(3), leaf(4)}))});
    CHECK(scaled.eval(*t).matrix == RhoRational(2) * base.eval(*t).matrix);
}

TEST_CASE("every summand carries an even power of i", "[interaction]") {
    InteractionEvaluator ev(standard_config());
    for (const auto& t : enumerate_H(3)) CHECK(ev.eval(t).i_power % 2 == 0);
}

TEST_CASE("pair basis coordinates", "[interaction]") {
    const NullConfig c = standard_config();
    const Sym2T m = RhoRational(3) * c.polarization(2) + RhoRational(Rational(1, 2)) * sym_outer(c.zeta(1), c.zeta(4));
    const Mat4 k = pair_basis_coordinates(m, c.zetas());
    CHECK(k(1, 1) == RhoRational(3));
    CHECK(k(0, 3) == RhoRational(Rational(1, 2)));
    CHECK(k(3, 0) == k(0, 3));
    CHECK(k(0, 0).is_zero());
}

TEST_CASE("floating point oracle agrees with the exact engine", "[interaction][oracle]") {
    const NullConfig c = standard_config();
    InteractionEvaluator ev(c);
    const auto cascade = eval_I_cancellation(ev);
    for (double rho : {2.0, 3.0}) {
        for (const auto& e : cascade.entries) {
            const auto approx = oracle::evaluate(*e.tree, c, rho);
            const auto cmp = oracle::compare(ev.eval(*e.tree).realized(), approx, rho, 0.0);
            INFO(e.tree->to_string() << " rho=" << rho << " rel " << cmp.max_rel_error);
            CHECK(cmp.agrees);
        }
    }
    const auto m = oracle::evaluate(*nested_p2(), c, 2.0);
    CHECK(m[0] == Catch::Approx(-4398050705409.0 / 8).epsilon(1e-12));
    CHECK_THROWS_AS(oracle::evaluate(*nested_p2(), c, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(oracle::evaluate(*nested_p2(), c, 4.5), std::invalid_argument);
}

TEST_CASE("oracle comparison detects disagreement", "[oracle]") {
    const Sym2T exact = standard_config().polarization(1);
    oracle::Matrix approx{};
    approx[0] = 1;
    approx[2] = 1;
    approx[8] = 1;
    approx[10] = 1.5;
    const auto cmp = oracle::compare(exact, approx, 2.0, 0.0);
    CHECK_FALSE(cmp.agrees);
    CHECK(cmp.worst_row == 2);
    CHECK(cmp.worst_col == 2);
    CHECK(cmp.max_abs_error == Catch::Approx(0.5));
}

TEST_CASE("leading parts", "[analysis]") {
    const LeadingPart p = leading_part(rho_pow(30, 3) - rho_pow(20));
    CHECK(p.order == 30);
    CHECK(p.to_string() == "3*rho^30 - rho^20");
}

TEST_CASE("cascade cancellation", "[analysis]") {
    InteractionEvaluator ev(standard_config());
    const auto cc = eval_I_cancellation(ev);
    const char* labels = "abcdef";
    for (std::size_t n = 0; n < 6; ++n) CHECK(cc.entries[n].label == labels[n]);
    CHECK(cc.entries[0].a4_coefficient.tail.coefficient(30) == Rational(-1, 4));
    CHECK(cc.entries[3].a4_coefficient.tail.coefficient(20) == Rational(-1, 2));
    CHECK(cc.sum_a4_coefficient.to_string() == "11/8 + 3/16*rho^-20");
    CHECK(cc.sum_coefficient_order == 0);
}

TEST_CASE("items of the leading-order analysis", "[analysis]") {
    InteractionEvaluator ev(standard_config());
    const std::int64_t orders[] = {40, 40, 40, 20, 40, 40, 40, 40};
    const std::size_t counts[] = {2, 2, 4, 6, 4, 8, 4, 4};
    for (int n = 1; n <= 8; ++n) {
        const ItemResult r = item_value(n, ev);
        std::size_t terms = 0;
        for (const auto& p : r.parts) terms += p.terms.size();
        INFO("item " << n);
        CHECK(r.entry_order == orders[n - 1]);
        CHECK(terms == counts[n - 1]);
        CHECK_FALSE(r.description.empty());
    }
    CHECK_THROWS_AS(item_tree_strings(9), std::invalid_argument);
    CHECK(item_of("P2(v3,Q(P2(v1,Q(H2(v2,v4)))))") == 7);
    CHECK_FALSE(item_of("P2(v1,v2)").has_value());
}

TEST_CASE("order-40 classification", "[analysis]") {
    InteractionEvaluator ev(standard_config());
    const Classification cl = classify_rho40_terms(ev);
    CHECK(cl.scanned == 1488);
    CHECK(cl.by_item.at(0).size() == 4);
    CHECK_FALSE(cl.outside_is_empty());
    CHECK(cl.highest_outside == 40);
}

TEST_CASE("the exact total and the two published forms", "[analysis]") {
    InteractionEvaluator ev(standard_config());
    const TotalSymbol t = total_symbol(ev);
    CHECK(t.matrix.is_zero());
    CHECK_FALSE(t.matches_formula);
    CHECK_FALSE(t.matches_display);
    CHECK(t.stated_formula != t.displayed_matrix);
    CHECK(t.stated_formula(0, 2) == rho_pow(40, Rational(3, 8)));
}
