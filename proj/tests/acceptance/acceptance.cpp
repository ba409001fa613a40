// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance                 run all thirteen, exit 1 if any fails
//   acceptance --criterion N   run one

#include "nullwave/conformal/weights.hpp"
#include "nullwave/gauge/constraints.hpp"
#include "nullwave/geometry/null_config.hpp"
#include "nullwave/interaction/analysis.hpp"
#include "nullwave/interaction/oracle.hpp"
#include "nullwave/orders/order_calculus.hpp"
#include "nullwave/ricci/expansion.hpp"
#include "nullwave/ricci/symbol.hpp"

#include <chrono>
#include <cmath>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

using namespace nullwave;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

struct Criterion {
    int id;
    const char* title;
    double limit_seconds;
    std::function<Outcome()> run;
};

RhoRational mono(Rational c, std::int64_t e) { return RhoRational::monomial(c, e); }

Rational coefficient_at(const RhoRational& x, std::int64_t e) {
    if (x.is_zero() || infinity_degree(x) < e) return Rational(0);
    return expand_at_infinity(x, static_cast<int>(infinity_degree(x) - e) / 10 + 2).coefficient(e);
}

std::string str(const Rational& r) { return to_string(r); }

Outcome pairing_table_values() {
    Outcome o;
    const RhoRational expected[] = {RhoRational(1),           -mono(Rational(1, 2), -10), -mono(1, 10),
                                    mono(Rational(1, 2), -10), mono(1, 10),               RhoRational(-1)};
    const auto table = pairing_table(standard_config());
    o.require(table.size() == 6, "six pairings");
    for (std::size_t n = 0; n < table.size() && n < 6; ++n)
        o.require(table[n].value == expected[n], "h(zeta" + std::to_string(table[n].i) + ",zeta" +
                                                     std::to_string(table[n].j) + ") = " + table[n].value.to_string());
    if (o.pass) o.detail = "six pairings exact";
    return o;
}

Outcome triple_norms() {
    Outcome o;
    const auto norms = triple_norm_table(standard_config());
    const RhoRational n123 = norms[0].value;
    o.require(coefficient_at(n123, 0) == 2 && infinity_degree(n123) == 0, "constant term of |z1+z2+z3|^2");
    o.require(infinity_degree(n123 - RhoRational(2)) <= -20, "tail of |z1+z2+z3|^2");
    const auto tail = expand_at_infinity(norms[3].value, 2);
    o.require(tail.sum() == LaurentPoly::from_terms({{10, Rational(2)}, {0, Rational(-2)}}),
              "leading part of |z2+z3+z4|^2 is " + tail.to_string());
    if (o.pass) o.detail = "|z1+z2+z3|^2 = " + n123.to_string() + ", |z2+z3+z4|^2 = " + tail.to_string();
    return o;
}

Outcome null_scale() {
    Outcome o;
    const RhoRational a3 = solve_null_scale(1, -1, mono(1, 10), tilde_zetas());
    o.require(a3 == mono(Rational(-1, 2), -10), "alpha3 = " + a3.to_string());
    if (o.pass) o.detail = "alpha3 = " + a3.to_string();
    return o;
}

Outcome gauge_and_dimensions() {
    Outcome o;
    const NullConfig c = standard_config();
    for (int i = 1; i <= 4; ++i) {
        o.require(harmonic_gauge_residual(c.metric(), c.zeta(i), c.polarization(i)).is_zero(),
                  "gauge residual of wave " + std::to_string(i));
        o.require(conservation_residual(c.metric(), c.zeta(i), c.polarization(i)).is_zero(),
                  "conservation residual of wave " + std::to_string(i));
    }
    std::mt19937_64 rng(4);
    int ok = 0;
    for (int n = 0; n < 100; ++n) {
        const CoVec4 xi = random_null_covector(rng);
        ok += constraint_space_dim(ConstraintKind::ConservationLaw, Metric4(), xi).dimension == 6 &&
              constraint_space_dim(ConstraintKind::HarmonicGauge, Metric4(), xi).dimension == 6;
    }
    o.require(ok == 100, std::to_string(ok) + "/100 covectors with dimension 6");
    if (o.pass) o.detail = "residuals zero; dimension 6 for 100/100 random light-like covectors";
    return o;
}

Outcome derived_forms() {
    Outcome o;
    const auto& f = FormFamily::instance();
    for (int k = 2; k <= 4; ++k)
        o.require(f.quasilinear(k) == closed_form_quasilinear(k), "P" + std::to_string(k) + " differs from closed form");
    o.require(f.semilinear(2) == closed_form_quadratic_semilinear(), "H2 differs from closed form");
    if (o.pass) o.detail = "P2, P3, P4, H2 structurally equal";
    return o;
}

Outcome rank_one_identities() {
    Outcome o;
    const NullConfig c = standard_config();
    const Metric4& h = c.metric();
    int checked = 0;
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
            if (i == j) continue;
            const RhoRational p = pairing(h, c.zeta(i), c.zeta(j));
            o.require(sandwich(h, c.polarization(i), c.zeta(j)) == p * p, "quadratic sandwich " + std::to_string(i) +
                                                                              std::to_string(j));
            for (int l = 1; l <= 4; ++l) {
                if (l == i || l == j) continue;
                o.require(double_sandwich(h, c.polarization(i), c.polarization(j), c.zeta(l)) ==
                              pairing(h, c.zeta(i), c.zeta(l)) * pairing(h, c.zeta(j), c.zeta(l)) * p,
                          "cubic sandwich");
                ++checked;
            }
            if (i < j) {
                const auto& h2 = FormFamily::instance().semilinear(2);
                const SlotSymbol si{c.polarization(i), c.zeta(i)}, sj{c.polarization(j), c.zeta(j)};
                const Sym2T both = symbol_of_form(h2, {si, sj}, h).matrix + symbol_of_form(h2, {sj, si}, h).matrix;
                o.require(both == RhoRational(Rational(3, 2)) * (p * p) * sym_outer(c.zeta(i), c.zeta(j)),
                          "C(" + std::to_string(i) + std::to_string(j) + ")");
            }
        }
    if (o.pass) o.detail = "12 pairs, " + std::to_string(checked) + " triples, 6 C(ij)";
    return o;
}

Outcome cascade_terms() {
    Outcome o;
    const NullConfig c = standard_config();
    InteractionEvaluator ev(c);
    const auto cc = eval_I_cancellation(ev);
    // (rho^30, rho^20) coefficients in quarters, bare matrices.
    const int expected[6][2] = {{-1, 1}, {1, 1}, {0, 1}, {1, -2}, {0, 1}, {-1, -2}};
    for (int n = 0; n < 6; ++n) {
        const auto& e = cc.entries[static_cast<std::size_t>(n)];
        const Rational c30 = e.a4_coefficient.tail.coefficient(30), c20 = e.a4_coefficient.tail.coefficient(20);
        o.require(c30 == Rational(expected[n][0]) / 4 && c20 == Rational(expected[n][1]) / 4,
                  std::string("(") + e.label + ") = " + e.a4_coefficient.to_string());
        // Realized symbols carry i^6 = -1 relative to the bare matrices.
        const Sym2T realized = ev.eval(*e.tree).realized();
        o.require(realized == RhoRational(-1) * e.value.matrix, std::string("global sign of (") + e.label + ")");
    }
    o.require(cc.sum_coefficient_order <= 30, "sum coefficient order " + std::to_string(cc.sum_coefficient_order));
    if (o.pass) o.detail = "(a)-(f) match; sum coefficient order " + std::to_string(cc.sum_coefficient_order);
    return o;
}

Outcome items() {
    Outcome o;
    InteractionEvaluator ev(standard_config());
    std::vector<ItemResult> r;
    for (int n = 1; n <= 8; ++n) r.push_back(item_value(n, ev));
    auto a4 = [&](int n) { return coefficient_at(r[static_cast<std::size_t>(n - 1)].coordinates(3, 3), 20); };
    auto pair = [&](const Mat4& m) {
        return std::make_pair(coefficient_at(m(0, 3), 30), coefficient_at(m(1, 3), 30));
    };
    auto part = [&](int n, const std::string& label) -> const Mat4& {
        for (const auto& p : r[static_cast<std::size_t>(n - 1)].parts)
            if (p.label == label) return p.coordinates;
        throw std::logic_error("no part " + label);
    };
    o.require(a4(1) == -1 && a4(2) == 1, "items (1), (2): " + str(a4(1)) + ", " + str(a4(2)) + " rho^20 A4");
    const Mat4 sum12 = r[0].coordinates + r[1].coordinates;
    o.require(infinity_degree(sum12(3, 3)) < 20, "items (1)+(2) do not cancel at rho^20 A4");
    const auto i7 = pair(r[6].coordinates);
    o.require(i7.first == Rational(-3, 8) && i7.second == Rational(3, 8),
              "item (7) A14, A24 = " + str(i7.first) + ", " + str(i7.second));
    const auto i5 = pair(r[4].coordinates);
    o.require(i5.first == Rational(-3, 8) && i5.second == Rational(3, 8),
              "item (5) A14, A24 = " + str(i5.first) + ", " + str(i5.second));
    const auto k3 = pair(part(6, "k=3"));
    o.require(k3.first == Rational(3, 4) && k3.second == Rational(-3, 4),
              "item (6) sub-case k=3 gives " + str(k3.first) + " [A14 - A24], expected 3/4");
    const auto i3 = pair(part(6, "i=3"));
    o.require(i3.first == Rational(3, 8) && i3.second == Rational(-3, 8),
              "item (6) sub-case i=3 gives " + str(i3.first) + " [A14 - A24], expected 3/8");
    const std::tuple<int, const char*, Rational> inner_parts[] = {
        {3, "P2 inner", Rational(-1, 2)}, {3, "H2 inner", Rational(3, 2)},
        {8, "P2 inner", Rational(1, 2)},  {8, "H2 inner", Rational(-3, 2)},
    };
    for (const auto& [n, label, value] : inner_parts) {
        const Rational got = coefficient_at(part(n, label)(3, 3), 20);
        o.require(got == value, "item (" + std::to_string(n) + ") " + label + " gives " + str(got) +
                                    " rho^20 A4, expected " + str(value));
    }
    // Relative signs: the rho^20 A4 parts of (1), (2), (3), (8) and the rho^30
    // A14 parts of (5), (6), (7) must each balance.
    o.require(a4(1) + a4(2) + a4(3) + a4(8) == 0, "rho^20 A4 balance");
    o.require(pair(r[4].coordinates).first + pair(r[5].coordinates).first + pair(r[6].coordinates).first == 0,
              "rho^30 A14 balance");
    if (o.pass) o.detail = "items (1)-(8) match";
    return o;
}

Outcome total() {
    Outcome o;
    const NullConfig c = standard_config();
    InteractionEvaluator ev(c);
    const TotalSymbol t = total_symbol(ev);
    Rational largest = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) largest = std::max(largest, Rational(abs(coefficient_at(t.matrix(i, j), 40))));
    o.require(!t.matrix.is_zero(), "exact total is identically zero");
    o.require(t.entry_order == 40, "entry order " + (t.matrix.is_zero() ? std::string("-inf") : std::to_string(t.entry_order)));
    o.require(largest == Rational(3, 8), "largest rho^40 entry " + str(largest));
    std::vector<InteractionTerm> terms;
    for (const auto& e : evaluate_all(ev)) terms.push_back(e.term);
    for (double rho : {2.0, 3.0}) {
        double magnitude = 0;
        const auto approx = oracle::evaluate_sum(terms, c, rho, &magnitude);
        const auto cmp = oracle::compare(t.matrix, approx, rho, magnitude);
        std::ostringstream os;
        os << "oracle at rho = " << rho << " relative error " << cmp.max_rel_error;
        o.require(cmp.agrees, os.str());
    }
    const std::string which = t.matches_formula ? "formula" : t.matches_display ? "displayed matrix" : "neither form";
    o.detail += (o.detail.empty() ? "" : "; ") + std::string("total matches ") + which;
    return o;
}

Outcome conformal() {
    Outcome o;
    const std::pair<FormKey, int> table[] = {
        {{FormKind::Quasilinear, 2}, -4}, {{FormKind::Quasilinear, 3}, -6}, {{FormKind::Quasilinear, 4}, -8},
        {{FormKind::Semilinear, 2}, -4},  {{FormKind::Semilinear, 3}, -6},  {{FormKind::Semilinear, 4}, -8},
    };
    for (const auto& [key, w] : table) {
        const int got = form_scaling_degree(key).exponent;
        o.require(got == w, to_string(key) + " scales as lambda^" + std::to_string(got));
    }
    o.require(compose_total_weight(canonical_weight_chain()).exponent == -9, "weight chain");
    const auto terms = enumerate_H(5);
    const ScalingCheck sc = end_to_end_scaling(terms.front(), standard_config(), Rational(3));
    o.require(sc.nonzero && sc.exponent == -12, "end-to-end scaling of " + terms.front().to_string());
    if (o.pass) o.detail = "degree table exact; chain -9; " + terms.front().to_string() + " scales as lambda^-12";
    return o;
}

Outcome order_calculus() {
    Outcome o;
    const Rational mu(-20);
    const MicroOrder w{mu - Rational(1, 2), Lagrangian::WaveFlowout};
    const std::array<MicroOrder, 4> waves{w, w, w, w};
    for (const auto& p : interaction_patterns()) {
        ProofTrace t;
        const MicroOrder m = interaction_order(waves, p.derivative_count, p.inner_q_count, &t);
        o.require(m.value - 4 * w.value == p.offset && !t.lines().empty(), "pattern " + std::to_string(p.number));
    }
    const Rational expected_offsets[] = {Rational(3, 2), Rational(1, 2), Rational(1, 2), Rational(-1, 2), Rational(-1, 2)};
    for (std::size_t n = 0; n < 5; ++n)
        o.require(interaction_patterns()[n].offset == expected_offsets[n], "pattern table entry " + std::to_string(n + 1));
    o.require(interaction_order(waves, 2, 0).value == 4 * mu + Rational(3, 2), "4 mu + 3/2");
    o.require(interaction_order(waves, 4, 1).value == 4 * mu + Rational(3, 2), "4 mu + 3/2 through one Q");
    o.require(interaction_order(waves, 1, 0).value == 4 * mu + Rational(1, 2), "4 mu + 1/2");
    ProofTrace rt;
    o.require(restriction_order({mu, Lagrangian::InteractionFlowout}, &rt).value == mu + Rational(3, 4) &&
                  !rt.lines().empty(),
              "restriction");
    const GeodesicLedger g = geodesic_perturbation_orders(mu);
    o.require(g.coordinate_term.value == mu - 1 + Rational(3, 4), "I_2 = " + g.coordinate_term.to_string());
    o.require(g.jacobian_term_vanishes, "I_3");
    o.require(g.dominance == 1, "dominance " + str(g.dominance));
    o.require(g.trace.lines().size() >= 5, "ledger trace");
    if (o.pass) o.detail = "5 patterns, 4mu+3/2 / 4mu+1/2, m+3/4, ledger with " +
                           std::to_string(g.trace.lines().size()) + " trace lines";
    return o;
}

Outcome cross_module() {
    Outcome o;
    const NullConfig c = standard_config();
    InteractionEvaluator ev(c);
    std::size_t exceeded = 0, family = 0, attained = 0, total = 0;
    const Rational mu(-20);
    const MicroOrder w{mu - Rational(1, 2), Lagrangian::WaveFlowout};
    for (const auto& e : evaluate_all(ev)) {
        ++total;
        const std::int64_t bound = rho_order_bound(*e.term.tree, c);
        exceeded += e.entry_order > bound;
        if (item_of(e.term.tree->to_string())) {
            ++family;
            attained += e.entry_order == bound;
        }
        const TreeCounts tc = tree_counts(*e.term.tree);
        o.require(interaction_order({w, w, w, w}, tc.derivative_count, tc.inner_q_count).value ==
                      4 * mu + Rational(3, 2),
                  "microlocal order of " + e.term.to_string());
    }
    o.require(exceeded == 0, std::to_string(exceeded) + " summands exceed their prediction");
    o.require(family > 0 && attained == family,
              std::to_string(attained) + "/" + std::to_string(family) + " family summands attain it");
    if (o.pass)
        o.detail = std::to_string(total) + " summands within prediction; " + std::to_string(attained) + "/" +
                   std::to_string(family) + " family summands attain it";
    return o;
}

Outcome causal_configuration() {
    Outcome o;
    const std::array<Rational, 4> times{Rational(1), Rational(1), Rational(1), Rational(1)};
    const Backtrace bt = backtrace_sources(FlatPoint{}, standard_config(), Rational(2), times);
    const char* golden_points[] = {"(-1, 0, 1, 0)", "(-1, 0, 0, 1)", "(-1, 1, 0, 0)", "(-1, -1, 0, 0)"};
    for (std::size_t i = 0; i < 4; ++i)
        o.require(bt.sources[i].to_string() == golden_points[i], "x" + std::to_string(i + 1) + " = " + bt.sources[i].to_string());
    const std::pair<int, int> golden_pairs[] = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
    o.require(bt.pairs.size() == 6, "six pairs");
    for (std::size_t n = 0; n < bt.pairs.size() && n < 6; ++n) {
        const auto& p = bt.pairs[n];
        o.require(p.i == golden_pairs[n].first && p.j == golden_pairs[n].second && p.unrelated,
                  "pair " + std::to_string(p.i) + std::to_string(p.j));
    }
    if (o.pass) o.detail = "six pairs causally unrelated";
    return o;
}

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> list = {
        {1, "pairing table", 1, pairing_table_values},
        {2, "triple-sum norms", 1, triple_norms},
        {3, "null scale solver", 1, null_scale},
        {4, "gauge and conservation", 5, gauge_and_dimensions},
        {5, "derived forms", 10, derived_forms},
        {6, "rank-one identities", 10, rank_one_identities},
        {7, "terms (a)-(f)", 5, cascade_terms},
        {8, "items (1)-(8)", 30, items},
        {9, "total symbol", 30, total},
        {10, "conformal degrees", 5, conformal},
        {11, "order calculus", 1, order_calculus},
        {12, "cross-module consistency", 60, cross_module},
        {13, "causal configuration", 1, causal_configuration},
    };
    return list;
}

bool run(const Criterion& c) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = c.run();
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.limit_seconds) {
        o.pass = false;
        o.detail += "; exceeded " + std::to_string(c.limit_seconds) + " s";
    }
    std::ostringstream line;
    line.precision(3);
    line << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << o.detail << ") ["
         << std::fixed << seconds << " s]";
    std::cout << line.str() << std::endl;
    return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc == 3 && std::strcmp(argv[1], "--criterion") == 0) {
        const int id = std::atoi(argv[2]);
        for (const auto& c : criteria())
            if (c.id == id) return run(c) ? 0 : 1;
        std::cerr << "unknown criterion " << argv[2] << "\n";
        return 2;
    }
    if (argc != 1) {
        std::cerr << "usage: acceptance [--criterion N]\n";
        return 2;
    }
    bool all = true;
    for (const auto& c : criteria()) all = run(c) && all;
    return all ? 0 : 1;
}
