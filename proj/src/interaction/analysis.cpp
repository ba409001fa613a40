#include "nullwave/interaction/analysis.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace nullwave {

std::string LeadingPart::to_string() const { return tail.to_string(); }

LeadingPart leading_part(const RhoRational& x, int terms) {
    LeadingPart p;
    p.exact = x;
    p.tail = expand_at_infinity(x, terms);
    p.order = infinity_degree(x);
    return p;
}

namespace {

std::int64_t coordinate_order(const Mat4& c) {
    std::int64_t best = kNegInfinity;
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) best = std::max(best, infinity_degree(c(i, j)));
    return best;
}

EvaluatedTerm evaluate(InteractionEvaluator& ev, const InteractionTerm& t) {
    EvaluatedTerm e;
    e.term = t;
    e.value = ev.eval(t);
    e.realized = e.value.realized();
    e.coordinates = pair_basis_coordinates(e.realized, ev.config().zetas());
    e.entry_order = e.realized.entry_order();
    return e;
}

const std::unordered_map<std::string, InteractionTerm>& term_index() {
    static const auto index = [] {
        std::unordered_map<std::string, InteractionTerm> m;
        for (const auto& t : enumerate_all_terms()) m.emplace(t.tree->to_string(), t);
        return m;
    }();
    return index;
}

std::string v(int i) { return "v" + std::to_string(i); }
std::string q(const std::string& s) { return "Q(" + s + ")"; }
std::string f(const std::string& name, std::initializer_list<std::string> args) {
    std::string out = name + "(";
    bool first = true;
    for (const auto& a : args) {
        out += (first ? "" : ",") + a;
        first = false;
    }
    return out + ")";
}

const std::array<std::pair<int, int>, 2> kPairs12{{{1, 2}, {2, 1}}};

}  // namespace

CascadeCancellation eval_I_cancellation(InteractionEvaluator& ev) {
    static constexpr std::array<std::array<int, 3>, 6> kOrder{{{1, 2, 3}, {2, 1, 3}, {1, 3, 2}, {3, 1, 2}, {2, 3, 1}, {3, 2, 1}}};
    const FormKey p2{FormKind::Quasilinear, 2};
    CascadeCancellation out;
    const auto& z = ev.config().zetas();
    for (std::size_t n = 0; n < 6; ++n) {
        auto [i, j, k] = kOrder[n];
        auto& e = out.entries[n];
        e.label = static_cast<char>('a' + n);
        e.waves = kOrder[n];
        e.tree = apply_form(p2, {leaf(i), causal_inverse(apply_form(p2, {leaf(j), causal_inverse(apply_form(p2, {leaf(k), leaf(4)}))}))});
        e.value = ev.eval(*e.tree);
        e.a4_coefficient = leading_part(pair_basis_coordinates(e.value.matrix, z)(3, 3));
        e.entry_order = e.value.matrix.entry_order();
        out.sum = out.sum + e.value.matrix;
    }
    Mat4 c = pair_basis_coordinates(out.sum, z);
    out.sum_a4_coefficient = leading_part(c(3, 3));
    out.sum_entry_order = out.sum.entry_order();
    out.sum_coefficient_order = coordinate_order(c);
    return out;
}

std::vector<std::pair<std::string, std::vector<std::string>>> item_tree_strings(int n) {
    std::vector<std::pair<std::string, std::vector<std::string>>> parts;
    auto part = [&](std::string label) -> std::vector<std::string>& {
        parts.emplace_back(std::move(label), std::vector<std::string>{});
        return parts.back().second;
    };
    switch (n) {
        case 1: {
            auto& p = part("P3");
            for (auto [i, j] : kPairs12) p.push_back(f("P3", {v(i), v(j), q(f("P2", {v(3), v(4)}))}));
            break;
        }
        case 2: {
            auto& p = part("P3 inner");
            for (auto [j, k] : kPairs12) p.push_back(f("P2", {v(3), q(f("P3", {v(j), v(k), v(4)}))}));
            break;
        }
        case 3:
        case 8:
            for (const char* kind : {"P2", "H2"}) {
                auto& p = part(std::string(kind) + " inner");
                for (auto [i, j] : kPairs12) {
                    std::string inner = q(f(kind, {v(i), v(j)}));
                    if (n == 3) p.push_back(f("P2", {inner, q(f("P2", {v(3), v(4)}))}));
                    else p.push_back(f("P2", {v(3), q(f("P2", {inner, v(4)}))}));
                }
            }
            break;
        case 4: {
            auto& p = part("cascade");
            std::array<int, 3> w{1, 2, 3};
            do {
                p.push_back(f("P2", {v(w[0]), q(f("P2", {v(w[1]), q(f("P2", {v(w[2]), v(4)}))}))}));
            } while (std::next_permutation(w.begin(), w.end()));
            break;
        }
        case 5: {
            auto& p = part("H2 outer");
            for (auto [i, j] : kPairs12) {
                std::string inner = q(f("P2", {v(j), q(f("P2", {v(3), v(4)}))}));
                p.push_back(f("H2", {v(i), inner}));
                p.push_back(f("H2", {inner, v(i)}));
            }
            break;
        }
        case 6: {
            auto& a = part("k=3");
            for (auto [i, j] : kPairs12) {
                std::string inner = q(f("P2", {v(3), v(4)}));
                a.push_back(f("P2", {v(i), q(f("H2", {v(j), inner}))}));
                a.push_back(f("P2", {v(i), q(f("H2", {inner, v(j)}))}));
            }
            auto& b = part("i=3");
            for (auto [j, k] : kPairs12) {
                std::string inner = q(f("P2", {v(k), v(4)}));
                b.push_back(f("P2", {v(3), q(f("H2", {v(j), inner}))}));
                b.push_back(f("P2", {v(3), q(f("H2", {inner, v(j)}))}));
            }
            break;
        }
        case 7: {
            auto& p = part("H2 innermost");
            for (auto [j, k] : kPairs12) {
                p.push_back(f("P2", {v(3), q(f("P2", {v(j), q(f("H2", {v(k), v(4)}))}))}));
                p.push_back(f("P2", {v(3), q(f("P2", {v(j), q(f("H2", {v(4), v(k)}))}))}));
            }
            break;
        }
        default: throw std::invalid_argument("item number must be in 1..8");
    }
    return parts;
}

ItemResult item_value(int n, InteractionEvaluator& ev) {
    static const char* kDescriptions[] = {
        "P3(vi, vj, Q(P2(v3, v4))), {i,j} = {1,2}",
        "P2(v3, Q(P3(vj, vk, v4))), {j,k} = {1,2}",
        "-P2(Q(G2(vi, vj)), Q(P2(v3, v4))), {i,j} = {1,2}",
        "-P2(vi, Q(P2(vj, Q(P2(vk, v4))))), (i,j,k) a permutation of (1,2,3)",
        "-H2(vi, Q(P2(vj, Q(P2(v3, v4))))) and its swapped partner, {i,j} = {1,2}",
        "-P2(vi, Q(H2(vj, Q(P2(vk, v4))))) and its swapped partner, with i or k equal to 3",
        "-P2(v3, Q(P2(vj, Q(H2(vk, v4) + H2(v4, vk))))), {j,k} = {1,2}",
        "-P2(v3, Q(P2(Q(G2(vk, vl)), v4))), {k,l} = {1,2}",
    };
    ItemResult out;
    out.item = n;
    const auto& z = ev.config().zetas();
    for (auto& [label, trees] : item_tree_strings(n)) {
        ItemPart part;
        part.label = label;
        for (const auto& s : trees) {
            auto it = term_index().find(s);
            if (it == term_index().end()) throw std::logic_error("item tree not among the enumerated summands: " + s);
            part.terms.push_back(evaluate(ev, it->second));
            part.realized = part.realized + part.terms.back().realized;
        }
        part.coordinates = pair_basis_coordinates(part.realized, z);
        part.entry_order = part.realized.entry_order();
        out.realized = out.realized + part.realized;
        out.parts.push_back(std::move(part));
    }
    out.description = kDescriptions[n - 1];
    out.coordinates = pair_basis_coordinates(out.realized, z);
    out.entry_order = out.realized.entry_order();
    return out;
}

std::vector<EvaluatedTerm> evaluate_all(InteractionEvaluator& ev) {
    std::vector<EvaluatedTerm> out;
    for (const auto& t : enumerate_all_terms()) out.push_back(evaluate(ev, t));
    return out;
}

std::optional<int> item_of(const std::string& tree) {
    static const auto index = [] {
        std::unordered_map<std::string, int> m;
        for (int n = 1; n <= 8; ++n)
            for (const auto& [label, trees] : item_tree_strings(n))
                for (const auto& s : trees) m.emplace(s, n);
        return m;
    }();
    auto it = index.find(tree);
    if (it == index.end()) return std::nullopt;
    return it->second;
}

bool Classification::outside_is_empty() const {
    auto it = by_item.find(0);
    return it == by_item.end() || it->second.empty();
}

Classification classify_rho40_terms(InteractionEvaluator& ev, std::int64_t threshold) {
    Classification c;
    c.threshold = threshold;
    c.highest_outside = kNegInfinity;
    for (auto& e : evaluate_all(ev)) {
        ++c.scanned;
        int item = item_of(e.term.tree->to_string()).value_or(0);
        if (item == 0) c.highest_outside = std::max(c.highest_outside, e.entry_order);
        if (e.entry_order >= threshold) c.by_item[item].push_back(std::move(e));
    }
    return c;
}

TotalSymbol total_symbol(InteractionEvaluator& ev) {
    TotalSymbol out;
    for (const auto& t : enumerate_all_terms()) out.matrix = out.matrix + ev.eval(t).realized();
    const auto& z = ev.config().zetas();
    out.coordinates = pair_basis_coordinates(out.matrix, z);
    out.entry_order = out.matrix.entry_order();

    const RhoRational c = RhoRational::monomial(Rational(3, 8), 30);
    out.stated_formula = c * (sym_outer(z[0], z[3]) - sym_outer(z[1], z[3]));
    static constexpr int kPattern[4][4] = {{0, 0, 1, -1}, {0, 0, -1, 1}, {1, -1, 0, 0}, {-1, 1, 0, 0}};
    Mat4 shown;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) shown(i, j) = RhoRational::monomial(Rational(3 * kPattern[i][j], 8), 40);
    out.displayed_matrix = Sym2T(shown);
    auto agrees = [&](const Sym2T& candidate) {
        return !out.matrix.is_zero() && (out.matrix - candidate).entry_order() < out.entry_order;
    };
    out.matches_formula = agrees(out.stated_formula);
    out.matches_display = agrees(out.displayed_matrix);
    return out;
}

}  // namespace nullwave
