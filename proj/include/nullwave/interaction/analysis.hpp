#pragma once

#include "nullwave/interaction/evaluator.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nullwave {

/// One evaluated summand. `realized` includes the summand's sign and the
/// power of the imaginary unit; `coordinates` are its pair-basis coordinates.
struct EvaluatedTerm {
    InteractionTerm term;
    SymbolValue value;
    Sym2T realized;
    Mat4 coordinates;
    std::int64_t entry_order = 0;
};

/// Exact leading part of a coordinate: its expansion at infinity to a few terms.
struct LeadingPart {
    RhoRational exact;
    LaurentTail tail;
    std::int64_t order = 0;
    std::string to_string() const;
};
LeadingPart leading_part(const RhoRational& x, int terms = 3);

/// The six iterated quasilinear terms P2(vi, Q(P2(vj, Q(P2(vk, v4))))) labelled
/// (a)..(f), reported as bare matrices without the imaginary unit.
struct CascadeCancellation {
    struct Entry {
        char label = 'a';
        std::array<int, 3> waves{};
        TermPtr tree;
        SymbolValue value;
        LeadingPart a4_coefficient;
        std::int64_t entry_order = 0;
    };
    std::array<Entry, 6> entries;
    Sym2T sum;
    LeadingPart sum_a4_coefficient;
    std::int64_t sum_entry_order = 0;
    /// Largest infinity degree over all pair-basis coordinates of the sum.
    std::int64_t sum_coefficient_order = 0;
};
CascadeCancellation eval_I_cancellation(InteractionEvaluator& ev);

/// A family of summands grouped under one item of the leading-order analysis.
struct ItemPart {
    std::string label;
    std::vector<EvaluatedTerm> terms;
    Sym2T realized;
    Mat4 coordinates;
    std::int64_t entry_order = 0;
};
struct ItemResult {
    int item = 0;
    std::string description;
    std::vector<ItemPart> parts;
    Sym2T realized;
    Mat4 coordinates;
    std::int64_t entry_order = 0;
};

/// Tree strings (e.g. "P2(v1,Q(H2(v3,v4)))") of the summands of item n,
/// grouped by part. Throws std::invalid_argument for n outside 1..8.
std::vector<std::pair<std::string, std::vector<std::string>>> item_tree_strings(int n);
ItemResult item_value(int n, InteractionEvaluator& ev);

/// Every summand of the five groups, evaluated.
std::vector<EvaluatedTerm> evaluate_all(InteractionEvaluator& ev);

/// Summands whose own entry order reaches `threshold`, grouped by item
/// (0 collects those belonging to no item).
struct Classification {
    std::int64_t threshold = 40;
    std::map<int, std::vector<EvaluatedTerm>> by_item;
    std::size_t scanned = 0;
    std::int64_t highest_outside = 0;
    bool outside_is_empty() const;
};
Classification classify_rho40_terms(InteractionEvaluator& ev, std::int64_t threshold = 40);

/// Which item a tree string belongs to, if any.
std::optional<int> item_of(const std::string& tree);

/// Exact sum of all realized summands.
struct TotalSymbol {
    Sym2T matrix;
    Mat4 coordinates;
    std::int64_t entry_order = 0;
    /// 3/8 rho^30 (A14 - A24) and the displayed matrix 3/8 rho^30 (A14 + A24).
    Sym2T stated_formula;
    Sym2T displayed_matrix;
    bool matches_formula = false;
    bool matches_display = false;
};
TotalSymbol total_symbol(InteractionEvaluator& ev);

}  // namespace nullwave
