#pragma once

#include "nullwave/ricci/expansion.hpp"

#include <array>
#include <memory>
#include <string>
#include <vector>

namespace nullwave {

struct TermNode;
using TermPtr = std::shared_ptr<const TermNode>;

/// Node of a four-wave interaction term: a wave, the causal inverse applied to
/// a subterm, or a coefficient form applied to ordered subterms.
struct TermNode {
    enum class Kind { Leaf, Inverse, Form };
    Kind kind = Kind::Leaf;
    int wave = 0;  // 1..4 for leaves
    FormKey form;
    std::vector<TermPtr> children;

    /// e.g. "P2(v1,Q(H2(v3,v4)))".
    std::string to_string() const;
    /// Bit i-1 set for every wave i below this node.
    unsigned wave_mask() const;
    int form_count() const;
};

TermPtr leaf(int wave);
TermPtr causal_inverse(TermPtr child);
/// Throws std::invalid_argument if the child count differs from the form order.
TermPtr apply_form(FormKey form, std::vector<TermPtr> children);

/// A signed summand of one of the five interaction groups.
struct InteractionTerm {
    int sign = 1;
    TermPtr tree;
    int group = 0;                 // 1..5
    int shape = 0;                 // 1-based summand within the group
    std::array<int, 4> waves{};    // the permutation (i, j, k, l)

    std::string to_string() const;
};

/// Number of summand shapes in each group: {1, 3, 2, 1, 4}.
int shape_count(int group);

/// Every summand of group k (1..5) over all 24 orderings of the waves. With
/// split_forms each full form is expanded into its quasilinear and semilinear
/// parts so that every listed tree uses concrete forms only.
/// Throws std::invalid_argument for k outside 1..5.
std::vector<InteractionTerm> enumerate_H(int k, bool split_forms = true);
/// All five groups, split.
std::vector<InteractionTerm> enumerate_all_terms();

}  // namespace nullwave
