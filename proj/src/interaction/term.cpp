#include "nullwave/interaction/term.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace nullwave {

std::string TermNode::to_string() const {
    switch (kind) {
        case Kind::Leaf: return "v" + std::to_string(wave);
        case Kind::Inverse: return "Q(" + children.front()->to_string() + ")";
        case Kind::Form: {
            std::string out = nullwave::to_string(form) + "(";
            for (std::size_t i = 0; i < children.size(); ++i) out += (i ? "," : "") + children[i]->to_string();
            return out + ")";
        }
    }
    return "?";
}

unsigned TermNode::wave_mask() const {
    if (kind == Kind::Leaf) return 1u << (wave - 1);
    unsigned m = 0;
    for (const auto& c : children) m |= c->wave_mask();
    return m;
}

int TermNode::form_count() const {
    int n = kind == Kind::Form ? 1 : 0;
    for (const auto& c : children) n += c->form_count();
    return n;
}

TermPtr leaf(int wave) {
    if (wave < 1 || wave > 4) throw std::invalid_argument("wave index must be in 1..4");
    auto n = std::make_shared<TermNode>();
    n->kind = TermNode::Kind::Leaf;
    n->wave = wave;
    return n;
}

TermPtr causal_inverse(TermPtr child) {
    auto n = std::make_shared<TermNode>();
    n->kind = TermNode::Kind::Inverse;
    n->children.push_back(std::move(child));
    return n;
}

TermPtr apply_form(FormKey form, std::vector<TermPtr> children) {
    if (static_cast<int>(children.size()) != form.order)
        throw std::invalid_argument(to_string(form) + " takes " + std::to_string(form.order) + " arguments, got " +
                                    std::to_string(children.size()));
    auto n = std::make_shared<TermNode>();
    n->kind = TermNode::Kind::Form;
    n->form = form;
    n->children = std::move(children);
    return n;
}

std::string InteractionTerm::to_string() const {
    return std::string(sign < 0 ? "-" : "+") + tree->to_string();
}

int shape_count(int group) {
    static constexpr int kShapes[] = {1, 3, 2, 1, 4};
    if (group < 1 || group > 5) throw std::invalid_argument("interaction group must be in 1..5");
    return kShapes[group - 1];
}

namespace {

TermPtr g(int order, std::vector<TermPtr> children) {
    return apply_form({FormKind::Full, order}, std::move(children));
}

TermPtr shape_tree(int group, int shape, const std::array<int, 4>& w) {
    auto v = [&](int n) { return leaf(w[static_cast<std::size_t>(n)]); };
    auto q = causal_inverse;
    switch (group) {
        case 1: return g(4, {v(0), v(1), v(2), v(3)});
        case 2:
            if (shape == 1) return g(3, {v(0), v(1), q(g(2, {v(2), v(3)}))});
            if (shape == 2) return g(3, {v(0), q(g(2, {v(1), v(2)})), v(3)});
            return g(3, {q(g(2, {v(0), v(1)})), v(2), v(3)});
        case 3:
            if (shape == 1) return g(2, {q(g(3, {v(0), v(1), v(2)})), v(3)});
            return g(2, {v(0), q(g(3, {v(1), v(2), v(3)}))});
        case 4: return g(2, {q(g(2, {v(0), v(1)})), q(g(2, {v(2), v(3)}))});
        default:
            if (shape == 1) return g(2, {v(0), q(g(2, {v(1), q(g(2, {v(2), v(3)}))}))});
            if (shape == 2) return g(2, {v(0), q(g(2, {q(g(2, {v(1), v(2)})), v(3)}))});
            if (shape == 3) return g(2, {q(g(2, {v(0), q(g(2, {v(1), v(2)}))})), v(3)});
            return g(2, {q(g(2, {q(g(2, {v(0), v(1)})), v(2)})), v(3)});
    }
}

// Every way of replacing each full form by its quasilinear or semilinear part.
std::vector<TermPtr> split(const TermPtr& t) {
    if (t->kind == TermNode::Kind::Leaf) return {t};
    std::vector<std::vector<TermPtr>> options;
    for (const auto& c : t->children) options.push_back(split(c));
    std::vector<std::vector<TermPtr>> combos{{}};
    for (const auto& opts : options) {
        std::vector<std::vector<TermPtr>> next;
        for (const auto& partial : combos)
            for (const auto& o : opts) {
                auto extended = partial;
                extended.push_back(o);
                next.push_back(std::move(extended));
            }
        combos = std::move(next);
    }
    std::vector<TermPtr> out;
    for (auto& kids : combos) {
        if (t->kind == TermNode::Kind::Inverse) {
            out.push_back(causal_inverse(kids.front()));
        } else if (t->form.kind == FormKind::Full) {
            out.push_back(apply_form({FormKind::Quasilinear, t->form.order}, kids));
            out.push_back(apply_form({FormKind::Semilinear, t->form.order}, kids));
        } else {
            out.push_back(apply_form(t->form, kids));
        }
    }
    return out;
}

}  // namespace

std::vector<InteractionTerm> enumerate_H(int k, bool split_forms) {
    const int shapes = shape_count(k);
    const int sign = (k == 1 || k == 4 || k == 5) ? -1 : 1;
    std::vector<InteractionTerm> out;
    for (int shape = 1; shape <= shapes; ++shape) {
        std::array<int, 4> w{1, 2, 3, 4};
        do {
            TermPtr tree = shape_tree(k, shape, w);
            if (!split_forms) {
                out.push_back({sign, tree, k, shape, w});
                continue;
            }
            for (auto& t : split(tree)) out.push_back({sign, t, k, shape, w});
        } while (std::next_permutation(w.begin(), w.end()));
    }
    return out;
}

std::vector<InteractionTerm> enumerate_all_terms() {
    std::vector<InteractionTerm> out;
    for (int k = 1; k <= 5; ++k) {
        auto part = enumerate_H(k);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

}  // namespace nullwave
