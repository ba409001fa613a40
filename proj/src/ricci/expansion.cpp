#include "nullwave/ricci/expansion.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nullwave {

namespace {

constexpr int kMu = 0;
constexpr int kNu = 1;

// Hands out fresh contraction indices above the free ones.
class IndexPool {
public:
    explicit IndexPool(int first) : next_(first) {}
    int operator()() { return next_++; }

private:
    int next_;
};

RawExpr single(RawMonomial m) { return RawExpr{std::move(m)}; }

RawMonomial monomial(Rational c, std::vector<RawFactor> fs) {
    RawMonomial m;
    m.coef = std::move(c);
    m.factors = std::move(fs);
    return m;
}

// g^{ab} through order max_order in u.
RawExpr inverse_metric(int a, int b, int max_order, IndexPool& pool) {
    RawExpr out;
    for (int n = 0; n <= max_order; ++n) {
        RawMonomial m;
        m.coef = (n % 2 == 0) ? 1 : -1;
        int left = a;
        for (int i = 0; i < n; ++i) {
            int c1 = pool();
            int c2 = pool();
            m.factors.push_back(RawFactor::inverse_metric(left, c1));
            m.factors.push_back(RawFactor::field(-1, c1, c2));
            left = c2;
        }
        m.factors.push_back(RawFactor::inverse_metric(left, b));
        out.push_back(std::move(m));
    }
    return out;
}

// g_{ab} = h_{ab} + u_{ab}.
RawExpr lower_metric(int a, int b) {
    return {monomial(1, {RawFactor::metric(a, b)}), monomial(1, {RawFactor::field(-1, a, b)})};
}

// G_{l a b} = 1/2 (d_b u_{la} + d_a u_{lb} - d_l u_{ab}).
RawExpr christoffel_lowered(int l, int a, int b, int slot = -1) {
    const Rational half(1, 2);
    return {monomial(half, {RawFactor::field(slot, l, a, {b})}), monomial(half, {RawFactor::field(slot, l, b, {a})}),
            monomial(-half, {RawFactor::field(slot, a, b, {l})})};
}

// Gamma^p_{ab} = g^{pl} G_{l a b}.
RawExpr christoffel(int p, int a, int b, int max_order, IndexPool& pool) {
    int l = pool();
    return multiply(inverse_metric(p, l, max_order - 1, pool), christoffel_lowered(l, a, b), max_order);
}

// The full reduced Ricci tensor through order k in u with slots unassigned.
RawExpr reduced_ricci(int k, IndexPool& pool) {
    const Rational half(1, 2);
    // -1/2 g^{pq} d_p d_q u_{mu nu}
    int p = pool();
    int q = pool();
    RawExpr wave = scale(multiply(inverse_metric(p, q, k - 1, pool), single(monomial(1, {RawFactor::field(-1, kMu, kNu, {p, q})}))), -half);

    // g^{ab} g_{ps} Gamma^p_{mu b} Gamma^s_{nu a}
    int a = pool();
    int b = pool();
    int pp = pool();
    int s = pool();
    RawExpr quad = multiply(inverse_metric(a, b, k, pool), lower_metric(pp, s), k);
    quad = multiply(quad, christoffel(pp, kMu, b, k, pool), k);
    quad = multiply(quad, christoffel(s, kNu, a, k, pool), k);

    // 1/2 (g_{nu l} Gamma^l_{ab} g^{aq} g^{bd} d_mu u_{qd} + (mu <-> nu))
    RawExpr cross;
    for (auto [outer, inner] : {std::pair{kNu, kMu}, std::pair{kMu, kNu}}) {
        int l = pool();
        int a2 = pool();
        int b2 = pool();
        int q2 = pool();
        int d2 = pool();
        RawExpr t = multiply(lower_metric(outer, l), christoffel(l, a2, b2, k, pool), k);
        t = multiply(t, inverse_metric(a2, q2, k, pool), k);
        t = multiply(t, inverse_metric(b2, d2, k, pool), k);
        t = multiply(t, single(monomial(1, {RawFactor::field(-1, q2, d2, {inner})})), k);
        cross = concat(cross, scale(t, half));
    }
    return concat(concat(wave, quad), cross);
}

// Sum over all assignments of distinct slots to the k field occurrences.
FormalTensorPoly polarize(const RawExpr& expr, int k, int free_count) {
    std::vector<int> perm(static_cast<std::size_t>(k));
    long count = 0;
    RawExpr assigned;
    std::iota(perm.begin(), perm.end(), 0);
    do {
        ++count;
        for (const auto& m : expr) {
            RawMonomial copy = m;
            std::size_t next = 0;
            for (auto& f : copy.factors)
                if (f.kind == RawFactor::Kind::Field) f.slot = perm[next++];
            assigned.push_back(std::move(copy));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return FormalTensorPoly::from_raw(k, free_count, scale(assigned, Rational(1, count)), true);
}

}  // namespace

std::vector<RawExpr> metric_inverse_series(int order) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
    std::vector<RawExpr> out;
    for (int n = 0; n <= order; ++n) {
        IndexPool pool(2);
        out.push_back(with_field_count(inverse_metric(0, 1, n, pool), n));
    }
    return out;
}

FormalTensorPoly christoffel_form() {
    return FormalTensorPoly::from_raw(1, 3, christoffel_lowered(0, 1, 2, 0));
}

RicciPart reduced_ricci_expansion(int k) {
    if (k < 1 || k > 4) throw std::invalid_argument("expansion order must be in 1..4");
    IndexPool pool(2);
    RawExpr full = with_field_count(reduced_ricci(k, pool), k);
    FormalTensorPoly all = polarize(full, k, 2);
    RicciPart part;
    part.order = k;
    auto on_one_slot = [](const std::vector<int>& d) { return std::find(d.begin(), d.end(), 2) != d.end(); };
    part.quasilinear = all.filter(on_one_slot);
    FormalTensorPoly rest = all.filter([&](const std::vector<int>& d) { return !on_one_slot(d); });
    part.semilinear = rest.filter([](const std::vector<int>& d) { return std::accumulate(d.begin(), d.end(), 0) == 2; });
    part.discarded = static_cast<int>(rest.size() - part.semilinear.size());
    return part;
}

std::string to_string(const FormKey& key) {
    switch (key.kind) {
        case FormKind::Quasilinear: return "P" + std::to_string(key.order);
        case FormKind::Semilinear: return "H" + std::to_string(key.order);
        case FormKind::WaveOperator: return "W" + std::to_string(key.order);
        case FormKind::Full: return "G" + std::to_string(key.order);
    }
    return "?";
}

FormFamily::FormFamily() {
    RicciPart first = reduced_ricci_expansion(1);
    forms_[{FormKind::WaveOperator, 1}] = first.quasilinear;
    for (int k = 2; k <= 4; ++k) {
        RicciPart part = reduced_ricci_expansion(k);
        const int last = k - 1;
        FormalTensorPoly on_last = part.quasilinear.filter([&](const std::vector<int>& d) { return d[static_cast<std::size_t>(last)] == 2; });
        forms_[{FormKind::Quasilinear, k}] = on_last.scaled(2 * k);
        forms_[{FormKind::Semilinear, k}] = part.semilinear.scaled(2);
        FormalTensorPoly full = forms_[{FormKind::Quasilinear, k}];
        full += forms_[{FormKind::Semilinear, k}];
        forms_[{FormKind::Full, k}] = full;
        discarded_[k] = part.discarded;
    }
}

const FormFamily& FormFamily::instance() {
    static const FormFamily family;
    return family;
}

const FormalTensorPoly& FormFamily::at(const FormKey& key) const {
    auto it = forms_.find(key);
    if (it == forms_.end()) throw std::out_of_range("no form " + to_string(key));
    return it->second;
}

FormalTensorPoly closed_form_quasilinear(int k) {
    if (k < 2) throw std::invalid_argument("quasilinear forms start at order 2");
    RawMonomial m;
    m.coef = (k % 2 == 0) ? 1 : -1;
    int next = 2;
    int p = next++;
    int q = next++;
    int left = p;
    for (int s = 0; s < k - 1; ++s) {
        int c1 = next++;
        int c2 = next++;
        m.factors.push_back(RawFactor::inverse_metric(left, c1));
        m.factors.push_back(RawFactor::field(s, c1, c2));
        left = c2;
    }
    m.factors.push_back(RawFactor::inverse_metric(left, q));
    m.factors.push_back(RawFactor::field(k - 1, kMu, kNu, {p, q}));
    FormalTensorPoly f = FormalTensorPoly::from_raw(k, 2, {m}, true);
    std::vector<int> coefficient_slots(static_cast<std::size_t>(k - 1));
    std::iota(coefficient_slots.begin(), coefficient_slots.end(), 0);
    return f.symmetrized_over(coefficient_slots);
}

FormalTensorPoly closed_form_quadratic_semilinear() {
    // Written with the two field occurrences in slots (0, 1) and averaged over the swap.
    RawExpr expr;
    for (auto [s1, s2] : {std::pair{0, 1}, std::pair{1, 0}}) {
        IndexPool pool(2);
        int a = pool(), b = pool(), p = pool(), s = pool(), l = pool(), g = pool();
        RawExpr first = single(monomial(2, {RawFactor::inverse_metric(a, b), RawFactor::metric(p, s),
                                            RawFactor::inverse_metric(p, l), RawFactor::inverse_metric(s, g)}));
        first = multiply(first, christoffel_lowered(l, kMu, b, s1));
        first = multiply(first, christoffel_lowered(g, kNu, a, s2));
        expr = concat(expr, first);
        for (auto [outer, inner] : {std::pair{kNu, kMu}, std::pair{kMu, kNu}}) {
            int l2 = pool(), k2 = pool(), a2 = pool(), b2 = pool(), q2 = pool(), d2 = pool();
            RawExpr t = single(monomial(1, {RawFactor::metric(outer, l2), RawFactor::inverse_metric(l2, k2)}));
            t = multiply(t, christoffel_lowered(k2, a2, b2, s1));
            t = multiply(t, single(monomial(1, {RawFactor::inverse_metric(a2, q2), RawFactor::inverse_metric(b2, d2),
                                                RawFactor::field(s2, q2, d2, {inner})})));
            expr = concat(expr, t);
        }
    }
    return FormalTensorPoly::from_raw(2, 2, scale(expr, Rational(1, 2)), true);
}

}  // namespace nullwave
