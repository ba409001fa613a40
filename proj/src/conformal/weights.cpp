#include "nullwave/conformal/weights.hpp"

#include "nullwave/interaction/evaluator.hpp"
#include "nullwave/ricci/symbol.hpp"

#include <map>
#include <set>

namespace nullwave {

std::optional<int> pure_power_exponent(const Rational& ratio, const Rational& lambda) {
    if (sgn(ratio) <= 0 || sgn(lambda) <= 0 || lambda == 1) return std::nullopt;
    Rational p = 1;
    for (int w = 0; w <= 64; ++w) {
        if (p == ratio) return w;
        if (1 / p == ratio) return -w;
        p *= lambda;
    }
    return std::nullopt;
}

namespace {

// Small generic slot data: no entry vanishes and no covector is null.
std::vector<SlotSymbol> generic_slots(int arity) {
    std::vector<SlotSymbol> slots;
    for (int s = 0; s < arity; ++s) {
        Mat4 m;
        for (int i = 0; i < 4; ++i)
            for (int j = i; j < 4; ++j) {
                Rational v(1 + ((3 * s + 5 * i + 7 * j + i * j) % 11), 1 + ((s + i + j) % 3));
                v.canonicalize();
                if ((i + j + s) % 4 == 1) v = -v;
                m(i, j) = v;
                m(j, i) = v;
            }
        Rational third(3, 2 + s);
        third.canonicalize();
        CoVec4 xi(Rational(2 + s), Rational(-1 - 2 * s), third, Rational(1 + s * s));
        slots.push_back({Sym2T(m), xi});
    }
    return slots;
}

std::optional<int> uniform_exponent(const Sym2T& base, const Sym2T& scaled, const Rational& lambda) {
    std::optional<int> w;
    bool any = false;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const Rational a = base(i, j).evaluate(Rational(1));
            const Rational b = scaled(i, j).evaluate(Rational(1));
            if (is_zero(a) != is_zero(b)) return std::nullopt;
            if (is_zero(a)) continue;
            auto e = pure_power_exponent(b / a, lambda);
            if (!e || (any && *e != *w)) return std::nullopt;
            w = e;
            any = true;
        }
    return w;
}

std::string monomial_census(const FormalTensorPoly& form) {
    std::map<std::size_t, int> census;
    for (const auto& [key, coef] : form.terms()) ++census[key.edges.size()];
    std::string s;
    for (auto [edges, count] : census)
        s += (s.empty() ? "" : ", ") + std::to_string(count) + " monomials with " + std::to_string(edges) +
             " inverse metrics";
    return s;
}

}  // namespace

Weight monomial_scaling_degree(const FormalTensorPoly& form) {
    std::set<std::size_t> counts;
    for (const auto& [key, coef] : form.terms()) counts.insert(key.edges.size());
    if (counts.size() != 1) throw HomogeneityError("form is not homogeneous: " + monomial_census(form));
    return {-2 * static_cast<int>(*counts.begin())};
}

Weight form_scaling_degree(const FormKey& key) {
    const FormalTensorPoly& form = FormFamily::instance().at(key);
    const CompiledForm compiled(form);
    const auto slots = generic_slots(form.arity());
    const Sym2T base = symbol_of_form(compiled, slots, Metric4()).matrix;
    if (base.is_zero()) throw HomogeneityError(to_string(key) + " vanishes on the test slots");
    std::optional<int> found;
    for (int l : {2, 3}) {
        const Rational lambda(l);
        const Sym2T scaled = symbol_of_form(compiled, slots, Metric4::conformal_minkowski(lambda)).matrix;
        auto w = uniform_exponent(base, scaled, lambda);
        if (!w || (found && *w != *found))
            throw HomogeneityError(to_string(key) + " does not scale by a pure power of lambda = " + to_string(lambda) +
                                   "; " + monomial_census(form));
        found = w;
    }
    return {*found};
}

std::string to_string(FactorKind kind) {
    switch (kind) {
        case FactorKind::WaveSymbol: return "wave symbol";
        case FactorKind::Coefficient: return "coefficient";
        case FactorKind::QFlowoutSource: return "Q flowout source";
        case FactorKind::QFlowoutTarget: return "Q flowout target";
    }
    return "?";
}

Weight compose_total_weight(const std::vector<WeightFactor>& chain) {
    Weight total;
    for (const auto& f : chain)
        if (!f.suppressed) total = total + f.weight;
    return total;
}

std::vector<WeightFactor> canonical_weight_chain() {
    std::vector<WeightFactor> chain(4, {FactorKind::WaveSymbol, {-1}, false});
    chain.push_back({FactorKind::Coefficient, {-8}, false});
    chain.push_back({FactorKind::QFlowoutSource, {3}, false});
    chain.push_back({FactorKind::QFlowoutTarget, {-1}, true});
    return chain;
}

Weight q_diag_weight() { return {2}; }

Weight q_diag_weight_from_symbol(const Rational& lambda) {
    const CoVec4 xi(Rational(3), Rational(1), Rational(-2), Rational(5));
    const RhoRational plain = norm_sq(Metric4(), xi);
    const RhoRational scaled = norm_sq(Metric4::conformal_minkowski(lambda), xi);
    auto w = pure_power_exponent((plain / scaled).evaluate(Rational(1)), lambda);
    if (!w) throw HomogeneityError("inverse principal symbol is not a pure power of lambda");
    return {*w};
}

ScalingCheck end_to_end_scaling(const InteractionTerm& term, const NullConfig& config, const Rational& lambda) {
    InteractionEvaluator plain(config);
    const NullConfig conformal(config.zetas(), Metric4::conformal_minkowski(lambda));
    std::array<Sym2T, 4> amps;
    for (int i = 0; i < 4; ++i) amps[static_cast<std::size_t>(i)] = RhoRational(1 / lambda) * config.polarization(i + 1);
    InteractionEvaluator scaled(conformal, amps);

    const Sym2T a = plain.eval(term).realized();
    const Sym2T b = scaled.eval(term).realized();
    ScalingCheck out;
    out.nonzero = !a.is_zero();
    if (!out.nonzero) return out;
    std::optional<int> w;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (a(i, j).is_zero() != b(i, j).is_zero()) return out;
            if (a(i, j).is_zero()) continue;
            const RhoRational ratio = b(i, j) / a(i, j);
            if (infinity_degree(ratio) != 0 || !ratio.is_polynomial() || ratio.numerator().size() != 1) return out;
            auto e = pure_power_exponent(ratio.evaluate(Rational(1)), lambda);
            if (!e || (w && *e != *w)) return out;
            w = e;
        }
    out.exponent = w;
    return out;
}

}  // namespace nullwave
