#include "nullwave/orders/order_calculus.hpp"

#include "nullwave/ricci/expansion.hpp"
#include "nullwave/ricci/symbol.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace nullwave {

std::string to_string(Lagrangian l) {
    switch (l) {
        case Lagrangian::SourceConormal: return "N*Y";
        case Lagrangian::WaveFlowout: return "Lambda_i";
        case Lagrangian::InteractionFlowout: return "Lambda_q0";
        case Lagrangian::PointConormal: return "N*{p0}";
        case Lagrangian::Paired: return "(N*Y, Lambda)";
    }
    return "?";
}

std::string MicroOrder::to_string() const {
    return "I^{" + nullwave::to_string(value) + "}(" + nullwave::to_string(lagrangian) + ")";
}

const std::vector<OrderRule>& order_rules() {
    static const std::vector<OrderRule> rules = {
        {"distorted-wave", "Prop. 4.1",
         "away from Y, we have v in I^{mu-1/2}(Lambda; S) and microlocally away from Lambda, we have v in "
         "I^{mu-1}(Y; S)"},
        {"interaction", "Prop. 6.1",
         "Q(c(x)v1v2v3v4) in I^{mu~+3/2}; Q(a(x)v1 V Q(b(x)v2v3v4)) in I^{mu~+1/2}; "
         "Q(a(x)v1 V Q(a(x)v2 V Q(a(x)v3v4))) in I^{mu~-1/2}"},
        {"interaction-sum", "Prop. 6.1", "mu~ = sum_{i=1}^4 mu_i"},
        {"wave-order", "Prop. intert", "Let v^(i) in I^{mu-1/2}(Lambda_i; S), i = 1, 2, 3, 4 be distorted plane waves"},
        {"derivative", "Sec. 7", "By the assumption d_eps g~_eps|_{eps=0} in I^mu(N*S_q0), we know that this term is in "
                                 "I^{mu+1}(N*S_q0)"},
        {"restriction", "Lemma 7.1",
         "for any f in I^m(N*S), the restriction of f to gamma is in I^{m+3/4}(gamma; N*{p0})"},
        {"integration", "Sec. 7", "Solving the above equation (integrating in t twice), we get A^k(t) in "
                                  "I^{mu-1+3/4}(mu_{g0,Xp}; N*{p0})"},
        {"jacobian", "Sec. 7", "if we restrict I_3 to the associated geodesics, we get I_3 = 0 for all eps"},
        {"dominance", "Sec. 7", "the most singular term among I_a, a = 1, 2, 3 is I_1"},
        {"source-bound", "Sec. 3", "In addition, for some mu < -17"},
        {"power-count", "Sec. 5 Step 4",
         "we count the order of the principal symbols of terms in U^(4) as rho -> infinity"},
    };
    return rules;
}

const OrderRule& order_rule(const std::string& id) {
    for (const auto& r : order_rules())
        if (r.id == id) return r;
    throw std::out_of_range("unknown order rule: " + id);
}

void ProofTrace::add(std::string rule, std::string statement) {
    order_rule(rule);
    lines_.push_back({std::move(rule), std::move(statement)});
}

std::string ProofTrace::to_string() const {
    std::ostringstream os;
    for (const auto& l : lines_) os << l.statement << "  [" << l.rule << ": " << order_rule(l.rule).citation << "]\n";
    return os.str();
}

namespace {

void note(ProofTrace* trace, const char* rule, const std::string& statement) {
    if (trace) trace->add(rule, statement);
}

std::string q(const Rational& r) { return to_string(r); }

}  // namespace

std::pair<MicroOrder, MicroOrder> distorted_wave_order(const MicroOrder& source, ProofTrace* trace) {
    if (source.lagrangian != Lagrangian::SourceConormal)
        throw std::invalid_argument("distorted wave rule needs a source on N*Y, got " + source.to_string());
    const Rational mu = source.value - 1;
    MicroOrder on_flowout{mu - Rational(1, 2), Lagrangian::WaveFlowout};
    MicroOrder on_source{mu - 1, Lagrangian::SourceConormal};
    note(trace, "distorted-wave",
         "f in " + source.to_string() + " so mu = " + q(mu) + "; v in " + on_flowout.to_string() + " off Y and v in " +
             on_source.to_string() + " off Lambda");
    return {on_flowout, on_source};
}

MicroOrder interaction_order(const std::array<MicroOrder, 4>& waves, int derivative_count, int inner_q_count,
                             ProofTrace* trace) {
    if (derivative_count < 0 || inner_q_count < 0)
        throw std::invalid_argument("derivative and causal inverse counts must be non-negative");
    Rational total = 0;
    std::string terms;
    for (const auto& w : waves) {
        total += w.value;
        terms += (terms.empty() ? "" : " + ") + q(w.value);
    }
    note(trace, "interaction-sum", "mu~ = " + terms + " = " + q(total));
    MicroOrder out{total + Rational(3, 2) + derivative_count - 2 * inner_q_count, Lagrangian::InteractionFlowout};
    note(trace, "interaction",
         "mu~ + 3/2 + " + std::to_string(derivative_count) + " - 2*" + std::to_string(inner_q_count) + " = " +
             q(out.value) + " on " + to_string(out.lagrangian));
    return out;
}

MicroOrder restriction_order(const MicroOrder& m, ProofTrace* trace) {
    if (m.lagrangian == Lagrangian::PointConormal || m.lagrangian == Lagrangian::Paired)
        throw std::invalid_argument("restriction rule needs a codimension-one conormal class, got " + m.to_string());
    MicroOrder out{m.value + Rational(3, 4), Lagrangian::PointConormal};
    note(trace, "restriction", m.to_string() + " restricts to " + out.to_string() + " (transversal crossing)");
    return out;
}

GeodesicLedger geodesic_perturbation_orders(const Rational& wave_order) {
    GeodesicLedger g;
    const MicroOrder wave{wave_order, Lagrangian::InteractionFlowout};
    g.christoffel = {wave_order + 1, Lagrangian::InteractionFlowout};
    g.trace.add("derivative", "G_1234 carries one derivative of " + wave.to_string() + ": " + g.christoffel.to_string());
    g.restricted = restriction_order(g.christoffel, &g.trace);
    g.solved = {g.restricted.value - 2, Lagrangian::PointConormal};
    g.trace.add("integration", "two integrations in t: A(t) in " + g.solved.to_string());
    g.coordinate_term = g.solved;
    g.trace.add("integration", "I_2 in " + g.coordinate_term.to_string());
    g.pullback_term = restriction_order(wave, &g.trace);
    g.jacobian_term_vanishes = true;
    g.trace.add("jacobian", "I_3 = 0 along the geodesic");
    g.dominance = g.pullback_term.value - g.coordinate_term.value;
    g.trace.add("dominance", "I_1 - I_2 = " + q(g.dominance));
    return g;
}

const std::vector<InteractionPattern>& interaction_patterns() {
    static const std::vector<InteractionPattern> patterns = {
        {1, "Q(c v1 v2 v3 v4)", 0, 0, Rational(3, 2)},
        {2, "Q(a v1 V Q(b v2 v3 v4))", 1, 1, Rational(1, 2)},
        {3, "Q(b v1 v2 V Q(a v3 v4))", 1, 1, Rational(1, 2)},
        {4, "Q(a v1 V Q(a v2 V Q(a v3 v4)))", 2, 2, Rational(-1, 2)},
        {5, "Q(a V Q(a v1 v2) V Q(a v3 v4))", 2, 2, Rational(-1, 2)},
    };
    return patterns;
}

TreeCounts tree_counts(const TermNode& tree) {
    TreeCounts c;
    switch (tree.kind) {
        case TermNode::Kind::Leaf: break;
        case TermNode::Kind::Inverse: {
            c = tree_counts(*tree.children.front());
            ++c.inner_q_count;
            break;
        }
        case TermNode::Kind::Form: {
            c.derivative_count = CompiledForm(FormFamily::instance().at(tree.form)).derivative_count();
            for (const auto& child : tree.children) {
                TreeCounts s = tree_counts(*child);
                c.derivative_count += s.derivative_count;
                c.inner_q_count += s.inner_q_count;
            }
            break;
        }
    }
    return c;
}

namespace {

const CompiledForm& compiled(const FormKey& key) {
    static const std::map<FormKey, CompiledForm> table = [] {
        std::map<FormKey, CompiledForm> m;
        for (const auto& [k, form] : FormFamily::instance().forms()) m.emplace(k, CompiledForm(form));
        return m;
    }();
    return table.at(key);
}

std::int64_t add(std::int64_t a, std::int64_t b) {
    return (a == kNegInfinity || b == kNegInfinity) ? kNegInfinity : a + b;
}

std::int64_t degree(const CoVec4& v) {
    std::int64_t d = kNegInfinity;
    for (int i = 0; i < 4; ++i) d = std::max(d, infinity_degree(v[i]));
    return d;
}

struct Bound {
    std::int64_t amplitude = kNegInfinity;
    CoVec4 covector;
};

Bound bound_of(const TermNode& t, const NullConfig& config, std::int64_t metric_degree) {
    switch (t.kind) {
        case TermNode::Kind::Leaf:
            return {config.polarization(t.wave).entry_order(), config.zeta(t.wave)};
        case TermNode::Kind::Inverse: {
            Bound b = bound_of(*t.children.front(), config, metric_degree);
            RhoRational norm = norm_sq(config.metric(), b.covector);
            if (norm.is_zero()) throw std::domain_error("causal inverse on a light-like covector in " + t.to_string());
            b.amplitude = add(b.amplitude, -infinity_degree(norm));
            return b;
        }
        case TermNode::Kind::Form: break;
    }
    std::vector<Bound> args;
    Bound out;
    for (const auto& c : t.children) {
        args.push_back(bound_of(*c, config, metric_degree));
        out.covector = out.covector + args.back().covector;
    }
    std::int64_t best = kNegInfinity;
    for (const auto& term : compiled(t.form).terms()) {
        std::int64_t d = 0;
        for (const auto& chain : term.chains) {
            const std::size_t metrics = chain.amplitudes.size() + (chain.cycle ? 0 : 1);
            d = add(d, static_cast<std::int64_t>(metrics) * metric_degree);
            for (int a : chain.amplitudes) d = add(d, args[static_cast<std::size_t>(a)].amplitude);
            if (!chain.cycle)
                for (const auto& end : {chain.first, chain.last})
                    if (end.kind == CompiledForm::EndKind::Covector)
                        d = add(d, degree(args[static_cast<std::size_t>(end.id)].covector));
        }
        best = std::max(best, d);
    }
    out.amplitude = best;
    return out;
}

}  // namespace

std::int64_t rho_order_bound(const TermNode& tree, const NullConfig& config) {
    std::int64_t metric_degree = kNegInfinity;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) metric_degree = std::max(metric_degree, infinity_degree(config.metric().inverse()(i, j)));
    return bound_of(tree, config, metric_degree).amplitude;
}

std::vector<std::string> derivative_cap_violations() {
    std::vector<std::string> out;
    for (const auto& [key, form] : FormFamily::instance().forms())
        for (const auto& [mono, coef] : form.terms())
            if (mono.total_derivatives() > 2)
                out.push_back(to_string(key) + ": monomial with " + std::to_string(mono.total_derivatives()) +
                              " derivatives, coefficient " + to_string(coef));
    return out;
}

}  // namespace nullwave
