#pragma once

#include "nullwave/algebra/rational.hpp"
#include "nullwave/geometry/null_config.hpp"
#include "nullwave/interaction/term.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace nullwave {

/// Lagrangian submanifold a microlocal order refers to.
enum class Lagrangian {
    SourceConormal,      // N*Y
    WaveFlowout,         // Lambda_i
    InteractionFlowout,  // Lambda^g_{q0}
    PointConormal,       // N*{p0} along a curve
    Paired,              // (N*Y, Lambda)
};

std::string to_string(Lagrangian l);

/// Order m of a class I^m(L).
struct MicroOrder {
    Rational value;
    Lagrangian lagrangian = Lagrangian::SourceConormal;

    std::string to_string() const;
    friend bool operator==(const MicroOrder& a, const MicroOrder& b) {
        return a.value == b.value && a.lagrangian == b.lagrangian;
    }
};

/// A named rule with the citation and the quoted statement it encodes.
struct OrderRule {
    std::string id;
    std::string citation;
    std::string quote;
};

/// All rules and axioms known to the engine, in a fixed order.
const std::vector<OrderRule>& order_rules();
/// Throws std::out_of_range for an unknown id.
const OrderRule& order_rule(const std::string& id);

/// One applied rule: the rule id and the resulting statement.
struct TraceLine {
    std::string rule;
    std::string statement;
};

class ProofTrace {
public:
    void add(std::string rule, std::string statement);
    const std::vector<TraceLine>& lines() const { return lines_; }
    /// One line per step, "statement  [rule: citation]".
    std::string to_string() const;

private:
    std::vector<TraceLine> lines_;
};

/// Sources must be at least this singular for the C^4 solutions to exist.
/// Recorded as an axiom; no derivation chain is implemented.
inline const Rational kSourceOrderBound{-17};

/// Orders of the distorted plane wave Q(f) for f in I^{mu+1}(N*Y): mu - 1/2 on
/// the flowout and mu - 1 on N*Y away from it. Throws std::invalid_argument
/// unless the source lives on N*Y.
std::pair<MicroOrder, MicroOrder> distorted_wave_order(const MicroOrder& source, ProofTrace* trace = nullptr);

/// Order of a four-wave interaction on the interaction flowout:
/// sum(mu) + 3/2 + derivative_count - 2 inner_q_count. Throws
/// std::invalid_argument for negative counts.
MicroOrder interaction_order(const std::array<MicroOrder, 4>& waves, int derivative_count, int inner_q_count,
                             ProofTrace* trace = nullptr);

/// Restriction to a curve crossing a codimension-one conormal transversally
/// gains 3/4. Throws std::invalid_argument for point conormals and paired classes.
MicroOrder restriction_order(const MicroOrder& m, ProofTrace* trace = nullptr);

/// Singularity orders along the observer geodesic for a metric perturbation
/// in I^mu of the light cone.
struct GeodesicLedger {
    MicroOrder christoffel;        // one derivative of the perturbation
    MicroOrder restricted;         // its restriction to the geodesic
    MicroOrder solved;             // after integrating twice in t
    MicroOrder pullback_term;      // I_1
    MicroOrder coordinate_term;    // I_2
    bool jacobian_term_vanishes = true;  // I_3 on the geodesic
    Rational dominance;            // I_1 - I_2
    ProofTrace trace;
};
GeodesicLedger geodesic_perturbation_orders(const Rational& wave_order);

/// One pattern of the four-wave order table.
struct InteractionPattern {
    int number = 0;
    std::string shape;
    int derivative_count = 0;
    int inner_q_count = 0;
    Rational offset;  // expected order minus the summed wave orders
};
const std::vector<InteractionPattern>& interaction_patterns();

/// Derivative and inner causal-inverse counts of an interaction tree, as used
/// by interaction_order: every form contributes its derivative count and every
/// causal inverse below the root counts once.
struct TreeCounts {
    int derivative_count = 0;
    int inner_q_count = 0;
};
TreeCounts tree_counts(const TermNode& tree);

/// Upper bound on the degree in rho of every entry of a tree's symbol, from
/// degree counting alone: leaves contribute the degrees of their amplitudes and
/// covectors, a causal inverse subtracts the exact degree of |xi|^2, and a form
/// takes the largest degree over its monomials.
std::int64_t rho_order_bound(const TermNode& tree, const NullConfig& config);

/// One line per monomial of the derived forms carrying more than two
/// derivatives. Empty when the cap holds.
std::vector<std::string> derivative_cap_violations();

}  // namespace nullwave
