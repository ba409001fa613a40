#pragma once

#include "nullwave/geometry/null_config.hpp"
#include "nullwave/interaction/term.hpp"
#include "nullwave/ricci/expansion.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nullwave {

/// Exponent w of a factor lambda^w, lambda being the conformal factor
/// e^gamma at the interaction point.
struct Weight {
    int exponent = 0;
    friend Weight operator+(Weight a, Weight b) { return {a.exponent + b.exponent}; }
    friend bool operator==(Weight a, Weight b) { return a.exponent == b.exponent; }
};

/// Raised when a scaled evaluation is not a pure power of lambda.
class HomogeneityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exponent w with ratio == lambda^w for |w| <= 64, if any.
std::optional<int> pure_power_exponent(const Rational& ratio, const Rational& lambda);

/// Homogeneity degree of a derived form under h -> lambda^2 h with the slot
/// data held fixed. The form is evaluated on fixed generic slot data with the
/// Minkowski metric and with lambda^2 times it for lambda = 2 and 3; every
/// nonzero entry must scale by the same pure power. Throws HomogeneityError
/// listing the inverse-metric counts of the monomials when it does not.
Weight form_scaling_degree(const FormKey& key);

/// Degree read off the monomials alone: -2 per inverse metric.
/// Throws HomogeneityError when the monomials disagree.
Weight monomial_scaling_degree(const FormalTensorPoly& form);

enum class FactorKind { WaveSymbol, Coefficient, QFlowoutSource, QFlowoutTarget };

std::string to_string(FactorKind kind);

struct WeightFactor {
    FactorKind kind = FactorKind::WaveSymbol;
    Weight weight;
    /// Set for factors evaluated where the conformal factor is 1.
    bool suppressed = false;
};

/// Sum of the weights of the unsuppressed factors.
Weight compose_total_weight(const std::vector<WeightFactor>& chain);

/// Four wave symbols (-1 each), the coefficient forms (-8), and the causal
/// inverse on the flowout (+3 at the source, -1 at a target where the
/// conformal factor is 1).
std::vector<WeightFactor> canonical_weight_chain();

/// Weight of the causal inverse on the diagonal, +2.
Weight q_diag_weight();

/// The same weight measured on the principal symbol: 1 / |xi|^2 under
/// lambda^2 h against 1 / |xi|^2 under h.
Weight q_diag_weight_from_symbol(const Rational& lambda = 2);

/// Result of rescaling one complete interaction term.
struct ScalingCheck {
    std::optional<int> exponent;  // set when the scaled symbol is a pure power times the original
    bool nonzero = false;
};

/// Evaluates the term on `config` and again with metric lambda^2 h and every
/// wave amplitude multiplied by 1/lambda, and compares the two symbols.
ScalingCheck end_to_end_scaling(const InteractionTerm& term, const NullConfig& config, const Rational& lambda);

}  // namespace nullwave
