#pragma once

#include "nullwave/geometry/null_config.hpp"
#include "nullwave/interaction/term.hpp"

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

namespace nullwave {

/// Principal symbol of a (sub)term at the interaction point, in units of
/// (2 pi)^-3: `matrix` times the imaginary unit to the power `i_power`.
struct SymbolValue {
    Sym2T matrix;
    CoVec4 total_covector;
    int i_power = 0;
    int prefactor_2pi = 0;

    /// matrix * i^i_power. Throws std::logic_error for odd powers.
    Sym2T realized() const;
};

/// Raised when the causal inverse meets a light-like total covector.
class CharacteristicDenominator : public std::runtime_error {
public:
    CharacteristicDenominator(std::vector<int> waves, const std::string& term);
    const std::vector<int>& waves() const { return waves_; }

private:
    std::vector<int> waves_;
};

/// Evaluates interaction terms on one configuration, caching every subterm.
/// Not thread-safe; use one evaluator per thread.
class InteractionEvaluator {
public:
    /// Wave amplitudes default to the polarizations zeta_i (x) zeta_i.
    explicit InteractionEvaluator(const NullConfig& config,
                                  std::optional<std::array<Sym2T, 4>> amplitudes = std::nullopt);
    ~InteractionEvaluator();
    InteractionEvaluator(InteractionEvaluator&&) noexcept;
    InteractionEvaluator& operator=(InteractionEvaluator&&) noexcept;

    const NullConfig& config() const;
    /// Symbol of an unsigned tree.
    SymbolValue eval(const TermNode& tree);
    /// Symbol of a summand with its sign folded into the matrix.
    SymbolValue eval(const InteractionTerm& term);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

SymbolValue eval_term(const TermNode& tree, const NullConfig& config);

/// Coordinates of a symmetric matrix in the basis built from four independent
/// covectors: entry (i, i) multiplies z_i (x) z_i and entry (i, j), i < j,
/// multiplies z_i (x) z_j + z_j (x) z_i. The lower triangle mirrors the upper.
Mat4 pair_basis_coordinates(const Sym2T& m, const std::array<CoVec4, 4>& z);

/// Sum of realized symbols, carrying i_power 0.
SymbolValue sum_realized(const std::vector<SymbolValue>& values);

}  // namespace nullwave
