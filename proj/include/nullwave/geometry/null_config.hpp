#pragma once

#include "nullwave/tensor/tensor.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace nullwave {

/// Raised when a covector configuration violates a structural invariant.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Four light-like covectors whose sum is light-like, at the interaction point.
class NullConfig {
public:
    /// Validates every invariant and throws ConfigError naming the first failure.
    NullConfig(std::array<CoVec4, 4> zetas, Metric4 metric = Metric4());

    /// Wave index 1..4.
    const CoVec4& zeta(int i) const { return zetas_.at(static_cast<std::size_t>(i - 1)); }
    const std::array<CoVec4, 4>& zetas() const { return zetas_; }
    const Metric4& metric() const { return metric_; }
    CoVec4 sum() const;
    /// Polarization zeta_i (x) zeta_i.
    Sym2T polarization(int i) const { return outer_square(zeta(i)); }

private:
    std::array<CoVec4, 4> zetas_;
    Metric4 metric_;
};

/// The pre-scaling null covectors (1,0,1,0), (1,0,0,1), (-1,-1,0,0), (1,-1,0,0).
std::array<CoVec4, 4> tilde_zetas();

/// The working configuration obtained with alpha = (1, -1, -rho^-10/2, rho^10).
NullConfig standard_config();

/// Solves |sum_i alpha_i tilde_i|^2 = 0 for alpha_3. The condition is linear in
/// alpha_3 because tilde_3 is null. Throws ConfigError if its coefficient vanishes.
RhoRational solve_null_scale(const RhoRational& alpha1, const RhoRational& alpha2, const RhoRational& alpha4,
                             const std::array<CoVec4, 4>& tilde, const Metric4& metric = Metric4());

struct PairingEntry {
    int i = 0;
    int j = 0;
    RhoRational value;
};

struct NormEntry {
    std::array<int, 3> waves{};
    RhoRational value;
};

/// h(zeta_i, zeta_j) for the six pairs i < j in lexicographic order.
std::vector<PairingEntry> pairing_table(const NullConfig& config);
/// |zeta_i + zeta_j + zeta_k|^2 for the four triples in lexicographic order.
std::vector<NormEntry> triple_norm_table(const NullConfig& config);

/// A point of the flat model with exact coordinates.
struct FlatPoint {
    std::array<Rational, 4> x{};
    std::string to_string() const;
};

/// True iff neither point lies in the closed causal future of the other, that is
/// iff the separation is strictly spacelike.
bool causally_unrelated(const FlatPoint& p, const FlatPoint& q);

struct CausalPair {
    int i = 0;
    int j = 0;
    bool unrelated = false;
};

struct Backtrace {
    std::array<FlatPoint, 4> sources;
    /// Future-pointing ray directions normalized to unit time component.
    std::array<std::array<Rational, 4>, 4> directions;
    std::vector<CausalPair> pairs;
    bool tangents_independent = false;
    bool all_unrelated() const;
};

/// Places x_i = q0 - t_i d_i where d_i is the future-pointing raised zeta_i at
/// rho_value. Throws std::invalid_argument unless rho_value > 1 and every t_i >= 0.
Backtrace backtrace_sources(const FlatPoint& q0, const NullConfig& config, const Rational& rho_value,
                            const std::array<Rational, 4>& times);

}  // namespace nullwave
