#pragma once

#include "nullwave/interaction/term.hpp"
#include "nullwave/geometry/null_config.hpp"

#include <array>
#include <string>
#include <vector>

namespace nullwave {

/// Floating-point evaluation of interaction terms at a sample rho, written
/// directly from the chain formula for the quasilinear forms and the expansion
/// of the Ricci quadratic terms for the semilinear ones. Shares no code with the
/// exact form machinery. Arithmetic is carried in extended precision since the
/// summed covectors mix components of size rho^10 and rho^-10.
namespace oracle {

using Matrix = std::array<double, 16>;

inline constexpr double kRhoMin = 1.5;
inline constexpr double kRhoMax = 4.0;

/// Realized symbol (imaginary unit included, sign excluded) of a tree.
/// Throws std::invalid_argument when rho lies outside [kRhoMin, kRhoMax].
Matrix evaluate(const TermNode& tree, const NullConfig& config, double rho);

/// Realized symbol of a signed summand.
Matrix evaluate(const InteractionTerm& term, const NullConfig& config, double rho);

/// Sum over the given summands; `magnitude` receives the largest entry
/// magnitude of any single summand, the scale against which cancellation
/// error is measured.
Matrix evaluate_sum(const std::vector<InteractionTerm>& terms, const NullConfig& config, double rho,
                    double* magnitude = nullptr);

struct Comparison {
    double max_abs_error = 0;
    double max_rel_error = 0;  // per entry, against max(|exact|, floor)
    double floor = 0;
    bool agrees = false;
    int worst_row = 0;
    int worst_col = 0;
};

/// Entrywise agreement within `tolerance` relative to max(|exact|, floor).
Comparison compare(const Sym2T& exact, const Matrix& approx, double rho, double floor, double tolerance = 1e-9);

std::string to_string(const Matrix& m);

}  // namespace oracle
}  // namespace nullwave
