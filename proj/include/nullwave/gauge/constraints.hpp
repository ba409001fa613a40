#pragma once

#include "nullwave/tensor/tensor.hpp"

#include <random>
#include <string>
#include <vector>

namespace nullwave {

enum class ConstraintKind { HarmonicGauge, ConservationLaw, ScalarConservation, MaxwellConservation };

std::string to_string(ConstraintKind kind);

/// -m^{ab} xi_a A_{b mu} + 1/2 xi_mu m^{ab} A_{ab}. Vanishes iff A is an
/// admissible wave-gauge polarization at (x, xi).
CoVec4 harmonic_gauge_residual(const Metric4& m, const CoVec4& xi, const Sym2T& a);

/// m^{pk} eta_p A_{kj}.
CoVec4 conservation_residual(const Metric4& m, const CoVec4& eta, const Sym2T& a);

/// 1/2 m^{pk} eta_p A_{kj} + sum_l B_l (grad phi_l)_j. Throws
/// std::invalid_argument when the lists are empty or of different lengths.
CoVec4 scalar_conservation_residual(const Metric4& m, const CoVec4& eta, const Sym2T& a,
                                    const std::vector<RhoRational>& b, const std::vector<CoVec4>& phi_gradients);

/// Euclidean contraction sum_a eta_a B_a.
RhoRational maxwell_conservation_residual(const CoVec4& eta, const CoVec4& b);

struct ConstraintDimension {
    int dimension = 0;
    int fiber_dimension = 0;
    int rank = 0;
    /// Set when the covector is zero and the constraint is void.
    bool degenerate = false;
};

/// Kernel dimension of the constraint viewed as a linear map on the symmetric
/// two-tensor fiber (10-dimensional) or, for Maxwell, on covectors (4-dimensional).
/// ScalarConservation is measured on the tensor part with the scalar amplitudes off.
ConstraintDimension constraint_space_dim(ConstraintKind kind, const Metric4& m, const CoVec4& covector);

/// Exact rank of a matrix over Q(rho) by fraction-free elimination.
int exact_rank(std::vector<std::vector<RhoRational>> rows);

/// Random light-like covector t(1, n) with n a rational point of the unit sphere
/// and t a nonzero rational scale of either sign.
CoVec4 random_null_covector(std::mt19937_64& rng);

}  // namespace nullwave
