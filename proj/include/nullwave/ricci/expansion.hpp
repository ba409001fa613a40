#pragma once

#include "nullwave/ricci/formal_poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace nullwave {

/// Terms (-1)^n (h^-1 u)^n h^-1 for n = 0..order of the inverse of h + u.
/// Free indices 0 and 1 are the two upper indices of the inverse.
std::vector<RawExpr> metric_inverse_series(int order);

/// Curl-free part of the Christoffel symbol with lowered first index,
/// 1/2 (d_b u_{la} + d_a u_{lb} - d_l u_{ab}), with free indices (l, a, b).
FormalTensorPoly christoffel_form();

/// Homogeneous part of degree k of the reduced Ricci tensor around a constant
/// background, polarized over k wave slots and symmetric in (mu, nu).
struct RicciPart {
    int order = 0;
    /// Terms with two derivatives on a single slot.
    FormalTensorPoly quasilinear;
    /// Terms with the two derivatives on different slots.
    FormalTensorPoly semilinear;
    /// Terms of the semilinear part carrying fewer than two derivatives.
    int discarded = 0;
};

/// k in 1..4. Throws std::invalid_argument otherwise.
RicciPart reduced_ricci_expansion(int k);

/// Full is the sum of the quasilinear and semilinear forms of one order.
enum class FormKind { Quasilinear, Semilinear, WaveOperator, Full };

struct FormKey {
    FormKind kind = FormKind::Quasilinear;
    int order = 2;
    friend auto operator<=>(const FormKey&, const FormKey&) = default;
};

/// "P2", "H3", "W1", "G4".
std::string to_string(const FormKey& key);

/// The interaction coefficient forms, normalized to twice the reduced Ricci
/// tensor. Quasilinear forms carry both derivatives on their last slot and are
/// symmetric in the remaining slots; semilinear forms are fully symmetric.
/// The order-1 wave operator is kept in Ricci normalization.
class FormFamily {
public:
    /// Derives P2..P4, H2..H4, their sums G2..G4 and the wave operator mechanically.
    static const FormFamily& instance();

    const FormalTensorPoly& at(const FormKey& key) const;
    const FormalTensorPoly& quasilinear(int k) const { return at({FormKind::Quasilinear, k}); }
    const FormalTensorPoly& semilinear(int k) const { return at({FormKind::Semilinear, k}); }
    const std::map<FormKey, FormalTensorPoly>& forms() const { return forms_; }
    /// Discarded low-derivative semilinear monomials per order.
    const std::map<int, int>& discard_counts() const { return discarded_; }

private:
    FormFamily();
    std::map<FormKey, FormalTensorPoly> forms_;
    std::map<int, int> discarded_;
};

/// (-1)^k (h^-1 u_1 h^-1 ... u_{k-1} h^-1)^{pq} d_p d_q u_k, symmetrized over the
/// coefficient slots.
FormalTensorPoly closed_form_quasilinear(int k);

/// The quadratic semilinear form written out directly:
/// 2 h^{ab} h_{ps} h^{pl} G(u)_{l mu b} h^{sg} G(u)_{g nu a}
///   + h_{nu l} h^{lk} G(u)_{k ab} h^{aq} h^{bd} d_mu u_{qd} + (mu <-> nu),
/// polarized over two slots.
FormalTensorPoly closed_form_quadratic_semilinear();

}  // namespace nullwave
