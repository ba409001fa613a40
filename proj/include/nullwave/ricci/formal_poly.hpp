#pragma once

#include "nullwave/algebra/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace nullwave {

/// One factor of an uncanonicalized index expression.
///
/// Index ids below the expression's free-index count are free; every other id
/// must occur exactly twice across the factors of a monomial.
struct RawFactor {
    enum class Kind : std::uint8_t { Field, InverseMetric, Metric };
    Kind kind = Kind::Field;
    /// Wave slot of a Field factor; -1 while unassigned.
    int slot = -1;
    /// Field: two tensor indices followed by derivative indices.
    /// Metric factors: exactly two indices.
    std::vector<int> idx;

    static RawFactor field(int slot, int a, int b, std::vector<int> derivs = {});
    static RawFactor inverse_metric(int a, int b) { return {Kind::InverseMetric, -1, {a, b}}; }
    static RawFactor metric(int a, int b) { return {Kind::Metric, -1, {a, b}}; }
};

struct RawMonomial {
    Rational coef{1};
    std::vector<RawFactor> factors;

    int field_count() const;
    /// Renders e.g. "-1 h^{a b} u_{a c} h^{c d}" with free indices named first.
    std::string to_string(int free_count) const;
};

using RawExpr = std::vector<RawMonomial>;

/// Product of two raw expressions, keeping only terms with at most max_fields
/// field factors (or all terms when max_fields < 0).
RawExpr multiply(const RawExpr& a, const RawExpr& b, int max_fields = -1);
RawExpr scale(RawExpr a, const Rational& c);
RawExpr concat(RawExpr a, const RawExpr& b);
RawExpr with_field_count(const RawExpr& a, int fields);

/// A port of a wave slot: one of its two tensor indices or one of its
/// derivative indices. Ports of one kind on one slot are interchangeable.
struct PortRef {
    std::uint8_t slot = 0;
    std::uint8_t derivative = 0;  // 0: tensor index, 1: derivative index
    friend auto operator<=>(const PortRef&, const PortRef&) = default;
};

/// Canonical shape of a contracted monomial: the multiset of inverse-metric
/// edges between port classes plus the port each free index sits on.
struct MonomialKey {
    std::vector<std::pair<PortRef, PortRef>> edges;
    std::vector<PortRef> free;
    friend auto operator<=>(const MonomialKey&, const MonomialKey&) = default;

    /// Number of derivative ports carried by each slot.
    std::vector<int> derivative_counts(int arity) const;
    int total_derivatives() const;
};

/// Multilinear form in `arity` wave slots with `free_count` lower free indices,
/// stored as canonical monomials with merged exact coefficients.
class FormalTensorPoly {
public:
    FormalTensorPoly() = default;
    FormalTensorPoly(int arity, int free_count) : arity_(arity), free_count_(free_count) {}

    /// Canonicalizes: every Metric factor is contracted against an inverse
    /// metric, indices are validated, and equal shapes are merged. With
    /// symmetrize_pair, the result is averaged over swapping free indices 0 and 1.
    /// Throws std::invalid_argument on malformed expressions.
    static FormalTensorPoly from_raw(int arity, int free_count, const RawExpr& expr, bool symmetrize_pair = false);

    int arity() const { return arity_; }
    int free_count() const { return free_count_; }
    const std::map<MonomialKey, Rational>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    void add(const MonomialKey& key, const Rational& c);
    FormalTensorPoly& operator+=(const FormalTensorPoly& o);
    FormalTensorPoly scaled(const Rational& c) const;
    /// Terms whose per-slot derivative counts satisfy the predicate.
    template <class Pred>
    FormalTensorPoly filter(Pred pred) const {
        FormalTensorPoly out(arity_, free_count_);
        for (const auto& [k, c] : terms_)
            if (pred(k.derivative_counts(arity_))) out.terms_.emplace(k, c);
        return out;
    }
    /// Relabels slots: slot s becomes perm[s].
    FormalTensorPoly relabeled(const std::vector<int>& perm) const;
    /// Average over all relabelings of the given slots.
    FormalTensorPoly symmetrized_over(const std::vector<int>& slots) const;

    friend bool operator==(const FormalTensorPoly& a, const FormalTensorPoly& b) {
        return a.arity_ == b.arity_ && a.free_count_ == b.free_count_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const FormalTensorPoly& a, const FormalTensorPoly& b) { return !(a == b); }

    /// Human-readable index notation, one monomial per line.
    std::string to_string(const std::string& field_name = "u") const;
    /// One line per monomial: "coef|edges|free".
    std::vector<std::string> to_machine_lines() const;

private:
    int arity_ = 0;
    int free_count_ = 0;
    std::map<MonomialKey, Rational> terms_;
};

/// Builds a monomial key from a contracted raw monomial. Throws on malformed input.
MonomialKey canonical_key(const RawMonomial& m, int free_count);

}  // namespace nullwave
