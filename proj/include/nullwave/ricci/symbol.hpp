#pragma once

#include "nullwave/ricci/formal_poly.hpp"
#include "nullwave/tensor/tensor.hpp"

#include <array>
#include <vector>

namespace nullwave {

/// Symbol data bound to one wave slot of a form: the amplitude matrix and the
/// covector that each derivative of that slot turns into.
struct SlotSymbol {
    Sym2T matrix;
    CoVec4 covector;
};

/// A form evaluated on slot symbols: `matrix` times the imaginary unit raised
/// to `i_power` (one factor per derivative).
struct FormSymbol {
    Sym2T matrix;
    int i_power = 0;
};

/// A form flattened into contraction chains so that it can be evaluated
/// repeatedly on concrete matrices over any exact scalar type.
///
/// Every connected component of a monomial is a path or a cycle: covector and
/// free-index ends, amplitude matrices in between, joined by inverse metrics.
class CompiledForm {
public:
    template <class T>
    using Matrix = std::array<T, 16>;
    template <class T>
    using Vector = std::array<T, 4>;

    /// Requires two free indices. Throws std::invalid_argument otherwise, or if
    /// the monomials carry different derivative totals.
    explicit CompiledForm(const FormalTensorPoly& form);

    int arity() const { return arity_; }
    int derivative_count() const { return derivatives_; }

    /// Row-major result in the free indices (mu, nu).
    /// Instantiated for LaurentPoly and RhoRational.
    template <class T>
    Matrix<T> contract(const Matrix<T>& inverse_metric, const std::vector<const Matrix<T>*>& amplitudes,
                       const std::vector<const Vector<T>*>& covectors) const;

    enum class EndKind : std::uint8_t { Covector, Free };
    struct End {
        EndKind kind = EndKind::Covector;
        int id = 0;  // slot for covector ends, free index otherwise
    };
    struct Chain {
        bool cycle = false;
        End first;
        End last;
        std::vector<int> amplitudes;
    };
    struct Term {
        Rational coef;
        std::vector<Chain> chains;
    };
    const std::vector<Term>& terms() const { return terms_; }

private:
    int arity_ = 0;
    int derivatives_ = 0;
    std::vector<Term> terms_;
};

/// Substitutes each slot's amplitude for u and i times its covector for each
/// derivative, contracting with the metric's inverse. Throws
/// std::invalid_argument when the number of slot symbols differs from the arity.
FormSymbol symbol_of_form(const FormalTensorPoly& form, const std::vector<SlotSymbol>& slots,
                          const Metric4& metric = Metric4());
FormSymbol symbol_of_form(const CompiledForm& form, const std::vector<SlotSymbol>& slots,
                          const Metric4& metric = Metric4());

}  // namespace nullwave
