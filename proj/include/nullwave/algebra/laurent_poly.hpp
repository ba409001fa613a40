#pragma once

#include "nullwave/algebra/rational.hpp"

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace nullwave {

/// Sentinel degree of the zero polynomial / zero function.
inline constexpr std::int64_t kNegInfinity = std::numeric_limits<std::int64_t>::min();

/// Sparse Laurent polynomial in rho with rational coefficients.
///
/// Terms are kept sorted by strictly decreasing exponent with no zero
/// coefficients, so the representation of a value is unique.
class LaurentPoly {
public:
    using Exponent = std::int64_t;
    using Term = std::pair<Exponent, Rational>;

    LaurentPoly() = default;
    LaurentPoly(const Rational& c);  // NOLINT: constants convert implicitly
    LaurentPoly(long c) : LaurentPoly(Rational(c)) {}  // NOLINT
    static LaurentPoly monomial(const Rational& c, Exponent e);
    /// Builds from arbitrary (exponent, coefficient) pairs, merging duplicates.
    static LaurentPoly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t size() const { return terms_.size(); }

    /// Highest exponent, kNegInfinity for zero.
    Exponent degree() const { return terms_.empty() ? kNegInfinity : terms_.front().first; }
    /// Lowest exponent, kNegInfinity for zero.
    Exponent low_degree() const { return terms_.empty() ? kNegInfinity : terms_.back().first; }
    const Rational& leading_coefficient() const { return terms_.front().second; }
    Rational coefficient(Exponent e) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rational& c);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
    friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// Multiplies by rho^shift.
    LaurentPoly shifted(Exponent shift) const;
    /// Keeps only terms with exponent >= min_exponent.
    LaurentPoly truncated_below(Exponent min_exponent) const;
    /// gcd of all exponents (0 for the zero polynomial or a lone constant).
    Exponent exponent_stride() const;

    double evaluate(double rho) const;
    Rational evaluate(const Rational& rho) const;

    /// Human readable form such as "2*rho^10 - 2" or "1/2*rho^-10".
    std::string to_string() const;

private:
    void merge_add(const LaurentPoly& o, bool subtract);
    std::vector<Term> terms_;
};

}  // namespace nullwave
