#pragma once

#include "nullwave/algebra/laurent_poly.hpp"
#include "nullwave/algebra/rational.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace nullwave {

/// Element of Q(rho), the field of rational functions in the large parameter.
///
/// Canonical form: numerator and denominator are polynomials in rho with
/// integer coefficients, coprime as polynomials, with joint integer content 1
/// and a positive leading denominator coefficient. Zero is 0/1. Two values are
/// equal exactly when their representations are.
class RhoRational {
public:
    RhoRational() : den_(1) {}
    RhoRational(const Rational& c);  // NOLINT: constants convert implicitly
    RhoRational(long c) : RhoRational(Rational(c)) {}  // NOLINT
    RhoRational(const LaurentPoly& p);  // NOLINT
    RhoRational(LaurentPoly num, LaurentPoly den);

    /// c * rho^e.
    static RhoRational monomial(const Rational& c, std::int64_t e);
    static RhoRational rho() { return monomial(1, 1); }

    const LaurentPoly& numerator() const { return num_; }
    const LaurentPoly& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_monomial(); }

    RhoRational operator-() const;
    friend RhoRational operator+(const RhoRational& a, const RhoRational& b);
    friend RhoRational operator-(const RhoRational& a, const RhoRational& b);
    friend RhoRational operator*(const RhoRational& a, const RhoRational& b);
    /// Throws std::domain_error when b is zero.
    friend RhoRational operator/(const RhoRational& a, const RhoRational& b);
    RhoRational& operator+=(const RhoRational& o) { return *this = *this + o; }
    RhoRational& operator-=(const RhoRational& o) { return *this = *this - o; }
    RhoRational& operator*=(const RhoRational& o) { return *this = *this * o; }
    RhoRational& operator/=(const RhoRational& o) { return *this = *this / o; }
    friend bool operator==(const RhoRational& a, const RhoRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RhoRational& a, const RhoRational& b) { return !(a == b); }

    RhoRational inverse() const;
    RhoRational pow(int n) const;

    /// As a Laurent polynomial when the denominator is a monomial.
    LaurentPoly as_laurent() const;

    double evaluate(double rho) const;
    /// Exact value at a rational point; throws std::domain_error at a pole.
    Rational evaluate(const Rational& rho) const;

    /// Serialized form "P(rho)/Q(rho)", e.g. "1/(2*rho^10 - 2)".
    std::string to_string() const;

private:
    void canonicalize();
    LaurentPoly num_;
    LaurentPoly den_;
};

/// deg(numerator) - deg(denominator); kNegInfinity for zero.
std::int64_t infinity_degree(const RhoRational& a);

/// Truncated Laurent expansion at rho = infinity.
///
/// error_exponent is the infinity degree of the exact remainder, so the tail
/// is O(rho^error_exponent); kNegInfinity means the listed terms are exact.
struct LaurentTail {
    std::vector<LaurentPoly::Term> terms;
    std::int64_t error_exponent = kNegInfinity;

    bool exact() const { return error_exponent == kNegInfinity; }
    LaurentPoly sum() const { return LaurentPoly::from_terms(terms); }
    /// Coefficient of rho^e among the listed terms.
    Rational coefficient(std::int64_t e) const;
    std::string to_string() const;
};

/// First n_terms terms of the expansion at infinity. Throws std::domain_error
/// for zero input or n_terms == 0.
LaurentTail expand_at_infinity(const RhoRational& a, int n_terms);

/// Parses expressions over rho built from integers, decimals, rho, + - * / ^
/// and parentheses, for example "1/2*rho^-10" or "(rho^10 - 1)^2".
/// Throws std::invalid_argument on malformed input.
RhoRational parse_rho_rational(std::string_view text);

}  // namespace nullwave
