#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace nullwave {

/// Exact rational number backed by GMP. Arithmetic keeps values reduced, but
/// the two-argument constructor does not; LaurentPoly reduces what it stores.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "a", "-a" or "a/b" with decimal digits. A decimal point literal such
/// as "2.5" is also accepted and converted exactly. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Canonical text form, "a" or "a/b".
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace nullwave
