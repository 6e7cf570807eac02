#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace loopmagnus {

/// Exact rational with arbitrary-precision numerator and denominator.
using Rational = mpq_class;
/// Arbitrary-precision integer.
using Integer = mpz_class;

inline std::string to_string(const Rational &q) { return q.get_str(); }
inline std::string to_string(const Integer &z) { return z.get_str(); }

/// Parses "a" or "a/b" (optional leading '-'). Throws DomainError.
Rational parse_rational(std::string_view text);

/// C(n, k) for any integer n via n(n-1)...(n-k+1)/k!, so it is defined
/// (and polynomial in n) for negative n as well.
Integer binomial(const Integer &n, unsigned k);

Rational factorial_inverse(unsigned k);

} // namespace loopmagnus
