#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace nestbraid {

/// Arbitrary precision rational. GMP keeps it canonical (coprime, q > 0)
/// after every arithmetic operation; values built from strings go through
/// parse_rational which canonicalizes explicitly.
using Rational = mpq_class;
using Integer = mpz_class;
using VectorQ = std::vector<Rational>;

/// Parses "p", "-p" or "p/q". Throws InvalidInput on anything else,
/// including a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

/// Scales a nonzero rational vector to the primitive integer vector with
/// positive first nonzero entry. The zero vector is returned unchanged.
VectorQ primitive_integer(const VectorQ& v);

Rational dot(const VectorQ& a, const VectorQ& b);

}  // namespace nestbraid
