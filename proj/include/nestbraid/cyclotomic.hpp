#pragma once

#include <string>
#include <vector>

#include "nestbraid/rational.hpp"

namespace nestbraid {

/// Dense polynomial, coefficient i multiplies x^i. No trailing zeros.
using IntPoly = std::vector<Integer>;
using PolyQ = std::vector<Rational>;

/// m-th cyclotomic polynomial, obtained by dividing x^m - 1 by every
/// Phi_d with d | m, d < m. Results are memoized.
const IntPoly& cyclotomic_polynomial(int m);

int euler_phi(int m);

/// Element of the cyclotomic field Q(zeta_m) = Q[x]/Phi_m, stored as its
/// reduced residue (length exactly phi(m)). Operands of different orders are
/// embedded into the lcm-order field before combining, so any two elements
/// can be added, multiplied and compared.
class Cyclotomic {
 public:
  /// Zero in Q = Q(zeta_1).
  Cyclotomic();
  Cyclotomic(const Rational& value);  // NOLINT: rationals embed implicitly
  Cyclotomic(int value) : Cyclotomic(Rational(value)) {}  // NOLINT
  /// Arbitrary residue; coeffs may have any length and are reduced mod Phi_m.
  Cyclotomic(int order, const PolyQ& coeffs);

  /// zeta_m^j with zeta_m = exp(2 pi i / m).
  static Cyclotomic root_of_unity(int m, int j);

  int order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  /// True when the element lies in Q; `value` receives it.
  bool is_rational(Rational* value = nullptr) const;

  /// Same element viewed in Q(zeta_target); requires order() | target.
  Cyclotomic embed(int target) const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator/=(const Cyclotomic& rhs);

  /// Multiplicative inverse; throws InvalidInput on zero.
  Cyclotomic inverse() const;

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// Human readable, e.g. "1/2 + 3*z - z^2" where z = zeta_order.
  std::string to_string() const;

 private:
  int order_;
  std::vector<Rational> coeffs_;
};

inline bool is_zero(const Cyclotomic& value) { return value.is_zero(); }

using VectorCyc = std::vector<Cyclotomic>;

VectorCyc to_cyclotomic(const VectorQ& v);

}  // namespace nestbraid
