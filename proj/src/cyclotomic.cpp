#include "nestbraid/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "nestbraid/errors.hpp"

namespace nestbraid {

namespace {

template <class T>
void trim(std::vector<T>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials; the divisor is monic.
IntPoly divide_monic(IntPoly num, const IntPoly& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {};
  IntPoly quot(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    Integer c = num[k];
    if (c == 0) continue;
    quot[k - dn] = c;
    for (std::size_t i = 0; i <= dn; ++i) num[k - dn + i] -= c * den[i];
  }
  trim(num);
  if (!num.empty()) throw ConsistencyError("cyclotomic division left a remainder");
  trim(quot);
  return quot;
}

// Remainder of p modulo the monic polynomial mod.
PolyQ reduce(PolyQ p, const IntPoly& mod) {
  const std::size_t d = mod.size() - 1;
  for (std::size_t k = p.size(); k-- > d;) {
    if (p[k] == 0) continue;
    Rational c = p[k];
    for (std::size_t i = 0; i <= d; ++i) p[k - d + i] -= c * mod[i];
  }
  p.resize(d, Rational(0));
  return p;
}

PolyQ poly_mul(const PolyQ& a, const PolyQ& b) {
  if (a.empty() || b.empty()) return {};
  PolyQ out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

PolyQ poly_sub(const PolyQ& a, const PolyQ& b) {
  PolyQ out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

// Quotient and remainder over Q.
std::pair<PolyQ, PolyQ> poly_divmod(PolyQ a, const PolyQ& b) {
  const std::size_t db = b.size() - 1;
  PolyQ q(a.size() > db ? a.size() - db : 0, Rational(0));
  for (std::size_t k = a.size(); k > db; --k) {
    const std::size_t top = k - 1;
    if (a[top] == 0) continue;
    Rational c = a[top] / b.back();
    q[top - db] = c;
    for (std::size_t i = 0; i <= db; ++i) a[top - db + i] -= c * b[i];
  }
  trim(a);
  trim(q);
  return {q, a};
}

}  // namespace

const IntPoly& cyclotomic_polynomial(int m) {
  if (m < 1) throw InvalidInput("cyclotomic order must be positive");
  static std::mutex mutex;
  static std::map<int, IntPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  IntPoly p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (int d = 1; d < m; ++d)
    if (m % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(m, std::move(p)).first->second;
}

int euler_phi(int m) {
  return static_cast<int>(cyclotomic_polynomial(m).size()) - 1;
}

Cyclotomic::Cyclotomic() : order_(1), coeffs_(1, Rational(0)) {}

Cyclotomic::Cyclotomic(const Rational& value) : order_(1), coeffs_(1, value) {}

Cyclotomic::Cyclotomic(int order, const PolyQ& coeffs) : order_(order) {
  coeffs_ = reduce(coeffs, cyclotomic_polynomial(order));
}

Cyclotomic Cyclotomic::root_of_unity(int m, int j) {
  if (m < 1) throw InvalidInput("root of unity order must be positive");
  j = ((j % m) + m) % m;
  PolyQ p(j + 1, Rational(0));
  p[j] = 1;
  return Cyclotomic(m, p);
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational(Rational* value) const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  if (value) *value = coeffs_[0];
  return true;
}

Cyclotomic Cyclotomic::embed(int target) const {
  if (target == order_) return *this;
  if (target % order_ != 0)
    throw InvalidInput("cannot embed Q(zeta_" + std::to_string(order_) + ") into Q(zeta_" +
                       std::to_string(target) + ")");
  const int step = target / order_;
  PolyQ p((coeffs_.size() - 1) * step + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) p[i * step] = coeffs_[i];
  return Cyclotomic(target, p);
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  const int l = std::lcm(order_, rhs.order_);
  if (l != order_) *this = embed(l);
  if (l != rhs.order_) return *this += rhs.embed(l);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  const int l = std::lcm(order_, rhs.order_);
  if (l != order_) *this = embed(l);
  if (l != rhs.order_) return *this *= rhs.embed(l);
  coeffs_ = reduce(poly_mul(coeffs_, rhs.coeffs_), cyclotomic_polynomial(order_));
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& rhs) { return *this *= rhs.inverse(); }

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw InvalidInput("inverse of zero cyclotomic");
  // Extended Euclid on (a, Phi_m); Phi_m is irreducible, so gcd is a unit.
  const IntPoly& phi = cyclotomic_polynomial(order_);
  PolyQ r0(phi.begin(), phi.end()), r1 = coeffs_;
  trim(r1);
  PolyQ s0, s1{Rational(1)};  // coefficients of a in r0, r1
  while (r1.size() > 1) {
    auto [q, r] = poly_divmod(r0, r1);
    PolyQ s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  Rational c = r1[0];
  for (auto& x : s1) x /= c;
  return Cyclotomic(order_, s1);
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  const int l = std::lcm(a.order_, b.order_);
  if (l != a.order_ || l != b.order_) return a.embed(l) == b.embed(l);
  return a.coeffs_ == b.coeffs_;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << nestbraid::to_string(mag);
      continue;
    }
    if (mag != 1) out << nestbraid::to_string(mag) << "*";
    out << "z";
    if (i > 1) out << "^" << i;
  }
  if (first) out << "0";
  return out.str();
}

VectorCyc to_cyclotomic(const VectorQ& v) { return VectorCyc(v.begin(), v.end()); }

}  // namespace nestbraid
