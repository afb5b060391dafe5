#include "nestbraid/codec.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "nestbraid/errors.hpp"

namespace nestbraid {

namespace {

// e_i - e_j for S_n, written in the basis e_k - e_n of the sum-zero space.
VectorQ sn_root(int i, int j, int n) {
  VectorQ v(static_cast<std::size_t>(n - 1), Rational(0));
  if (i < n) v[static_cast<std::size_t>(i - 1)] += 1;
  if (j < n) v[static_cast<std::size_t>(j - 1)] -= 1;
  return v;
}

// e_i + sign * e_j in Q^n.
VectorQ dn_vector(int i, int j, int sign, int n) {
  VectorQ v(static_cast<std::size_t>(n), Rational(0));
  v[static_cast<std::size_t>(i - 1)] += 1;
  v[static_cast<std::size_t>(j - 1)] += sign;
  return v;
}

VectorQ unit(int i, int n) {
  VectorQ v(static_cast<std::size_t>(n), Rational(0));
  v[static_cast<std::size_t>(i - 1)] = 1;
  return v;
}

std::string join(const std::vector<int>& xs) {
  std::string out = "{";
  for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? "," : "") + std::to_string(xs[k]);
  return out + "}";
}

bool laminar(const std::set<int>& a, const std::set<int>& b) {
  bool ab = std::includes(a.begin(), a.end(), b.begin(), b.end());
  bool ba = std::includes(b.begin(), b.end(), a.begin(), a.end());
  if (ab || ba) return true;
  for (int x : a)
    if (b.count(x)) return false;
  return true;
}

}  // namespace

Subspace sn_decode(const SnLabel& label, int n) {
  const auto& e = label.elements;
  if (e.size() < 2) throw InvalidInput("S_n label needs at least two elements");
  for (std::size_t k = 0; k < e.size(); ++k)
    if (e[k] < 1 || e[k] > n || (k && e[k] <= e[k - 1]))
      throw InvalidInput("S_n label " + join(e) + " is not a sorted subset of 1.." + std::to_string(n));
  std::vector<VectorQ> rows;
  for (std::size_t k = 1; k < e.size(); ++k) rows.push_back(sn_root(e[0], e[k], n));
  return Subspace::span(static_cast<std::size_t>(n - 1), rows);
}

SnLabel sn_encode(const Subspace& s, int n) {
  if (s.ambient_dim() != static_cast<std::size_t>(n - 1)) throw InvalidInput("subspace is not in the S_n space");
  std::set<int> support;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (s.contains(sn_root(i, j, n))) {
        support.insert(i);
        support.insert(j);
      }
  SnLabel label{{support.begin(), support.end()}};
  if (label.elements.size() < 2 || !(sn_decode(label, n) == s))
    throw InvalidInput("subspace " + s.to_string() + " is not irreducible for S_" + std::to_string(n));
  return label;
}

bool sn_labels_nested(const std::vector<SnLabel>& labels) {
  for (std::size_t a = 0; a < labels.size(); ++a)
    for (std::size_t b = a + 1; b < labels.size(); ++b) {
      std::set<int> x(labels[a].elements.begin(), labels[a].elements.end());
      std::set<int> y(labels[b].elements.begin(), labels[b].elements.end());
      if (!laminar(x, y)) return false;
    }
  return true;
}

std::string to_string(const SnLabel& label) { return join(label.elements); }

Subspace dn_decode(const DnLabel& label, int n) {
  const auto& e = label.elements;
  for (std::size_t k = 0; k < e.size(); ++k)
    if (e[k] == 0 || std::abs(e[k]) > n || (k && std::abs(e[k]) <= std::abs(e[k - 1])))
      throw InvalidInput("D_n label " + to_string(label) + " is malformed");
  std::vector<VectorQ> rows;
  if (label.strong) {
    if (e.size() < 3) throw InvalidInput("strong D_n label needs at least three indices");
    for (int i : e) {
      if (i < 0) throw InvalidInput("strong D_n labels carry no weights");
      rows.push_back(unit(i, n));
    }
  } else {
    if (e.size() < 2 || e[0] < 0) throw InvalidInput("weak D_n label " + to_string(label) + " is malformed");
    // x_i1 = eps x_ij is orthogonal to e_i1 - eps e_ij.
    for (std::size_t k = 1; k < e.size(); ++k) rows.push_back(dn_vector(e[0], std::abs(e[k]), e[k] > 0 ? -1 : 1, n));
  }
  return Subspace::span(static_cast<std::size_t>(n), rows);
}

DnLabel dn_encode(const Subspace& s, int n) {
  if (s.ambient_dim() != static_cast<std::size_t>(n)) throw InvalidInput("subspace is not in the D_n space");
  std::set<int> support;
  bool both_signs = false;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      bool minus = s.contains(dn_vector(i, j, -1, n));
      bool plus = s.contains(dn_vector(i, j, 1, n));
      if (minus || plus) {
        support.insert(i);
        support.insert(j);
      }
      both_signs = both_signs || (minus && plus);
    }
  DnLabel label;
  const auto fail = [&]() {
    return InvalidInput("subspace " + s.to_string() + " is not irreducible for D_" + std::to_string(n));
  };
  if (support.size() < 2) throw fail();
  if (both_signs) {
    label.strong = true;
    label.elements.assign(support.begin(), support.end());
    if (label.elements.size() < 3) throw fail();
  } else {
    const int first = *support.begin();
    label.elements.push_back(first);
    for (int j : support) {
      if (j == first) continue;
      if (s.contains(dn_vector(first, j, -1, n)))
        label.elements.push_back(j);
      else if (s.contains(dn_vector(first, j, 1, n)))
        label.elements.push_back(-j);
      else
        throw fail();
    }
  }
  if (!(dn_decode(label, n) == s)) throw fail();
  return label;
}

bool dn_labels_nested(const std::vector<DnLabel>& labels) {
  const std::size_t m = labels.size();
  auto support = [&](std::size_t k) {
    std::set<int> out;
    if (labels[k].strong) out.insert(0);
    for (int x : labels[k].elements) out.insert(std::abs(x));
    return out;
  };
  auto is_pair = [&](std::size_t a, std::size_t b) {
    const auto& x = labels[a];
    const auto& y = labels[b];
    return !x.strong && !y.strong && x.elements.size() == 2 && y.elements.size() == 2 &&
           x.elements[0] == y.elements[0] && x.elements[1] == -y.elements[1];
  };
  std::vector<bool> paired(m, false);
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      if (!is_pair(a, b)) continue;
      if (++pairs > 1) return false;
      paired[a] = paired[b] = true;
      const int i = labels[a].elements[0], j = std::abs(labels[a].elements[1]);
      for (std::size_t c = 0; c < m; ++c) {
        if (c == a || c == b) continue;
        auto s = support(c);
        bool disjoint = !s.count(i) && !s.count(j);
        bool above = s.count(0) && s.count(i) && s.count(j) && s.size() > 3;
        if (!disjoint && !above) return false;
      }
    }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      if (paired[a] || paired[b]) continue;
      auto sa = support(a), sb = support(b);
      if (!laminar(sa, sb)) return false;
      if (labels[a].strong || labels[b].strong) continue;
      const bool a_in_b = std::includes(sb.begin(), sb.end(), sa.begin(), sa.end());
      const bool b_in_a = std::includes(sa.begin(), sa.end(), sb.begin(), sb.end());
      if (!a_in_b && !b_in_a) continue;
      const auto& small = a_in_b ? labels[a] : labels[b];
      const auto& big = a_in_b ? labels[b] : labels[a];
      std::map<int, int> weight;
      for (int x : big.elements) weight[std::abs(x)] = x > 0 ? 1 : -1;
      bool same = true, flipped = true;
      for (int x : small.elements) {
        const int w = x > 0 ? 1 : -1;
        same = same && weight[std::abs(x)] == w;
        flipped = flipped && weight[std::abs(x)] == -w;
      }
      if (!same && !flipped) return false;
    }
  return true;
}

std::string to_string(const DnLabel& label) {
  if (!label.strong) return join(label.elements);
  std::vector<int> with_zero{0};
  with_zero.insert(with_zero.end(), label.elements.begin(), label.elements.end());
  return join(with_zero);
}

}  // namespace nestbraid
