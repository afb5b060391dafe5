#include "nestbraid/reflection_group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_set>

namespace nestbraid {

namespace {

struct LexLess {
  bool operator()(const VectorQ& a, const VectorQ& b) const {
    for (std::size_t i = 0; i < a.size(); ++i) {
      int c = cmp(a[i], b[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }
};

struct PermHash {
  std::size_t operator()(const RootPermutation& p) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : p) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

VectorQ unit(std::size_t n, std::size_t i) {
  VectorQ v(n, Rational(0));
  v[i] = 1;
  return v;
}

VectorQ sub(const VectorQ& a, const VectorQ& b) {
  VectorQ out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

VectorQ add(const VectorQ& a, const VectorQ& b) {
  VectorQ out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

VectorQ neg(const VectorQ& a) {
  VectorQ out = a;
  for (auto& x : out) x = -x;
  return out;
}

MatrixQ reflection_matrix(const VectorQ& alpha, const MatrixQ& gram) {
  const std::size_t n = alpha.size();
  VectorQ galpha = gram * alpha;
  Rational norm = dot(alpha, galpha);
  MatrixQ m = MatrixQ::identity(n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) m(p, q) -= 2 * alpha[p] * galpha[q] / norm;
  return m;
}

// Order of a permutation.
int perm_order(const RootPermutation& p) {
  std::vector<bool> seen(p.size(), false);
  long long order = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    long long len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return static_cast<int>(order);
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

CoxeterType parse_coxeter_type(const std::string& label) {
  std::string u;
  for (char c : label) u.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (u == "A") return CoxeterType::A;
  if (u == "B") return CoxeterType::B;
  if (u == "D") return CoxeterType::D;
  if (u == "G2" || u == "G") return CoxeterType::G2;
  throw InvalidInput("unsupported Coxeter type '" + label + "' (supported: A, B, D, G2)");
}

std::string type_name(CoxeterType type) {
  switch (type) {
    case CoxeterType::A: return "A";
    case CoxeterType::B: return "B";
    case CoxeterType::D: return "D";
    case CoxeterType::G2: return "G2";
  }
  return "?";
}

std::string ReflectionGroupData::label() const {
  if (type == CoxeterType::G2) return "G2";
  return type_name(type) + std::to_string(rank);
}

int ReflectionGroupData::root_index(const VectorQ& v) const {
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (roots[i] == v) return static_cast<int>(i);
  return -1;
}

VectorQ ReflectionGroupData::simple_coordinates(const VectorQ& v) const {
  MatrixQ aug(v.size(), simple_roots.size() + 1);
  for (std::size_t j = 0; j < simple_roots.size(); ++j)
    for (std::size_t i = 0; i < v.size(); ++i) aug(i, j) = simple_roots[j][i];
  for (std::size_t i = 0; i < v.size(); ++i) aug(i, simple_roots.size()) = v[i];
  auto r = rref(aug);
  if (r.rank > simple_roots.size() ||
      (!r.pivots.empty() && r.pivots.back() == simple_roots.size()))
    throw InvalidInput("vector is not in the span of the simple roots");
  VectorQ c(simple_roots.size(), Rational(0));
  for (std::size_t i = 0; i < r.rank; ++i) c[r.pivots[i]] = r.reduced(i, simple_roots.size());
  return c;
}

ReflectionGroupData group_from_simple_roots(const std::vector<VectorQ>& simple_roots,
                                            const MatrixQ& gram) {
  ReflectionGroupData w;
  w.rank = static_cast<int>(simple_roots.size());
  w.gram = gram;
  w.simple_roots = simple_roots;
  const std::size_t n = gram.rows();
  for (const auto& a : simple_roots) w.generators.push_back(reflection_matrix(a, gram));

  // Root system = orbit of the simple roots.
  std::set<VectorQ, LexLess> seen(simple_roots.begin(), simple_roots.end());
  std::deque<VectorQ> queue(simple_roots.begin(), simple_roots.end());
  while (!queue.empty()) {
    VectorQ v = queue.front();
    queue.pop_front();
    for (const auto& g : w.generators) {
      VectorQ img = g * v;
      if (seen.insert(img).second) queue.push_back(img);
    }
  }
  struct Pos {
    Rational height;
    VectorQ v;
  };
  std::vector<Pos> positive;
  for (const auto& v : seen) {
    VectorQ c = w.simple_coordinates(v);
    bool nonneg = std::all_of(c.begin(), c.end(), [](const Rational& x) { return sgn(x) >= 0; });
    bool nonpos = std::all_of(c.begin(), c.end(), [](const Rational& x) { return sgn(x) <= 0; });
    if (!nonneg && !nonpos) throw ConsistencyError("root with mixed-sign simple coordinates");
    if (nonneg) positive.push_back({std::accumulate(c.begin(), c.end(), Rational(0)), v});
  }
  std::sort(positive.begin(), positive.end(), [](const Pos& a, const Pos& b) {
    if (a.height != b.height) return a.height < b.height;
    return LexLess{}(a.v, b.v);
  });
  w.positive_count = positive.size();
  for (const auto& p : positive) w.roots.push_back(p.v);
  for (const auto& p : positive) w.roots.push_back(neg(p.v));
  if (w.roots.size() != seen.size()) throw ConsistencyError("root system is not closed under negation");
  for (const auto& a : simple_roots) w.simple_root_index.push_back(w.root_index(a));

  for (const auto& g : w.generators) {
    RootPermutation p(w.roots.size());
    for (std::size_t i = 0; i < w.roots.size(); ++i) p[i] = w.root_index(g * w.roots[i]);
    w.generator_perms.push_back(std::move(p));
  }
  w.coxeter_matrix.assign(w.rank, std::vector<int>(w.rank, 1));
  for (int i = 0; i < w.rank; ++i)
    for (int j = 0; j < w.rank; ++j)
      if (i != j) w.coxeter_matrix[i][j] = perm_order(compose(w.generator_perms[i], w.generator_perms[j]));

  std::vector<VectorQ> normals = w.positive_roots();
  w.arrangement = Arrangement::from_normals(n, normals, gram);
  for (const auto& r : normals) w.hyperplane_of_root.push_back(w.arrangement.index_of(r));

  if (static_cast<std::size_t>(w.rank) == n) {
    MatrixQ s(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) s(i, j) = simple_roots[j][i];
    w.simple_basis_inverse = inverse(s);
  }
  w.generator_names.clear();
  for (int i = 1; i <= w.rank; ++i) w.generator_names.push_back("s" + std::to_string(i));
  return w;
}

ReflectionGroupData build_group(CoxeterType type, int rank) {
  std::vector<VectorQ> simple;
  MatrixQ gram;
  std::vector<int> degrees;
  std::uint64_t order = 0;
  switch (type) {
    case CoxeterType::A: {
      if (rank < 1 || rank > 7) throw InvalidInput("type A supports rank 1..7");
      const std::size_t n = static_cast<std::size_t>(rank);
      gram = MatrixQ(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) gram(i, j) = i == j ? 2 : 1;
      // e_i - e_(i+1) in the basis e_k - e_(n+1).
      for (std::size_t i = 0; i + 1 < n; ++i) simple.push_back(sub(unit(n, i), unit(n, i + 1)));
      simple.push_back(unit(n, n - 1));
      for (int d = 2; d <= rank + 1; ++d) degrees.push_back(d);
      order = factorial(rank + 1);
      break;
    }
    case CoxeterType::B: {
      if (rank < 2 || rank > 6) throw InvalidInput("type B supports rank 2..6");
      const std::size_t n = static_cast<std::size_t>(rank);
      gram = MatrixQ::identity(n);
      for (std::size_t i = 0; i + 1 < n; ++i) simple.push_back(sub(unit(n, i), unit(n, i + 1)));
      simple.push_back(unit(n, n - 1));
      for (int d = 2; d <= 2 * rank; d += 2) degrees.push_back(d);
      order = (std::uint64_t{1} << rank) * factorial(rank);
      break;
    }
    case CoxeterType::D: {
      if (rank < 4 || rank > 6) throw InvalidInput("type D supports rank 4..6");
      const std::size_t n = static_cast<std::size_t>(rank);
      gram = MatrixQ::identity(n);
      simple.push_back(sub(unit(n, 1), unit(n, 0)));  // s1
      simple.push_back(add(unit(n, 0), unit(n, 1)));  // s1'
      for (std::size_t k = 1; k + 1 < n; ++k) simple.push_back(sub(unit(n, k + 1), unit(n, k)));
      for (int d = 2; d <= 2 * rank - 2; d += 2) degrees.push_back(d);
      degrees.push_back(rank);
      std::sort(degrees.begin(), degrees.end());
      order = (std::uint64_t{1} << (rank - 1)) * factorial(rank);
      break;
    }
    case CoxeterType::G2: {
      if (rank != 2) throw InvalidInput("type G2 has rank 2");
      gram = MatrixQ(2, 2);
      gram(0, 0) = 2;
      gram(0, 1) = 1;
      gram(1, 0) = 1;
      gram(1, 1) = 2;
      simple.push_back({Rational(1), Rational(-1)});  // e1 - e2, short
      simple.push_back({Rational(-2), Rational(1)});  // -2e1 + e2 + e3, long
      degrees = {2, 6};
      order = 12;
      break;
    }
  }
  ReflectionGroupData w = group_from_simple_roots(simple, gram);
  w.type = type;
  w.degrees = degrees;
  w.group_order = order;
  if (type == CoxeterType::D) {
    w.generator_names = {"s1", "s1'"};
    for (int k = 2; k < rank; ++k) w.generator_names.push_back("s" + std::to_string(k));
  }
  std::uint64_t product = 1;
  for (int d : degrees) product *= static_cast<std::uint64_t>(d);
  if (product != order) throw ConsistencyError("product of degrees differs from group order");
  if (element_order(coxeter_element(w)) != degrees.back())
    throw ConsistencyError("largest degree differs from the Coxeter number");
  if (w.positive_count != w.arrangement.size())
    throw ConsistencyError("positive roots and hyperplanes are not in bijection");
  return w;
}

std::pair<Arrangement, ReflectionGroupData> build_reflection_arrangement(CoxeterType type, int rank) {
  ReflectionGroupData w = build_group(type, rank);
  Arrangement a = w.arrangement;
  return {std::move(a), std::move(w)};
}

RootPermutation compose(const RootPermutation& a, const RootPermutation& b) {
  RootPermutation out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i])];
  return out;
}

GroupElement identity_element(const ReflectionGroupData& w) {
  RootPermutation p(w.roots.size());
  std::iota(p.begin(), p.end(), 0);
  return {MatrixQ::identity(w.gram.rows()), p};
}

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  return {a.matrix * b.matrix, compose(a.perm, b.perm)};
}

GroupElement inverse(const ReflectionGroupData& w, const GroupElement& g) {
  (void)w;
  RootPermutation inv(g.perm.size());
  for (std::size_t i = 0; i < g.perm.size(); ++i) inv[static_cast<std::size_t>(g.perm[i])] = static_cast<int>(i);
  return {nestbraid::inverse(g.matrix), inv};
}

GroupElement element_from_perm(const ReflectionGroupData& w, const RootPermutation& perm) {
  const std::size_t n = w.gram.rows();
  if (w.simple_basis_inverse.rows() != n) throw InvalidInput("group is not essential");
  MatrixQ images(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const VectorQ& r = w.roots[static_cast<std::size_t>(perm[static_cast<std::size_t>(w.simple_root_index[j])])];
    for (std::size_t i = 0; i < n; ++i) images(i, j) = r[i];
  }
  return {images * w.simple_basis_inverse, perm};
}

GroupElement generator_element(const ReflectionGroupData& w, int i) {
  return {w.generators.at(static_cast<std::size_t>(i)), w.generator_perms.at(static_cast<std::size_t>(i))};
}

int element_order(const GroupElement& g) { return perm_order(g.perm); }

GroupElement coxeter_element(const ReflectionGroupData& w) {
  GroupElement c = identity_element(w);
  for (int i = 0; i < w.rank; ++i) c = multiply(c, generator_element(w, i));
  return c;
}

std::vector<GroupElement> enumerate_group(const ReflectionGroupData& w, const Caps& caps) {
  if (w.group_order > caps.max_group_order) throw CapExceeded("max_group_order", caps.max_group_order);
  RootPermutation id(w.roots.size());
  std::iota(id.begin(), id.end(), 0);
  std::unordered_set<RootPermutation, PermHash> seen{id};
  std::vector<RootPermutation> order{id};
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const auto& g : w.generator_perms) {
      RootPermutation next = compose(order[head], g);
      if (seen.insert(next).second) {
        if (order.size() >= caps.max_group_order) throw CapExceeded("max_group_order", caps.max_group_order);
        order.push_back(std::move(next));
      }
    }
  }
  std::vector<GroupElement> out;
  out.reserve(order.size());
  for (const auto& p : order) out.push_back(element_from_perm(w, p));
  return out;
}

std::vector<GroupElement> stabilizer_of_subspace(const ReflectionGroupData& w, const Subspace& s,
                                                 StabilizerMode mode, const Caps& caps) {
  if (s.ambient_dim() != w.gram.rows()) throw InvalidInput("subspace lives in a different ambient space");
  auto basis = s.basis_vectors();
  std::vector<GroupElement> out;
  for (auto& g : enumerate_group(w, caps)) {
    bool keep = true;
    if (mode == StabilizerMode::Pointwise) {
      for (const auto& v : basis)
        if (g.matrix * v != v) {
          keep = false;
          break;
        }
    } else {
      keep = s.image(g.matrix) == s;
    }
    if (keep) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Subspace> orbit_on_subspaces(const ReflectionGroupData& w, const Subspace& s, const Caps& caps) {
  std::set<Subspace> images;
  for (const auto& g : enumerate_group(w, caps)) images.insert(s.image(g.matrix));
  return {images.begin(), images.end()};
}

std::vector<GroupElement> brute_force_center(const ReflectionGroupData& w, const Caps& caps) {
  std::vector<GroupElement> out;
  for (auto& g : enumerate_group(w, caps)) {
    bool central = true;
    for (const auto& s : w.generator_perms)
      if (compose(g.perm, s) != compose(s, g.perm)) {
        central = false;
        break;
      }
    if (central) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace nestbraid
