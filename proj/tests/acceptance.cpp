// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every criterion is checked against an oracle that does not go
// through the code path under test.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nestbraid/building.hpp"
#include "nestbraid/codec.hpp"
#include "nestbraid/garside.hpp"
#include "nestbraid/wonderful.hpp"

using namespace nestbraid;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects failures; the first few are printed.
struct Result {
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

const std::vector<std::pair<CoxeterType, int>> kRankAtMostFour = {
    {CoxeterType::A, 1}, {CoxeterType::A, 2}, {CoxeterType::A, 3}, {CoxeterType::A, 4}, {CoxeterType::B, 2},
    {CoxeterType::B, 3}, {CoxeterType::B, 4}, {CoxeterType::D, 4}, {CoxeterType::G2, 2}};

// ---- Artin's faithful action of Br_n on the free group F_n ----

using FreeWord = std::vector<int>;

void push_reduced(FreeWord& w, int x) {
  if (!w.empty() && w.back() == -x)
    w.pop_back();
  else
    w.push_back(x);
}

FreeWord substitute(int letter, const FreeWord& w) {
  const int i = std::abs(letter);
  FreeWord out;
  for (int x : w) {
    const int g = std::abs(x);
    FreeWord image;
    if (g != i && g != i + 1)
      image = {g};
    else if (letter > 0)
      image = g == i ? FreeWord{i, i + 1, -i} : FreeWord{i};
    else
      image = g == i ? FreeWord{i + 1} : FreeWord{-(i + 1), i, i + 1};
    if (x < 0) {
      std::reverse(image.begin(), image.end());
      for (auto& y : image) y = -y;
    }
    for (int y : image) push_reduced(out, y);
  }
  return out;
}

std::vector<FreeWord> artin_action(const std::vector<int>& letters, int strands) {
  std::vector<FreeWord> images;
  for (int j = 1; j <= strands; ++j) {
    FreeWord w{j};
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) w = substitute(*it, w);
    images.push_back(w);
  }
  return images;
}

std::vector<int> repeat(const std::vector<int>& letters, int times) {
  std::vector<int> out;
  for (int k = 0; k < times; ++k) out.insert(out.end(), letters.begin(), letters.end());
  return out;
}

// Positive half-twist sigma_1 (sigma_2 sigma_1) ... written directly.
std::vector<int> half_twist(int strands) {
  std::vector<int> out;
  for (int k = 1; k < strands; ++k)
    for (int j = k; j >= 1; --j) out.push_back(j);
  return out;
}

std::vector<int> iota_word(int n) {
  std::vector<int> out(static_cast<std::size_t>(n));
  std::iota(out.begin(), out.end(), 1);
  return out;
}

// ---- W through root permutations only ----

std::set<RootPermutation> closure_of_generators(const ReflectionGroupData& w) {
  std::set<RootPermutation> seen;
  RootPermutation id(w.roots.size());
  std::iota(id.begin(), id.end(), 0);
  std::vector<RootPermutation> frontier{id};
  seen.insert(id);
  while (!frontier.empty()) {
    std::vector<RootPermutation> next;
    for (const auto& p : frontier)
      for (const auto& s : w.generator_perms) {
        RootPermutation q(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) q[i] = s[static_cast<std::size_t>(p[i])];
        if (seen.insert(q).second) next.push_back(q);
      }
    frontier = std::move(next);
  }
  return seen;
}

std::size_t center_size(const ReflectionGroupData& w, const std::set<RootPermutation>& group) {
  std::size_t count = 0;
  for (const auto& p : group) {
    bool central = true;
    for (const auto& s : w.generator_perms)
      for (std::size_t i = 0; i < p.size() && central; ++i)
        central = p[static_cast<std::size_t>(s[i])] == s[static_cast<std::size_t>(p[i])];
    count += central;
  }
  return count;
}

// ---- nested sets from plain subspace sums ----

bool nested_oracle(const std::vector<Subspace>& s, const std::set<Subspace>& members) {
  const std::size_t n = s.size();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (std::popcount(mask) < 2) continue;
    std::vector<Subspace> part;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) part.push_back(s[i]);
    bool antichain = true;
    for (std::size_t a = 0; a < part.size() && antichain; ++a)
      for (std::size_t b = 0; b < part.size() && antichain; ++b)
        if (a != b && part[a].contains(part[b])) antichain = false;
    if (!antichain) continue;
    Subspace sum = part[0];
    for (std::size_t k = 1; k < part.size(); ++k) sum = sum + part[k];
    if (members.count(sum)) return false;
  }
  return true;
}

std::set<std::vector<std::size_t>> nested_family_oracle(const BuildingSet& f) {
  const auto elements = f.elements();
  const std::set<Subspace> members(elements.begin(), elements.end());
  std::set<std::vector<std::size_t>> family;
  std::vector<std::size_t> current;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    family.insert(current);
    for (std::size_t i = start; i < elements.size(); ++i) {
      current.push_back(i);
      std::vector<Subspace> s;
      for (auto k : current) s.push_back(elements[k]);
      if (nested_oracle(s, members)) rec(i + 1);
      current.pop_back();
    }
  };
  rec(0);
  return family;
}

std::set<std::vector<std::size_t>> maximal_oracle(const BuildingSet& f) {
  const auto family = nested_family_oracle(f);
  std::set<std::vector<std::size_t>> out;
  for (const auto& s : family) {
    bool maximal = true;
    for (std::size_t j = 0; j < f.size() && maximal; ++j) {
      if (std::binary_search(s.begin(), s.end(), j)) continue;
      auto t = s;
      t.insert(std::upper_bound(t.begin(), t.end(), j), j);
      if (family.count(t)) maximal = false;
    }
    if (maximal) out.insert(s);
  }
  return out;
}

long double_factorial(int k) {
  long out = 1;
  for (int i = k; i > 1; i -= 2) out *= i;
  return out;
}

// ---- regularity through cyclotomic ranks ----

bool has_regular_eigenvector(const GroupElement& g, const ReflectionGroupData& w, int m, int j) {
  const std::size_t n = g.matrix.rows();
  const Cyclotomic z = Cyclotomic::root_of_unity(m, j);
  MatrixCyc shifted = to_cyclotomic(g.matrix);
  for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= z;
  const std::size_t eigen_dim = n - rank(shifted);
  if (eigen_dim == 0) return false;
  for (const auto& h : w.arrangement.hyperplanes()) {
    MatrixCyc stacked(n + 1, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) stacked(r, c) = shifted(r, c);
    const VectorQ row = w.gram * h.normal;
    for (std::size_t c = 0; c < n; ++c) stacked(n, c) = Cyclotomic(row[c]);
    if (n - rank(stacked) == eigen_dim) return false;
  }
  return true;
}

// ---- noncrossing partitions ----

std::size_t noncrossing_partitions(int n) {
  std::size_t count = 0;
  std::vector<int> block(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int blocks) {
    if (i == n) {
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          for (int c = b + 1; c < n; ++c)
            for (int d = c + 1; d < n; ++d)
              if (block[a] == block[c] && block[b] == block[d] && block[a] != block[b]) return;
      ++count;
      return;
    }
    for (int k = 0; k <= blocks; ++k) {
      block[static_cast<std::size_t>(i)] = k;
      rec(i + 1, std::max(blocks, k + 1));
    }
  };
  rec(0, 0);
  return count;
}

VectorCyc lift(const VectorQ& x) {
  VectorCyc out;
  for (const auto& c : x) out.emplace_back(c);
  return out;
}

// g b = c b for one c and every basis vector b.
bool scalar_on(const MatrixQ& g, const std::vector<VectorQ>& basis) {
  std::optional<Rational> c;
  for (const auto& b : basis) {
    const VectorQ image = g * b;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (b[i] == 0) {
        if (image[i] != 0) return false;
        continue;
      }
      const Rational ratio = image[i] / b[i];
      if (c && *c != ratio) return false;
      c = ratio;
    }
  }
  return true;
}

bool commutes(const Garside& g, const BraidWord& a, const BraidWord& b) {
  return g.equal(concat(a, b), concat(b, a));
}

// ---- criteria ----

void garside_identity(Result& r) {
  for (int n = 2; n <= 6; ++n) {
    const auto start = Clock::now();
    const Garside g(build_group(CoxeterType::A, n - 1));
    const BraidWord delta_sq = power(g.delta(), 2);
    const BraidWord dual_n = power(g.word(iota_word(n - 1)), n);
    const bool nf_equal = g.normal_form(delta_sq) == g.normal_form(dual_n);
    const bool artin_equal = artin_action(delta_sq.letters, n) == artin_action(dual_n.letters, n) &&
                             artin_action(repeat(half_twist(n), 2), n) == artin_action(dual_n.letters, n);
    const double t = seconds_since(start);
    r.expect(nf_equal, "Br_" + std::to_string(n) + " normal forms differ");
    r.expect(artin_equal, "Br_" + std::to_string(n) + " free-group action differs");
    r.expect(t < 1.0, "Br_" + std::to_string(n) + " took " + std::to_string(t) + " s");
    std::ostringstream note;
    note.precision(3);
    note << "n=" << n << " " << std::fixed << t << "s";
    r.notes.push_back(note.str());
  }
}

void dual_power(Result& r) {
  const auto start = Clock::now();
  for (auto [type, rank] : std::vector<std::pair<CoxeterType, int>>{{CoxeterType::A, 2},
                                                                   {CoxeterType::A, 3},
                                                                   {CoxeterType::A, 4},
                                                                   {CoxeterType::A, 5},
                                                                   {CoxeterType::D, 4},
                                                                   {CoxeterType::D, 5},
                                                                   {CoxeterType::G2, 2}}) {
    const Garside g(build_group(type, rank));
    const int h = *std::max_element(g.group().degrees.begin(), g.group().degrees.end());
    const BraidWord lhs = power(g.dual_delta(), h);
    const BraidWord rhs = power(g.delta(), 2);
    r.expect(g.normal_form(lhs) == g.normal_form(rhs), g.group().label() + ": (Delta*)^h != Delta^2");
    if (type == CoxeterType::A)
      r.expect(artin_action(lhs.letters, rank + 1) == artin_action(rhs.letters, rank + 1),
               g.group().label() + ": free-group action differs");
    r.notes.push_back(g.group().label() + " h=" + std::to_string(h));
  }
  const double t = seconds_since(start);
  r.expect(t < 5.0, "total " + std::to_string(t) + " s");
}

void center_parity(Result& r) {
  for (int n : {4, 5, 6}) {
    const Garside g(build_group(CoxeterType::D, n));
    const BraidWord delta = g.delta();
    const BraidWord delta_sq = power(delta, 2);
    const bool even = n % 2 == 0;
    r.expect(g.is_central(delta) == even, "D" + std::to_string(n) + ": is_central(Delta)");
    r.expect(g.is_central(delta_sq), "D" + std::to_string(n) + ": is_central(Delta^2)");
    // Delta is central exactly when w0 = -1, which is visible on matrices.
    const MatrixQ w0 = g.image(delta).matrix;
    bool minus_identity = true;
    for (std::size_t i = 0; i < w0.rows(); ++i)
      for (std::size_t j = 0; j < w0.cols(); ++j)
        minus_identity = minus_identity && w0(i, j) == Rational(i == j ? -1 : 0);
    r.expect(minus_identity == even, "D" + std::to_string(n) + ": w0 = -1 parity");
    bool commute_all = true;
    for (int k = 1; k <= g.rank(); ++k) commute_all = commute_all && commutes(g, delta, g.generator(k));
    r.expect(commute_all == even, "D" + std::to_string(n) + ": Delta commutes with generators");
  }
  r.notes.push_back("D4, D6 central; D5 not");
}

void exact_sequence(Result& r) {
  for (auto [type, rank] : std::vector<std::pair<CoxeterType, int>>{
           {CoxeterType::A, 2}, {CoxeterType::A, 3}, {CoxeterType::A, 4}, {CoxeterType::A, 5}, {CoxeterType::B, 2},
           {CoxeterType::B, 3}, {CoxeterType::B, 4}, {CoxeterType::D, 4}, {CoxeterType::D, 5}, {CoxeterType::G2, 2}}) {
    const Garside g(build_group(type, rank));
    const auto group = closure_of_generators(g.group());
    const std::size_t z = center_size(g.group(), group);
    const auto report = center_report(g);
    r.expect(static_cast<std::size_t>(report.z_of_w) == z, g.group().label() + ": |Z(W)|");
    r.expect(report.beta_central && report.pi_central, g.group().label() + ": generators not central");
    r.expect(g.equal(power(report.beta, static_cast<long>(z)), report.pi), g.group().label() + ": beta^|Z| != pi");
    r.expect(g.equal(report.pi, power(g.delta(), 2)), g.group().label() + ": pi != Delta^2");
    r.notes.push_back(g.group().label() + " |Z|=" + std::to_string(z));
  }
}

void degrees(Result& r) {
  for (auto [type, rank] : kRankAtMostFour) {
    const auto w = build_group(type, rank);
    const auto group = closure_of_generators(w);
    std::size_t product = 1;
    int g = 0;
    for (int d : w.degrees) {
      product *= static_cast<std::size_t>(d);
      g = std::gcd(g, d);
    }
    r.expect(product == group.size(), w.label() + ": prod d_i = " + std::to_string(product) + ", |W| = " +
                                          std::to_string(group.size()));
    const std::size_t z = center_size(w, group);
    r.expect(static_cast<std::size_t>(g) == z, w.label() + ": gcd d_i = " + std::to_string(g) + ", |Z| = " +
                                                   std::to_string(z));
  }
  r.notes.push_back(std::to_string(kRankAtMostFour.size()) + " groups");
}

void building_counts(Result& r) {
  for (int n = 3; n <= 6; ++n) {
    const auto w = build_group(CoxeterType::A, n - 1);
    const auto f = minimal_building_set(w.arrangement, nullptr);
    const std::size_t expected = (std::size_t{1} << n) - static_cast<std::size_t>(n) - 1;
    r.expect(f.size() == expected, "|F(S_" + std::to_string(n) + ")| = " + std::to_string(f.size()));
    // Every subset of size >= 2 decodes to a distinct member.
    std::set<Subspace> decoded;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) < 2) continue;
      SnLabel label;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) label.elements.push_back(i + 1);
      const Subspace s = sn_decode(label, n);
      r.expect(f.find(s).has_value(), "S_" + std::to_string(n) + ": " + to_string(label) + " not a member");
      decoded.insert(s);
    }
    r.expect(decoded.size() == expected, "S_" + std::to_string(n) + ": codec not injective");
  }
  const auto g2 = build_group(CoxeterType::G2, 2);
  r.expect(minimal_building_set(g2.arrangement, &g2).size() == 7, "|F(G2)| != 7");
  const auto d4 = build_group(CoxeterType::D, 4);
  const auto root_route = minimal_building_set(d4.arrangement, &d4);
  const auto definition_route = minimal_building_set(d4.arrangement, nullptr);
  r.expect(root_route.elements() == definition_route.elements(), "D4 routes differ");
  r.notes.push_back("S3..S6, G2=7, D4 |F|=" + std::to_string(root_route.size()));
}

void nested_structure(Result& r) {
  for (auto [type, rank] : kRankAtMostFour) {
    const auto w = build_group(type, rank);
    const auto f = minimal_building_set(w.arrangement, &w);
    const auto oracle = maximal_oracle(f);
    const auto library = maximal_nested_sets(f);
    const std::set<std::vector<std::size_t>> library_set(library.begin(), library.end());
    r.expect(library_set == oracle, w.label() + ": maximal nested sets differ from the oracle");
    for (const auto& s : oracle)
      r.expect(s.size() == static_cast<std::size_t>(rank), w.label() + ": maximal nested set of wrong size");
    if (type == CoxeterType::A && rank + 1 <= 5) {
      const long expected = double_factorial(2 * (rank + 1) - 3);
      r.expect(static_cast<long>(oracle.size()) == expected,
               w.label() + ": " + std::to_string(oracle.size()) + " maximal, expected " + std::to_string(expected));
    }
    if (type == CoxeterType::G2) {
      r.expect(oracle.size() == 6, "G2: " + std::to_string(oracle.size()) + " maximal nested sets");
      for (const auto& s : oracle) {
        bool has_v = false, has_root_line = false;
        for (auto i : s) {
          const Subspace& a = f.element(i);
          if (a.dim() == 2) has_v = true;
          if (a.dim() == 1)
            for (const auto& root : w.positive_roots()) has_root_line = has_root_line || a.contains(root);
        }
        r.expect(has_v && has_root_line, "G2: maximal nested set not of the form {V, root line}");
      }
    }
    r.notes.push_back(w.label() + ":" + std::to_string(oracle.size()));
  }
}

template <typename Label, typename Encode, typename Nested>
void codec_agreement(Result& r, const std::string& name, const BuildingSet& f, Encode encode, Nested nested) {
  const auto elements = f.elements();
  const std::set<Subspace> members(elements.begin(), elements.end());
  std::vector<Label> labels;
  for (const auto& e : elements) labels.push_back(encode(e));
  std::size_t checked = 0, disagreements = 0;
  std::vector<std::size_t> current;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (!current.empty()) {
      std::vector<Subspace> s;
      std::vector<Label> l;
      for (auto k : current) {
        s.push_back(elements[k]);
        l.push_back(labels[k]);
      }
      ++checked;
      if (nested(l) != nested_oracle(s, members)) ++disagreements;
    }
    if (current.size() == 4) return;
    for (std::size_t i = start; i < elements.size(); ++i) {
      current.push_back(i);
      rec(i + 1);
      current.pop_back();
    }
  };
  rec(0);
  r.expect(disagreements == 0, name + ": " + std::to_string(disagreements) + " of " + std::to_string(checked) +
                                   " subsets disagree");
  r.notes.push_back(name + " " + std::to_string(checked) + " subsets");
}

void codec_equivalence(Result& r) {
  for (int n : {4, 5}) {
    const auto w = build_group(CoxeterType::A, n - 1);
    const auto f = minimal_building_set(w.arrangement, &w);
    codec_agreement<SnLabel>(
        r, "S" + std::to_string(n), f, [n](const Subspace& s) { return sn_encode(s, n); },
        [](const std::vector<SnLabel>& l) { return sn_labels_nested(l); });
  }
  const auto d4 = build_group(CoxeterType::D, 4);
  const auto f = minimal_building_set(d4.arrangement, &d4);
  codec_agreement<DnLabel>(
      r, "D4", f, [](const Subspace& s) { return dn_encode(s, 4); },
      [](const std::vector<DnLabel>& l) { return dn_labels_nested(l); });
}

void springer_suite(Result& r) {
  for (auto [type, rank] : std::vector<std::pair<CoxeterType, int>>{
           {CoxeterType::A, 3}, {CoxeterType::D, 4}, {CoxeterType::G2, 2}}) {
    const auto w = build_group(type, rank);
    const auto f = minimal_building_set(w.arrangement, &w);
    const auto group = enumerate_group(w);
    for (std::size_t i = 0; i < f.size(); ++i) {
      const Subspace a = f.element(i);
      const VectorQ l = find_springer_generic_line(a, f, w);
      const VectorQ x = generic_point_of_orthogonal(a, f);
      const auto p = normalize_point_encoding(x, {lift(l)}, f);
      const auto stab = stabilizer_of_point(p, f, w);
      // W_A, its centre and its scalar subgroup straight from matrices.
      const auto perp = a.orthogonal(w.gram).basis_vectors();
      std::vector<GroupElement> wa;
      for (const auto& g : group)
        if (std::all_of(perp.begin(), perp.end(), [&](const VectorQ& b) { return g.matrix * b == b; }))
          wa.push_back(g);
      std::size_t center = 0;
      for (const auto& g : wa)
        center += std::all_of(wa.begin(), wa.end(),
                              [&](const GroupElement& h) { return g.matrix * h.matrix == h.matrix * g.matrix; });
      std::vector<GroupElement> scalar;
      const auto basis = a.basis_vectors();
      for (const auto& g : wa)
        if (scalar_on(g.matrix, basis)) scalar.push_back(g);
      const std::string where = w.label() + " member " + a.to_string();
      r.expect(p.flats.size() == 1 && f.element(p.flats[0]) == a, where + ": chain is not (A)");
      r.expect(scalar.size() == center, where + ": scalar subgroup order != |Z(W_A)|");
      r.expect(stab.order == scalar.size(), where + ": stabilizer order " + std::to_string(stab.order));
      bool same = stab.elements.size() == scalar.size();
      for (const auto& g : stab.elements) same = same && std::find(scalar.begin(), scalar.end(), g) != scalar.end();
      r.expect(same, where + ": stabilizer is not the scalar subgroup");
    }
    r.notes.push_back(w.label() + " " + std::to_string(f.size()) + " members");
  }
  for (auto [type, rank] : std::vector<std::pair<CoxeterType, int>>{
           {CoxeterType::A, 2}, {CoxeterType::A, 3}, {CoxeterType::B, 3}, {CoxeterType::G2, 2}}) {
    const auto w = build_group(type, rank);
    const auto c = coxeter_element(w);
    const int h = *std::max_element(w.degrees.begin(), w.degrees.end());
    r.expect(has_regular_eigenvector(c, w, h, 1), w.label() + ": Coxeter element has no regular eigenvector");
    r.expect(is_regular_element(c, w).regular, w.label() + ": is_regular_element(c) false");
  }
  r.notes.push_back("c regular in A2 A3 B3 G2");
}

void inertia_suite(Result& r) {
  for (auto [type, rank] : std::vector<std::pair<CoxeterType, int>>{
           {CoxeterType::A, 4}, {CoxeterType::D, 4}, {CoxeterType::G2, 2}}) {
    const Garside g(build_group(type, rank));
    std::size_t subsets = 0;
    for (int mask = 1; mask < (1 << rank); ++mask) {
      std::vector<int> subset;
      for (int i = 0; i < rank; ++i)
        if (mask >> i & 1) subset.push_back(i + 1);
      const auto rep = inertia_element(g, subset);
      const std::string where = g.group().label() + " J=" + g.format(g.word(subset));
      for (int j : subset) {
        r.expect(commutes(g, rep.z, g.generator(j)), where + ": z_A does not commute with s" + std::to_string(j));
        if (type == CoxeterType::A)
          r.expect(artin_action(concat(rep.z, g.generator(j)).letters, rank + 1) ==
                       artin_action(concat(g.generator(j), rep.z).letters, rank + 1),
                   where + ": free-group action of z_A s_j and s_j z_A differ");
      }
      // Split along the Coxeter graph: no edge between the two parts.
      const auto& m = g.group().coxeter_matrix;
      for (std::size_t cut = 1; cut < subset.size(); ++cut) {
        std::vector<int> first(subset.begin(), subset.begin() + static_cast<std::ptrdiff_t>(cut));
        std::vector<int> second(subset.begin() + static_cast<std::ptrdiff_t>(cut), subset.end());
        bool disjoint = true;
        for (int a : first)
          for (int b : second)
            disjoint = disjoint && m[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] == 2;
        if (!disjoint) continue;
        const auto z1 = inertia_element(g, first).z;
        const auto z2 = inertia_element(g, second).z;
        r.expect(g.equal(rep.z, concat(z1, z2)), where + ": z_A != z_A1 z_A2");
        r.expect(commutes(g, z1, z2), where + ": factors do not commute");
      }
      ++subsets;
    }
    const auto whole = inertia_element(g, iota_word(rank));
    r.expect(g.equal(whole.z, power(g.delta(), 2)), g.group().label() + ": z_V != Delta^2");
    if (type == CoxeterType::A)
      r.expect(artin_action(whole.z.letters, rank + 1) == artin_action(repeat(half_twist(rank + 1), 2), rank + 1),
               "A4: free-group action of z_V differs from the full twist");
    r.notes.push_back(g.group().label() + " " + std::to_string(subsets) + " subsets");
  }
}

void normal_form_fuzz(Result& r) {
  std::mt19937_64 rng(20240611);
  for (auto [type, rank] : std::vector<std::pair<CoxeterType, int>>{
           {CoxeterType::A, 3}, {CoxeterType::D, 4}, {CoxeterType::G2, 2}}) {
    const Garside g(build_group(type, rank));
    std::vector<std::vector<int>> relators;
    const auto& m = g.group().coxeter_matrix;
    for (int i = 0; i < rank; ++i) {
      relators.push_back({i + 1, -(i + 1)});
      relators.push_back({-(i + 1), i + 1});
      for (int j = i + 1; j < rank; ++j) {
        std::vector<int> rel;
        const int mij = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        for (int k = 0; k < mij; ++k) rel.push_back(k % 2 == 0 ? i + 1 : j + 1);
        for (int k = mij - 1; k >= 0; --k) rel.push_back(-(k % 2 == 0 ? j + 1 : i + 1));
        relators.push_back(rel);
      }
    }
    std::uniform_int_distribution<std::size_t> length(0, 20);
    std::uniform_int_distribution<int> letter(1, rank);
    std::bernoulli_distribution sign(0.5);
    std::uniform_int_distribution<std::size_t> pick(0, relators.size() - 1);
    std::size_t failures = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      std::vector<int> letters;
      for (std::size_t n = length(rng); n > 0; --n) letters.push_back(sign(rng) ? letter(rng) : -letter(rng));
      std::vector<int> modified = letters;
      const auto& rel = relators[pick(rng)];
      std::uniform_int_distribution<std::size_t> pos(0, modified.size());
      modified.insert(modified.begin() + static_cast<std::ptrdiff_t>(pos(rng)), rel.begin(), rel.end());
      const bool same = g.normal_form(g.word(letters)) == g.normal_form(g.word(modified));
      const bool oracle = type != CoxeterType::A || artin_action(letters, rank + 1) == artin_action(modified, rank + 1);
      failures += !(same && oracle);
    }
    r.expect(failures == 0, g.group().label() + ": " + std::to_string(failures) + " failures");
    r.notes.push_back(g.group().label() + " 1000/1000");
  }
}

void dual_simples(Result& r) {
  const std::size_t expected[] = {5, 14, 42};
  for (int n = 3; n <= 5; ++n) {
    const auto w = build_group(CoxeterType::A, n - 1);
    const auto c = coxeter_element(w);
    const std::size_t count = count_below(w, c);
    const std::size_t oracle = noncrossing_partitions(n);
    r.expect(count == expected[n - 3], "S" + std::to_string(n) + ": " + std::to_string(count));
    r.expect(oracle == expected[n - 3], "S" + std::to_string(n) + ": noncrossing oracle " + std::to_string(oracle));
    r.notes.push_back("S" + std::to_string(n) + "=" + std::to_string(count));
  }
}

struct Criterion {
  int number;
  std::string name;
  std::function<void(Result&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Delta^2 = (s1...s(n-1))^n in Br_n, n = 2..6", garside_identity},
      {2, "(Delta*)^h = Delta^2 for A2..A5, D4, D5, G2", dual_power},
      {3, "centre parity of D4, D5, D6", center_parity},
      {4, "beta^|Z(W)| = pi", exact_sequence},
      {5, "prod d_i = |W|, gcd d_i = |Z(W)|, rank <= 4", degrees},
      {6, "building-set counts", building_counts},
      {7, "maximal nested sets", nested_structure},
      {8, "codec nestedness agrees with subspaces", codec_equivalence},
      {9, "stabilizers, Springer lines, regular Coxeter elements", springer_suite},
      {10, "inertia elements", inertia_suite},
      {11, "normal-form relator fuzz", normal_form_fuzz},
      {12, "absolute-order interval sizes 5, 14, 42", dual_simples},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Result r;
    const auto start = Clock::now();
    try {
      c.body(r);
    } catch (const std::exception& e) {
      r.failures.push_back(std::string("exception: ") + e.what());
    }
    const double t = seconds_since(start);
    const bool pass = r.failures.empty();
    failed += !pass;
    std::string details;
    const auto& parts = pass ? r.notes : r.failures;
    for (std::size_t i = 0; i < parts.size() && i < 8; ++i) details += (i ? "; " : "") + parts[i];
    if (parts.size() > 8) details += "; ... (" + std::to_string(parts.size()) + " total)";
    std::printf("%s  %2d  %-52s %7.2fs  %s\n", pass ? "PASS" : "FAIL", c.number, c.name.c_str(), t, details.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
