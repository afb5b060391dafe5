#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "doctest.h"
#include "nestbraid/errors.hpp"
#include "nestbraid/garside.hpp"

using namespace nestbraid;

namespace {

Garside garside(CoxeterType type, int rank) { return Garside(build_group(type, rank)); }

// Artin's faithful action of Br_n on the free group F_n, letters +-1..n.
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
    if (g != i && g != i + 1) {
      image = {g};
    } else if (letter > 0) {
      image = g == i ? FreeWord{i, i + 1, -i} : FreeWord{i};
    } else {
      image = g == i ? FreeWord{i + 1} : FreeWord{-(i + 1), i, i + 1};
    }
    if (x < 0) {
      std::reverse(image.begin(), image.end());
      for (auto& y : image) y = -y;
    }
    for (int y : image) push_reduced(out, y);
  }
  return out;
}

std::vector<FreeWord> artin_action(const BraidWord& b, int strands) {
  std::vector<FreeWord> images;
  for (int j = 1; j <= strands; ++j) {
    FreeWord w{j};
    for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it) w = substitute(*it, w);
    images.push_back(w);
  }
  return images;
}

// The defining relators of B(W): alternating products of length m_ij.
std::vector<BraidWord> relators(const Garside& g) {
  std::vector<BraidWord> out;
  const auto& m = g.group().coxeter_matrix;
  for (int i = 0; i < g.rank(); ++i)
    for (int j = i + 1; j < g.rank(); ++j) {
      std::vector<int> lhs, rhs;
      for (int k = 0; k < m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; ++k) {
        lhs.push_back(k % 2 == 0 ? i + 1 : j + 1);
        rhs.push_back(k % 2 == 0 ? j + 1 : i + 1);
      }
      out.push_back(concat(g.word(lhs), inverse(g.word(rhs))));
    }
  for (int i = 1; i <= g.rank(); ++i) out.push_back(g.word({i, -i}));
  return out;
}

BraidWord random_word(const Garside& g, std::mt19937_64& rng, std::size_t max_length) {
  std::uniform_int_distribution<std::size_t> len(0, max_length);
  std::uniform_int_distribution<int> gen(1, g.rank());
  std::bernoulli_distribution sign(0.5);
  std::vector<int> letters;
  for (std::size_t n = len(rng); n > 0; --n) letters.push_back(sign(rng) ? gen(rng) : -gen(rng));
  return g.word(letters);
}

BraidWord insert_at(const BraidWord& w, std::size_t pos, const BraidWord& r) {
  BraidWord out = w;
  out.letters.insert(out.letters.begin() + static_cast<std::ptrdiff_t>(pos), r.letters.begin(), r.letters.end());
  return out;
}

bool left_weighted(const Garside& g, const NormalForm& nf) {
  const auto id = identity_element(g.group());
  for (std::size_t i = 0; i < nf.simples.size(); ++i) {
    if (nf.simples[i].perm == id.perm || g.length(nf.simples[i]) == static_cast<int>(g.positive_roots())) return false;
    if (i + 1 < nf.simples.size()) {
      auto right = g.right_descents(nf.simples[i]);
      auto left = g.left_descents(nf.simples[i + 1]);
      if (!std::includes(right.begin(), right.end(), left.begin(), left.end())) return false;
    }
  }
  return true;
}

// Noncrossing set partitions of {0..n-1}, by brute force over all partitions.
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

const std::vector<std::pair<CoxeterType, int>> kAllSmall = {
    {CoxeterType::A, 1}, {CoxeterType::A, 2}, {CoxeterType::A, 3}, {CoxeterType::A, 4},
    {CoxeterType::B, 2}, {CoxeterType::B, 3}, {CoxeterType::B, 4}, {CoxeterType::D, 4}, {CoxeterType::G2, 2}};

}  // namespace

TEST_CASE("normal form basics") {
  auto br3 = garside(CoxeterType::A, 2);
  auto empty = br3.normal_form(br3.word({}));
  CHECK(empty.delta_power == 0);
  CHECK(empty.simples.empty());
  auto delta = br3.normal_form(br3.delta());
  CHECK(delta.delta_power == 1);
  CHECK(delta.simples.empty());
  CHECK(br3.normal_form(br3.word({1, 2, 1})) == br3.normal_form(br3.word({2, 1, 2})));
  CHECK(br3.equal(br3.word({1, 2, 1}), br3.word({2, 1, 2})));
  CHECK_FALSE(br3.equal(br3.generator(1), br3.generator(2)));
  CHECK(br3.normal_form(br3.word({-1})).delta_power == -1);
  CHECK(br3.equal(br3.word({1, -1, 2, -2}), br3.word({})));

  auto d4 = garside(CoxeterType::D, 4);
  CHECK(d4.equal(d4.parse("s1 s1'"), d4.parse("s1' s1")));
  auto g2 = garside(CoxeterType::G2, 2);
  CHECK(g2.equal(g2.parse("s t s t s t"), g2.parse("t s t s t s")));
  CHECK_FALSE(g2.equal(g2.parse("s t s"), g2.parse("t s t")));
  CHECK_THROWS_AS(br3.equal(br3.generator(1), d4.generator(1)), InvalidInput);
}

TEST_CASE("word parsing and printing") {
  auto d4 = garside(CoxeterType::D, 4);
  CHECK(d4.parse("s1 s1' S2 s3").letters == std::vector<int>{1, 2, -3, 4});
  CHECK(d4.parse("1 -2 3").letters == std::vector<int>{1, -2, 3});
  CHECK(d4.format(d4.parse("s1 S1' s2")) == "s1 S1' s2");
  CHECK(d4.parse("").letters.empty());
  CHECK_THROWS_AS(d4.parse("s9"), InvalidInput);
  CHECK_THROWS_AS(d4.parse("0"), InvalidInput);
  CHECK_THROWS_AS(d4.parse("5"), InvalidInput);
  CHECK_THROWS_AS(d4.parse("x1"), InvalidInput);
  CHECK_THROWS_AS(d4.parse("1x"), InvalidInput);
  auto g2 = garside(CoxeterType::G2, 2);
  CHECK(g2.parse("s T").letters == std::vector<int>{1, -2});
}

TEST_CASE("word problem against Artin's action on the free group") {
  std::mt19937_64 rng(1234);
  for (int strands : {3, 4}) {
    auto g = garside(CoxeterType::A, strands - 1);
    for (int i = 0; i + 1 < g.rank(); ++i) REQUIRE(g.group().coxeter_matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] == 3);
    const auto rels = relators(g);
    std::uniform_int_distribution<std::size_t> pick(0, rels.size() - 1);
    int equal_pairs = 0;
    for (int trial = 0; trial < 300; ++trial) {
      const BraidWord u = random_word(g, rng, 7);
      BraidWord v = trial % 2 == 0 ? random_word(g, rng, 7) : u;
      if (trial % 2 == 1) {
        std::uniform_int_distribution<std::size_t> pos(0, v.letters.size());
        v = insert_at(v, pos(rng), rels[pick(rng)]);
        if (trial % 4 == 1) v = insert_at(v, 0, inverse(rels[pick(rng)]));
      }
      const bool oracle = artin_action(u, strands) == artin_action(v, strands);
      CHECK(g.equal(u, v) == oracle);
      equal_pairs += oracle;
    }
    CHECK(equal_pairs >= 150);
  }
}

TEST_CASE("normal forms are left-weighted and round-trip") {
  std::mt19937_64 rng(99);
  for (auto [type, rank] : kAllSmall) {
    auto g = garside(type, rank);
    for (int trial = 0; trial < 60; ++trial) {
      const BraidWord w = random_word(g, rng, 16);
      const NormalForm nf = g.normal_form(w);
      CHECK(left_weighted(g, nf));
      const BraidWord back = g.to_word(nf);
      CHECK(g.normal_form(back) == nf);
      CHECK(g.image(back) == g.image(w));
    }
  }
}

TEST_CASE("relator insertion fuzz") {
  std::mt19937_64 rng(2024);
  const Caps caps;
  for (auto [type, rank] : {std::pair{CoxeterType::A, 3}, {CoxeterType::D, 4}, {CoxeterType::G2, 2}, {CoxeterType::B, 3}}) {
    auto g = garside(type, rank);
    const auto rels = relators(g);
    std::uniform_int_distribution<std::size_t> pick(0, rels.size() - 1);
    int failures = 0;
    for (std::size_t trial = 0; trial < caps.fuzz_trials; ++trial) {
      const BraidWord w = random_word(g, rng, caps.fuzz_word_length);
      std::uniform_int_distribution<std::size_t> pos(0, w.letters.size());
      const BraidWord r = rels[pick(rng)];
      const BraidWord v = insert_at(w, pos(rng), trial % 2 ? r : inverse(r));
      failures += !(g.normal_form(w) == g.normal_form(v));
    }
    CHECK(failures == 0);
  }
}

TEST_CASE("Garside elements") {
  auto br4 = garside(CoxeterType::A, 3);
  CHECK(br4.delta().letters == std::vector<int>{1, 2, 1, 3, 2, 1});
  auto d4 = garside(CoxeterType::D, 4);
  CHECK(d4.equal(d4.delta(), power(d4.parse("s1 s1' s2 s3"), 3)));
  auto g2 = garside(CoxeterType::G2, 2);
  CHECK(g2.equal(g2.delta(), g2.parse("s t s t s t")));
  for (auto [type, rank] : kAllSmall) {
    auto g = garside(type, rank);
    const BraidWord delta = g.delta();
    CHECK(delta.letters.size() == g.positive_roots());
    const GroupElement w0 = g.image(delta);
    CHECK(g.length(w0) == static_cast<int>(g.positive_roots()));
    CHECK(g.equal(delta, g.word(g.reduced_word(w0))));
    // Delta^-1 sigma Delta is a generator; trivial permutation iff Delta is central.
    bool trivial = true;
    for (int k = 1; k <= g.rank(); ++k) {
      const int t = g.delta_automorphism()[static_cast<std::size_t>(k - 1)];
      CHECK(g.equal(concat(concat(inverse(delta), g.generator(k)), delta), g.generator(t)));
      trivial = trivial && t == k;
    }
    CHECK(trivial == g.is_central(delta));
  }
  // Type A: Delta is the reversal permutation, acting as -(reversal) on roots.
  const GroupElement rev = br4.image(br4.delta());
  for (std::size_t r = 0; r < br4.group().positive_count; ++r) CHECK_FALSE(br4.group().is_positive(rev.perm[r]));
}

TEST_CASE("dual Garside element") {
  for (int n = 2; n <= 6; ++n) {
    auto g = garside(CoxeterType::A, n - 1);
    CHECK(g.dual_delta().letters.size() == static_cast<std::size_t>(n - 1));
    CHECK(g.equal(power(g.delta(), 2), power(g.dual_delta(), n)));
  }
  auto d4 = garside(CoxeterType::D, 4);
  CHECK(d4.format(d4.dual_delta()) == "s1 s1' s3 s2");
  auto g2 = garside(CoxeterType::G2, 2);
  CHECK(g2.format(g2.dual_delta()) == "s1 s2");
  for (auto [type, rank] : {std::pair{CoxeterType::A, 2}, {CoxeterType::A, 5}, {CoxeterType::B, 2}, {CoxeterType::B, 4},
                            {CoxeterType::D, 4}, {CoxeterType::D, 5}, {CoxeterType::G2, 2}}) {
    auto g = garside(type, rank);
    const GroupElement c = g.image(g.dual_delta());
    CHECK(element_order(c) == g.coxeter_number());
    CHECK(reflection_length(c) == g.rank());
    CHECK(g.equal(power(g.dual_delta(), g.coxeter_number()), power(g.delta(), 2)));
  }
}

TEST_CASE("centres") {
  for (int n : {4, 5, 6}) {
    auto g = garside(CoxeterType::D, n);
    CHECK(g.is_central(g.delta()) == (n % 2 == 0));
    CHECK(g.is_central(power(g.delta(), 2)));
  }
  auto br3 = garside(CoxeterType::A, 2);
  CHECK_FALSE(br3.is_central(br3.generator(1)));
  CHECK(br3.is_central(power(br3.delta(), 2)));

  for (auto [type, rank] : kAllSmall) {
    auto g = garside(type, rank);
    auto report = center_report(g);
    CHECK(static_cast<std::size_t>(report.z_of_w) == brute_force_center(g.group()).size());
    CHECK(report.beta_central);
    CHECK(report.pi_central);
    CHECK(report.relation_checked);
    CHECK(g.equal(report.pi, power(g.delta(), 2)));
    CHECK(g.equal(report.beta, report.z_of_w == 2 ? g.delta() : power(g.delta(), 2)));
  }
  auto a3 = center_report(garside(CoxeterType::A, 3));
  CHECK(a3.z_of_w == 1);
  auto d4 = center_report(garside(CoxeterType::D, 4));
  CHECK(d4.z_of_w == 2);
}

TEST_CASE("inertia elements of standard parabolics") {
  for (auto [type, rank] : {std::pair{CoxeterType::A, 4}, {CoxeterType::D, 4}, {CoxeterType::G2, 2}}) {
    auto g = garside(type, rank);
    const int r = g.rank();
    for (int mask = 1; mask < (1 << r); ++mask) {
      std::vector<int> subset;
      for (int i = 0; i < r; ++i)
        if (mask >> i & 1) subset.push_back(i + 1);
      auto rep = inertia_element(g, subset);
      CHECK(rep.z_central);
      CHECK(rep.zeta_central);
      CHECK(rep.relation_checked);
      CHECK(g.image(rep.z) == identity_element(g.group()));
      if (subset.size() == 1) CHECK(g.equal(rep.z, power(g.generator(subset[0]), 2)));
      // Disjoint supports with no edges between them: z_A = z_A1 z_A2.
      if (rep.components.size() >= 2) {
        const auto& c1 = rep.components[0];
        std::vector<int> rest;
        for (std::size_t k = 1; k < rep.components.size(); ++k)
          rest.insert(rest.end(), rep.components[k].begin(), rep.components[k].end());
        auto z1 = inertia_element(g, c1).z;
        auto z2 = inertia_element(g, rest).z;
        CHECK(g.equal(rep.z, concat(z1, z2)));
        CHECK(g.equal(concat(z1, z2), concat(z2, z1)));
      }
    }
    std::vector<int> all(static_cast<std::size_t>(r));
    std::iota(all.begin(), all.end(), 1);
    auto whole = inertia_element(g, all);
    CHECK(g.equal(whole.z, power(g.delta(), 2)));
    CHECK(g.equal(whole.zeta, center_report(g).beta));
  }
  auto a4 = garside(CoxeterType::A, 4);
  CHECK(inertia_element(a4, {1, 3}).components.size() == 2);
  CHECK_THROWS_AS(inertia_element(a4, std::vector<int>{}), InvalidInput);
  CHECK_THROWS_AS(inertia_element(a4, std::vector<int>{7}), InvalidInput);
}

TEST_CASE("inertia elements of conjugated parabolics") {
  auto g = garside(CoxeterType::A, 3);
  const auto& w = g.group();
  // A non-simple root line.
  VectorQ root;
  for (std::size_t i = 0; i < w.positive_count; ++i)
    if (std::find(w.simple_roots.begin(), w.simple_roots.end(), w.roots[i]) == w.simple_roots.end()) {
      root = w.roots[i];
      break;
    }
  REQUIRE(!root.empty());
  const Subspace a = Subspace::span(3, {root});
  CHECK_FALSE(standard_subset(w, a).has_value());
  auto h = find_conjugator(g, a);
  REQUIRE(h.has_value());
  auto rep = inertia_element(g, a, *h);
  CHECK(g.image(rep.z) == identity_element(w));
  CHECK(rep.zeta.letters.size() == 2 * rep.conjugator.letters.size() + 1);
  // The image of zeta is the reflection in the root.
  const GroupElement s = g.image(rep.zeta);
  CHECK(reflection_length(s) == 1);
  CHECK(a.image(s.matrix) == a);
  CHECK_THROWS_AS(inertia_element(g, a, identity_element(w)), InvalidInput);
  Caps tight;
  tight.max_conjugation_search = 1;
  CHECK_THROWS_AS(find_conjugator(g, a, tight), CapExceeded);
  CHECK(standard_subset(w, Subspace::whole(3)).value() == std::vector<int>{1, 2, 3});
}

TEST_CASE("absolute order") {
  for (int n : {3, 4, 5}) {
    auto w = build_group(CoxeterType::A, n - 1);
    const GroupElement c = coxeter_element(w);
    CHECK(count_below(w, c) == noncrossing_partitions(n));
  }
  CHECK(noncrossing_partitions(3) == 5);
  CHECK(noncrossing_partitions(4) == 14);
  CHECK(noncrossing_partitions(5) == 42);
  auto b3 = build_group(CoxeterType::B, 3);
  CHECK(reflection_length(identity_element(b3)) == 0);
  CHECK(absolute_order_below(b3, identity_element(b3), coxeter_element(b3)));
  for (int i = 0; i < 3; ++i) CHECK(reflection_length(generator_element(b3, i)) == 1);
  for (const auto& g : enumerate_group(b3)) {
    // Involutions of reflection length 1 are exactly the 9 reflections.
    if (reflection_length(g) == 1) CHECK(element_order(g) == 2);
  }
}
