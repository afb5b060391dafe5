#include "nestbraid/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "nestbraid/building.hpp"
#include "nestbraid/codec.hpp"
#include "nestbraid/errors.hpp"
#include "nestbraid/garside.hpp"
#include "nestbraid/wonderful.hpp"

namespace nestbraid {

namespace {

// Details are the failures when any, otherwise the notes.
struct Outcome {
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back("failed: " + what);
  }
  void note(const std::string& text) { notes.push_back(text); }
  bool pass() const { return failures.empty(); }
  std::string details() const {
    const auto& parts = failures.empty() ? notes : failures;
    std::string out;
    for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
    return out;
  }
};

using Body = std::function<void(Outcome&, const Caps&)>;

struct Entry {
  std::string module;
  std::string name;
  std::string identity;
  Body body;
};

const std::vector<std::pair<CoxeterType, int>> kRankFour = {
    {CoxeterType::A, 1}, {CoxeterType::A, 2}, {CoxeterType::A, 3}, {CoxeterType::A, 4}, {CoxeterType::B, 2},
    {CoxeterType::B, 3}, {CoxeterType::B, 4}, {CoxeterType::D, 4}, {CoxeterType::G2, 2}};

BuildingSet building(const ReflectionGroupData& w, const Caps& caps) {
  return minimal_building_set(w.arrangement, &w, caps);
}

// Calls visit on every sorted index subset of {0..n-1} of size 1..k.
void for_small_subsets(std::size_t n, std::size_t k, const std::function<void(const NestedSet&)>& visit) {
  NestedSet current;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (!current.empty()) visit(current);
    if (current.size() == k) return;
    for (std::size_t i = start; i < n; ++i) {
      current.push_back(i);
      rec(i + 1);
      current.pop_back();
    }
  };
  rec(0);
}

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
  return out;
}

std::vector<Entry> entries() {
  std::vector<Entry> out;

  out.push_back({"exact-arith", "roots of unity", "zeta_m^m = 1 and 1 + zeta_m + ... + zeta_m^(m-1) = 0, m <= 12",
                 [](Outcome& o, const Caps&) {
                   for (int m = 1; m <= 12; ++m) {
                     const Cyclotomic z = Cyclotomic::root_of_unity(m, 1);
                     Cyclotomic p(1), sum;
                     for (int j = 0; j < m; ++j) {
                       sum += p;
                       p *= z;
                     }
                     o.expect(p == Cyclotomic(1), "zeta_" + std::to_string(m) + "^m");
                     if (m > 1) o.expect(sum.is_zero(), "sum of powers of zeta_" + std::to_string(m));
                   }
                   o.note("m = 1..12");
                 }});
  out.push_back({"exact-arith", "rational text round trip", "parse(print(q)) = q", [](Outcome& o, const Caps&) {
                   for (const char* text : {"0", "-3/4", "22/7", "-1", "123456789012345678901/3"}) {
                     const Rational q = parse_rational(text);
                     o.expect(parse_rational(to_string(q)) == q, text);
                   }
                   o.expect(to_string(parse_rational("-6/4")) == "-3/2", "-6/4 canonicalizes to -3/2");
                 }});

  out.push_back({"arrangement", "hyperplane counts", "|A(A3)| = 6, |A(B3)| = 9, |A(D4)| = 12, |A(G2)| = 6",
                 [](Outcome& o, const Caps&) {
                   for (auto [t, r, n] : {std::tuple{CoxeterType::A, 3, 6}, {CoxeterType::B, 3, 9},
                                          {CoxeterType::D, 4, 12}, {CoxeterType::G2, 2, 6}}) {
                     const auto w = build_group(t, r);
                     o.expect(w.arrangement.size() == static_cast<std::size_t>(n), w.label());
                     o.note(w.label() + ": " + std::to_string(w.arrangement.size()));
                   }
                 }});
  out.push_back({"arrangement", "degrees", "prod d_i = |W| and gcd(d_i) = |Z(W)|, rank <= 4",
                 [](Outcome& o, const Caps& caps) {
                   for (auto [t, r] : kRankFour) {
                     const auto w = build_group(t, r);
                     const auto product = std::accumulate(w.degrees.begin(), w.degrees.end(), std::uint64_t{1},
                                                          [](std::uint64_t a, int d) { return a * static_cast<std::uint64_t>(d); });
                     const int g = std::accumulate(w.degrees.begin(), w.degrees.end(), 0,
                                                   [](int a, int d) { return std::gcd(a, d); });
                     const std::size_t order = enumerate_group(w, caps).size();
                     const std::size_t center = brute_force_center(w, caps).size();
                     o.expect(product == order, w.label() + " product of degrees");
                     o.expect(static_cast<std::size_t>(g) == center, w.label() + " gcd of degrees");
                     o.note(w.label() + ": |W| = " + std::to_string(order) + ", |Z| = " + std::to_string(center));
                   }
                 }});

  out.push_back({"building-nested", "S_n building sets", "|F(S_n)| = 2^n - n - 1, n = 3..6, one label per member",
                 [](Outcome& o, const Caps& caps) {
                   for (int n = 3; n <= 6; ++n) {
                     const auto w = build_group(CoxeterType::A, n - 1);
                     const auto f = minimal_building_set(w.arrangement, nullptr, caps);
                     const std::size_t expected = (std::size_t{1} << n) - static_cast<std::size_t>(n) - 1;
                     o.expect(f.size() == expected, "|F(S_" + std::to_string(n) + ")|");
                     std::vector<SnLabel> labels;
                     for (std::size_t i = 0; i < f.size(); ++i) {
                       labels.push_back(sn_encode(f.element(i), n));
                       o.expect(sn_decode(labels.back(), n) == f.element(i), "codec round trip");
                     }
                     std::sort(labels.begin(), labels.end());
                     o.expect(std::adjacent_find(labels.begin(), labels.end()) == labels.end(), "distinct labels");
                     o.note("|F(S_" + std::to_string(n) + ")| = " + std::to_string(f.size()));
                   }
                 }});
  out.push_back({"building-nested", "G2 building set", "|F(G2)| = 7: six root lines and V", [](Outcome& o, const Caps& caps) {
                   const auto w = build_group(CoxeterType::G2, 2);
                   const auto f = building(w, caps);
                   o.expect(f.size() == 7, "|F(G2)| = " + std::to_string(f.size()));
                   o.note("|F(G2)| = " + std::to_string(f.size()));
                 }});
  out.push_back({"building-nested", "D4 routes agree", "root route = definition route on D4", [](Outcome& o, const Caps& caps) {
                   const auto w = build_group(CoxeterType::D, 4);
                   const auto a = minimal_building_set(w.arrangement, &w, caps);
                   const auto b = minimal_building_set(w.arrangement, nullptr, caps);
                   o.expect(a.elements() == b.elements(), "member lists differ");
                   o.note("|F(D4)| = " + std::to_string(a.size()));
                 }});
  out.push_back({"building-nested", "maximal nested sets",
                 "every maximal nested set has rank members; S_n counts (2n-3)!!; G2 has 6 of the form {V, line}",
                 [](Outcome& o, const Caps& caps) {
                   for (auto [t, r] : kRankFour) {
                     const auto w = build_group(t, r);
                     const auto f = building(w, caps);
                     const auto maximal = maximal_nested_sets(f, caps);
                     for (const auto& s : maximal) o.expect(s.size() == static_cast<std::size_t>(r), w.label() + " size");
                     if (t == CoxeterType::A && r >= 2) {
                       std::size_t df = 1;
                       for (int k = 2 * (r + 1) - 3; k > 1; k -= 2) df *= static_cast<std::size_t>(k);
                       o.expect(maximal.size() == df, w.label() + " count");
                     }
                     if (t == CoxeterType::G2) {
                       o.expect(maximal.size() == 6, "G2 count");
                       for (const auto& s : maximal)
                         o.expect(f.element(s[0]).dim() + f.element(s[1]).dim() == 3, "G2 shape");
                     }
                     o.note(w.label() + ": " + std::to_string(maximal.size()));
                   }
                 }});
  out.push_back({"building-nested", "codec equivalence",
                 "label nestedness = subspace nestedness on all subsets of size <= 4 (S4, S5, D4)",
                 [](Outcome& o, const Caps& caps) {
                   for (int n : {4, 5}) {
                     const auto w = build_group(CoxeterType::A, n - 1);
                     const auto f = building(w, caps);
                     std::vector<SnLabel> labels;
                     for (std::size_t i = 0; i < f.size(); ++i) labels.push_back(sn_encode(f.element(i), n));
                     std::size_t total = 0, agree = 0;
                     for_small_subsets(f.size(), 4, [&](const NestedSet& s) {
                       std::vector<SnLabel> picked;
                       for (auto i : s) picked.push_back(labels[i]);
                       ++total;
                       agree += sn_labels_nested(picked) == is_nested(s, f);
                     });
                     o.expect(agree == total, "S" + std::to_string(n));
                     o.note("S" + std::to_string(n) + ": " + std::to_string(agree) + "/" + std::to_string(total));
                   }
                   const auto w = build_group(CoxeterType::D, 4);
                   const auto f = building(w, caps);
                   std::vector<DnLabel> labels;
                   for (std::size_t i = 0; i < f.size(); ++i) labels.push_back(dn_encode(f.element(i), 4));
                   std::size_t total = 0, agree = 0;
                   for_small_subsets(f.size(), 4, [&](const NestedSet& s) {
                     std::vector<DnLabel> picked;
                     for (auto i : s) picked.push_back(labels[i]);
                     ++total;
                     agree += dn_labels_nested(picked) == is_nested(s, f);
                   });
                   o.expect(agree == total, "D4");
                   o.note("D4: " + std::to_string(agree) + "/" + std::to_string(total));
                 }});

  out.push_back({"wonderful", "strata counts", "G2: 1 + 7 + 6 strata; A2: 1 + 4 + 3", [](Outcome& o, const Caps& caps) {
                   const auto g2 = build_group(CoxeterType::G2, 2);
                   const auto a2 = build_group(CoxeterType::A, 2);
                   o.expect(stratification(building(g2, caps), caps).count_by_codim() == std::vector<std::size_t>{1, 7, 6}, "G2");
                   o.expect(stratification(building(a2, caps), caps).count_by_codim() == std::vector<std::size_t>{1, 4, 3}, "A2");
                 }});
  out.push_back({"wonderful", "blow-up sequence", "G2: the origin, then 6 lines", [](Outcome& o, const Caps& caps) {
                   const auto g2 = build_group(CoxeterType::G2, 2);
                   const auto seq = blowup_sequence(building(g2, caps));
                   o.expect(seq.size() == 7 && seq[0].dim() == 0, "length or first center");
                   for (std::size_t i = 1; i < seq.size(); ++i) o.expect(seq[i].dim() == 1, "line");
                 }});
  out.push_back({"wonderful", "Springer-generic stabilizers",
                 "stab (x, A, l) = scalar subgroup of W_A of order |Z(W_A)|, all A in F of A3, D4, G2",
                 [](Outcome& o, const Caps& caps) {
                   for (auto [t, r] : {std::pair{CoxeterType::A, 3}, {CoxeterType::D, 4}, {CoxeterType::G2, 2}}) {
                     const auto w = build_group(t, r);
                     const auto f = building(w, caps);
                     for (std::size_t i = 0; i < f.size(); ++i) {
                       const Subspace& a = f.element(i);
                       const VectorQ l = find_springer_generic_line(a, f, w, 4, caps);
                       const auto report = is_springer_generic(a, to_cyclotomic(l), f, w, caps);
                       const auto p = normalize_point_encoding(generic_point_of_orthogonal(a, f), {to_cyclotomic(l)}, f);
                       const auto stab = stabilizer_of_point(p, f, w, caps);
                       const std::string where = w.label() + " " + a.to_string();
                       o.expect(report.generic && report.stabilizer_is_center, where + " generic");
                       o.expect(stab.order == report.center_order && stab.order == report.scalar_subgroup_order &&
                                    stab.is_cyclic_scalar,
                                where + " stabilizer");
                     }
                     o.note(w.label() + ": " + std::to_string(f.size()) + " members");
                   }
                 }});
  out.push_back({"wonderful", "Coxeter elements are regular", "A2, A3, B3, G2", [](Outcome& o, const Caps&) {
                   for (auto [t, r] : {std::pair{CoxeterType::A, 2}, {CoxeterType::A, 3}, {CoxeterType::B, 3}, {CoxeterType::G2, 2}}) {
                     const auto w = build_group(t, r);
                     const auto rep = is_regular_element(coxeter_element(w), w);
                     o.expect(rep.regular, w.label());
                     o.note(w.label() + ": eigenvalue order " + std::to_string(rep.order));
                   }
                 }});

  out.push_back({"garside", "full twist in Br_n", "Delta^2 = (sigma_1 ... sigma_(n-1))^n, n = 2..6", [](Outcome& o, const Caps&) {
                   for (int n = 2; n <= 6; ++n) {
                     const Garside g(build_group(CoxeterType::A, n - 1));
                     o.expect(g.equal(power(g.delta(), 2), power(g.dual_delta(), n)), "n = " + std::to_string(n));
                   }
                 }});
  out.push_back({"garside", "dual power", "(Delta*)^h = Delta^2", [](Outcome& o, const Caps&) {
                   for (auto [t, r] : {std::pair{CoxeterType::A, 2}, {CoxeterType::A, 3}, {CoxeterType::A, 4}, {CoxeterType::A, 5},
                                       {CoxeterType::B, 2}, {CoxeterType::B, 3}, {CoxeterType::B, 4}, {CoxeterType::D, 4},
                                       {CoxeterType::D, 5}, {CoxeterType::G2, 2}}) {
                     const Garside g(build_group(t, r));
                     o.expect(g.equal(power(g.dual_delta(), g.coxeter_number()), power(g.delta(), 2)), g.group().label());
                   }
                 }});
  out.push_back({"garside", "centre parity in type D", "Delta central in B(D_n) iff n even; Delta^2 always",
                 [](Outcome& o, const Caps&) {
                   for (int n : {4, 5, 6}) {
                     const Garside g(build_group(CoxeterType::D, n));
                     o.expect(g.is_central(g.delta()) == (n % 2 == 0), "Delta in D" + std::to_string(n));
                     o.expect(g.is_central(power(g.delta(), 2)), "Delta^2 in D" + std::to_string(n));
                   }
                 }});
  out.push_back({"garside", "centre relation", "beta^|Z(W)| = pi", [](Outcome& o, const Caps& caps) {
                   for (auto [t, r] : {std::pair{CoxeterType::A, 2}, {CoxeterType::A, 3}, {CoxeterType::A, 4}, {CoxeterType::A, 5},
                                       {CoxeterType::B, 2}, {CoxeterType::B, 3}, {CoxeterType::B, 4}, {CoxeterType::D, 4},
                                       {CoxeterType::D, 5}, {CoxeterType::G2, 2}}) {
                     const Garside g(build_group(t, r));
                     const auto rep = center_report(g, caps);
                     o.expect(rep.relation_checked && rep.beta_central && rep.pi_central, g.group().label());
                   }
                 }});
  out.push_back({"garside", "inertia elements", "z_A central in its parabolic; z_(A1+A2) = z_A1 z_A2; z_V = Delta^2",
                 [](Outcome& o, const Caps&) {
                   for (auto [t, r] : {std::pair{CoxeterType::A, 4}, {CoxeterType::D, 4}, {CoxeterType::G2, 2}}) {
                     const Garside g(build_group(t, r));
                     for (int mask = 1; mask < (1 << r); ++mask) {
                       std::vector<int> subset;
                       for (int i = 0; i < r; ++i)
                         if (mask >> i & 1) subset.push_back(i + 1);
                       const auto rep = inertia_element(g, subset);
                       o.expect(rep.z_central && rep.zeta_central && rep.relation_checked, g.group().label() + " central");
                       if (rep.components.size() >= 2) {
                         std::vector<int> rest;
                         for (std::size_t k = 1; k < rep.components.size(); ++k)
                           rest.insert(rest.end(), rep.components[k].begin(), rep.components[k].end());
                         const auto z1 = inertia_element(g, rep.components[0]).z;
                         const auto z2 = inertia_element(g, rest).z;
                         o.expect(g.equal(rep.z, concat(z1, z2)) && g.equal(concat(z1, z2), concat(z2, z1)),
                                  g.group().label() + " product");
                       }
                       if (mask == (1 << r) - 1) o.expect(g.equal(rep.z, power(g.delta(), 2)), g.group().label() + " z_V");
                     }
                   }
                 }});
  out.push_back({"garside", "normal-form fuzz", "inserting a defining relator leaves the normal form unchanged",
                 [](Outcome& o, const Caps& caps) {
                   std::mt19937_64 rng(0x5eed);
                   for (auto [t, r] : {std::pair{CoxeterType::A, 3}, {CoxeterType::D, 4}, {CoxeterType::G2, 2}}) {
                     const Garside g(build_group(t, r));
                     const auto rels = relators(g);
                     std::uniform_int_distribution<std::size_t> len(0, caps.fuzz_word_length);
                     std::uniform_int_distribution<int> gen(1, r);
                     std::uniform_int_distribution<std::size_t> pick(0, rels.size() - 1);
                     std::size_t failures = 0;
                     for (std::size_t trial = 0; trial < caps.fuzz_trials; ++trial) {
                       std::vector<int> letters;
                       for (std::size_t n = len(rng); n > 0; --n) letters.push_back(rng() % 2 ? gen(rng) : -gen(rng));
                       const BraidWord w = g.word(letters);
                       BraidWord v = w;
                       const BraidWord rel = trial % 2 ? rels[pick(rng)] : inverse(rels[pick(rng)]);
                       const auto pos = static_cast<std::ptrdiff_t>(rng() % (letters.size() + 1));
                       v.letters.insert(v.letters.begin() + pos, rel.letters.begin(), rel.letters.end());
                       failures += !(g.normal_form(w) == g.normal_form(v));
                     }
                     o.expect(failures == 0, g.group().label() + ": " + std::to_string(failures) + " failures");
                     o.note(g.group().label() + ": " + std::to_string(caps.fuzz_trials) + " trials");
                   }
                 }});
  out.push_back({"garside", "dual simples", "|{w <= c}| = 5, 14, 42 in S3, S4, S5", [](Outcome& o, const Caps& caps) {
                   const std::size_t catalan[] = {5, 14, 42};
                   for (int n = 3; n <= 5; ++n) {
                     const auto w = build_group(CoxeterType::A, n - 1);
                     const auto count = count_below(w, coxeter_element(w), caps);
                     o.expect(count == catalan[n - 3], "S" + std::to_string(n));
                     o.note("S" + std::to_string(n) + ": " + std::to_string(count));
                   }
                 }});
  return out;
}

}  // namespace

bool VerificationSuite::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Json VerificationSuite::to_json() const {
  Json list = Json::array();
  for (const auto& c : checks)
    list.push_back(Json{{"module", c.module}, {"name", c.name}, {"identity", c.identity}, {"pass", c.pass}, {"details", c.details}});
  return Json{{"all_pass", all_pass()}, {"checks", list}};
}

std::string VerificationSuite::table() const {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& c : checks) {
    passed += c.pass;
    out << (c.pass ? "PASS  " : "FAIL  ") << c.module << "  " << c.name << "  [" << c.identity << "]";
    if (!c.details.empty()) out << "  " << c.details;
    out << "\n";
  }
  out << passed << "/" << checks.size() << " checks passed\n";
  return out.str();
}

const std::vector<std::string>& verify_scopes() {
  static const std::vector<std::string> scopes = {"all", "exact-arith", "arrangement", "building-nested", "wonderful",
                                                  "garside"};
  return scopes;
}

VerificationSuite run_verify(const std::string& scope, const Caps& caps) {
  const auto& scopes = verify_scopes();
  if (std::find(scopes.begin(), scopes.end(), scope) == scopes.end())
    throw InvalidInput("unknown verify scope '" + scope + "'");
  VerificationSuite suite;
  for (auto& e : entries()) {
    if (scope != "all" && e.module != scope) continue;
    Check c{e.module, e.name, e.identity, false, ""};
    Outcome o;
    try {
      e.body(o, caps);
      c.pass = o.pass();
      c.details = o.details();
    } catch (const std::exception& ex) {
      c.pass = false;
      c.details = std::string("error: ") + ex.what();
    }
    suite.checks.push_back(std::move(c));
  }
  return suite;
}

}  // namespace nestbraid
