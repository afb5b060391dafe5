#include "nestbraid/garside.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "nestbraid/errors.hpp"

namespace nestbraid {

namespace {

void check_same_group(const BraidWord& a, const BraidWord& b) {
  if (!a.group.empty() && !b.group.empty() && a.group != b.group)
    throw InvalidInput("braid words over different groups: " + a.group + " and " + b.group);
}

std::string pick_group(const BraidWord& a, const BraidWord& b) {
  check_same_group(a, b);
  return a.group.empty() ? b.group : a.group;
}

}  // namespace

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  BraidWord out{a.letters, pick_group(a, b)};
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

BraidWord inverse(const BraidWord& a) {
  BraidWord out{{}, a.group};
  for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it) out.letters.push_back(-*it);
  return out;
}

BraidWord power(const BraidWord& a, long k) {
  const BraidWord base = k < 0 ? inverse(a) : a;
  BraidWord out{{}, a.group};
  for (long i = 0; i < std::labs(k); ++i) out.letters.insert(out.letters.end(), base.letters.begin(), base.letters.end());
  return out;
}

bool operator==(const NormalForm& a, const NormalForm& b) {
  if (a.delta_power != b.delta_power || a.simples.size() != b.simples.size()) return false;
  for (std::size_t i = 0; i < a.simples.size(); ++i)
    if (a.simples[i].perm != b.simples[i].perm) return false;
  return true;
}

Garside::Garside(ReflectionGroupData w) : w_(std::move(w)) {
  if (w_.simple_basis_inverse.rows() != w_.gram.rows()) throw InvalidInput("the group must act essentially");
  generators_ = w_.generator_perms;
  identity_.resize(w_.roots.size());
  std::iota(identity_.begin(), identity_.end(), 0);
  longest_ = identity_;
  for (bool grew = true; grew;) {
    grew = false;
    for (int i = 0; i < w_.rank; ++i)
      if (!right_descent(longest_, i)) {
        longest_ = compose(longest_, generators_[static_cast<std::size_t>(i)]);
        grew = true;
      }
  }
  for (int i = 0; i < w_.rank; ++i) {
    const Perm conj = compose(longest_, compose(generators_[static_cast<std::size_t>(i)], longest_));
    auto it = std::find(generators_.begin(), generators_.end(), conj);
    if (it == generators_.end()) throw ConsistencyError("conjugation by the longest element does not permute generators");
    tau_.push_back(static_cast<int>(it - generators_.begin()) + 1);
  }
}

bool Garside::right_descent(const Perm& p, int i) const {
  return !w_.is_positive(p[static_cast<std::size_t>(w_.simple_root_index[static_cast<std::size_t>(i)])]);
}

bool Garside::left_descent(const Perm& p, int i) const {
  const int target = w_.simple_root_index[static_cast<std::size_t>(i)];
  for (std::size_t r = 0; r < p.size(); ++r)
    if (p[r] == target) return !w_.is_positive(static_cast<int>(r));
  throw ConsistencyError("root permutation is not a bijection");
}

Garside::Perm Garside::inverse_perm(const Perm& p) const {
  Perm out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return out;
}

GroupElement Garside::element(const Perm& p) const { return element_from_perm(w_, p); }

BraidWord Garside::word(std::vector<int> letters) const {
  for (int k : letters)
    if (k == 0 || std::abs(k) > w_.rank)
      throw InvalidInput("generator index " + std::to_string(k) + " out of range for " + w_.label());
  return BraidWord{std::move(letters), w_.label()};
}

BraidWord Garside::parse(const std::string& text) const {
  std::istringstream in(text);
  std::vector<int> letters;
  std::string token;
  while (in >> token) {
    if (std::isdigit(static_cast<unsigned char>(token.back())) &&
        (std::isdigit(static_cast<unsigned char>(token[0])) || token[0] == '-' || token[0] == '+')) {
      std::size_t used = 0;
      int k = 0;
      try {
        k = std::stoi(token, &used);
      } catch (const std::exception&) {
        throw InvalidInput("bad letter '" + token + "'");
      }
      if (used != token.size()) throw InvalidInput("bad letter '" + token + "'");
      letters.push_back(k);
      continue;
    }
    const bool inverse = std::isupper(static_cast<unsigned char>(token[0])) != 0;
    std::string name = token;
    name[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(name[0])));
    int k = 0;
    for (std::size_t i = 0; i < w_.generator_names.size(); ++i)
      if (w_.generator_names[i] == name) k = static_cast<int>(i) + 1;
    if (k == 0 && w_.type == CoxeterType::G2 && (name == "s" || name == "t")) k = name == "s" ? 1 : 2;
    if (k == 0) throw InvalidInput("unknown generator '" + token + "' for " + w_.label());
    letters.push_back(inverse ? -k : k);
  }
  return word(std::move(letters));
}

std::string Garside::format(const BraidWord& w) const {
  std::string out;
  for (int k : w.letters) {
    std::string name = w_.generator_names.at(static_cast<std::size_t>(std::abs(k) - 1));
    if (k < 0) name[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    out += (out.empty() ? "" : " ") + name;
  }
  return out;
}

void Garside::left_weight(std::vector<Perm>& simples, long& delta_power) const {
  auto conjugate = [&](const Perm& p) { return compose(longest_, compose(p, longest_)); };
  for (bool changed = true; changed;) {
    changed = false;
    const auto before = simples.size();
    simples.erase(std::remove(simples.begin(), simples.end(), identity_), simples.end());
    changed = simples.size() != before;
    // x Delta = Delta (w0 x w0).
    for (std::size_t i = 0; i < simples.size(); ++i)
      if (simples[i] == longest_) {
        for (std::size_t j = 0; j < i; ++j) simples[j] = conjugate(simples[j]);
        simples.erase(simples.begin() + static_cast<std::ptrdiff_t>(i));
        ++delta_power;
        changed = true;
        --i;
      }
    for (std::size_t i = simples.size(); i-- > 1;) {
      Perm& a = simples[i - 1];
      Perm& b = simples[i];
      for (bool moved = true; moved;) {
        moved = false;
        for (int s = 0; s < w_.rank; ++s)
          if (left_descent(b, s) && !right_descent(a, s)) {
            const Perm& g = generators_[static_cast<std::size_t>(s)];
            a = compose(a, g);
            b = compose(g, b);
            moved = changed = true;
          }
      }
    }
  }
}

NormalForm Garside::normal_form(const BraidWord& word) const {
  if (!word.group.empty() && word.group != w_.label())
    throw InvalidInput("word over " + word.group + " used with " + w_.label());
  long delta_power = 0;
  std::vector<Perm> simples;
  for (int k : word.letters) {
    if (k == 0 || std::abs(k) > w_.rank) throw InvalidInput("generator index out of range");
    const Perm& g = generators_[static_cast<std::size_t>(std::abs(k) - 1)];
    if (k > 0) {
      simples.push_back(g);
      continue;
    }
    // x sigma^-1 = x Delta^-1 (w0 s) = Delta^-1 (w0 x w0) (w0 s).
    for (auto& p : simples) p = compose(longest_, compose(p, longest_));
    --delta_power;
    simples.push_back(compose(longest_, g));
  }
  left_weight(simples, delta_power);
  NormalForm nf;
  nf.delta_power = delta_power;
  for (const auto& p : simples) nf.simples.push_back(element(p));
  return nf;
}

BraidWord Garside::to_word(const NormalForm& nf) const {
  BraidWord out = power(delta(), nf.delta_power);
  for (const auto& s : nf.simples) {
    auto letters = reduced_word(s);
    out.letters.insert(out.letters.end(), letters.begin(), letters.end());
  }
  return out;
}

bool Garside::equal(const BraidWord& u, const BraidWord& v) const {
  check_same_group(u, v);
  return normal_form(u) == normal_form(v);
}

bool Garside::is_central(const BraidWord& w) const {
  for (int k = 1; k <= w_.rank; ++k) {
    const BraidWord s = generator(k);
    if (!equal(concat(w, s), concat(s, w))) return false;
  }
  return true;
}

BraidWord Garside::delta() const {
  const int r = w_.rank;
  std::vector<int> letters;
  switch (w_.type) {
    case CoxeterType::A:
      for (int k = 1; k <= r; ++k)
        for (int j = k; j >= 1; --j) letters.push_back(j);
      break;
    case CoxeterType::B:
      for (int rep = 0; rep < r; ++rep)
        for (int k = 1; k <= r; ++k) letters.push_back(k);
      break;
    case CoxeterType::D:
      for (int rep = 0; rep < r - 1; ++rep)
        for (int k = 1; k <= r; ++k) letters.push_back(k);
      break;
    case CoxeterType::G2:
      letters = {1, 2, 1, 2, 1, 2};
      break;
  }
  if (letters.size() != w_.positive_count || image(word(letters)).perm != longest_)
    throw ConsistencyError("the Garside word is not a reduced word of the longest element");
  return word(std::move(letters));
}

BraidWord Garside::dual_delta() const {
  std::vector<int> letters;
  if (w_.type == CoxeterType::D) {
    // s1 = 1, s1' = 2, s_k = k + 1 for k >= 2.
    letters = {1, 2};
    for (int k = 3; k < w_.rank; k += 2) letters.push_back(k + 1);
    for (int k = 2; k < w_.rank; k += 2) letters.push_back(k + 1);
  } else {
    for (int k = 1; k <= w_.rank; ++k) letters.push_back(k);
  }
  return word(std::move(letters));
}

int Garside::coxeter_number() const { return *std::max_element(w_.degrees.begin(), w_.degrees.end()); }

GroupElement Garside::image(const BraidWord& w) const {
  Perm p = identity_;
  for (int k : w.letters) {
    if (k == 0 || std::abs(k) > w_.rank) throw InvalidInput("generator index out of range");
    p = compose(p, generators_[static_cast<std::size_t>(std::abs(k) - 1)]);
  }
  return element(p);
}

std::vector<int> Garside::left_descents(const GroupElement& g) const {
  std::vector<int> out;
  for (int i = 0; i < w_.rank; ++i)
    if (left_descent(g.perm, i)) out.push_back(i);
  return out;
}

std::vector<int> Garside::right_descents(const GroupElement& g) const {
  std::vector<int> out;
  for (int i = 0; i < w_.rank; ++i)
    if (right_descent(g.perm, i)) out.push_back(i);
  return out;
}

std::vector<int> Garside::reduced_word(const GroupElement& g) const {
  std::vector<int> out;
  Perm p = g.perm;
  while (p != identity_) {
    int s = 0;
    while (!left_descent(p, s)) ++s;
    out.push_back(s + 1);
    p = compose(generators_[static_cast<std::size_t>(s)], p);
  }
  return out;
}

int Garside::length(const GroupElement& g) const {
  int n = 0;
  for (std::size_t r = 0; r < w_.positive_count; ++r) n += !w_.is_positive(g.perm[r]);
  return n;
}

CenterReport center_report(const Garside& g, const Caps& caps) {
  const auto& w = g.group();
  CenterReport out;
  out.z_of_w = std::accumulate(w.degrees.begin(), w.degrees.end(), 0, [](int a, int b) { return std::gcd(a, b); });
  if (w.group_order <= caps.max_group_order) {
    const auto center = brute_force_center(w, caps);
    if (center.size() != static_cast<std::size_t>(out.z_of_w))
      throw ConsistencyError("gcd of the degrees is " + std::to_string(out.z_of_w) + " but the centre of W has " +
                             std::to_string(center.size()) + " elements");
  }
  const BraidWord delta = g.delta();
  out.pi = power(delta, 2);
  out.beta = g.is_central(delta) ? delta : out.pi;
  out.beta_central = g.is_central(out.beta);
  out.pi_central = g.is_central(out.pi);
  out.relation_checked = g.equal(power(out.beta, out.z_of_w), out.pi);
  return out;
}

InertiaReport inertia_element(const Garside& g, const std::vector<int>& subset) {
  const auto& w = g.group();
  InertiaReport out;
  out.subset = subset;
  std::sort(out.subset.begin(), out.subset.end());
  out.subset.erase(std::unique(out.subset.begin(), out.subset.end()), out.subset.end());
  if (out.subset.empty()) throw InvalidInput("empty parabolic subset");
  for (int k : out.subset)
    if (k < 1 || k > w.rank) throw InvalidInput("generator index " + std::to_string(k) + " out of range");

  // Components of the Coxeter graph on J (edges where m >= 3).
  std::vector<bool> seen(out.subset.size(), false);
  for (std::size_t i = 0; i < out.subset.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> comp{out.subset[i]};
    seen[i] = true;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (std::size_t j = 0; j < out.subset.size(); ++j)
        if (!seen[j] && w.coxeter_matrix[static_cast<std::size_t>(comp[head] - 1)]
                                        [static_cast<std::size_t>(out.subset[j] - 1)] >= 3) {
          seen[j] = true;
          comp.push_back(out.subset[j]);
        }
    std::sort(comp.begin(), comp.end());
    out.components.push_back(comp);
  }
  std::sort(out.components.begin(), out.components.end());

  auto commutes_with = [&](const BraidWord& x, const std::vector<int>& letters) {
    return std::all_of(letters.begin(), letters.end(), [&](int k) {
      const BraidWord s = g.generator(k);
      return g.equal(concat(x, s), concat(s, x));
    });
  };

  out.delta = g.word({});
  out.zeta = g.word({});
  out.relation_checked = true;
  for (const auto& comp : out.components) {
    // Longest element of W_(J_i): grow by non-descents inside J_i.
    GroupElement top = identity_element(w);
    for (bool grew = true; grew;) {
      grew = false;
      for (int k : comp) {
        auto rd = g.right_descents(top);
        if (!std::binary_search(rd.begin(), rd.end(), k - 1)) {
          top = multiply(top, generator_element(w, k - 1));
          grew = true;
        }
      }
    }
    const BraidWord delta = g.word(g.reduced_word(top));
    const bool central = commutes_with(delta, comp);
    const int z = central ? 2 : 1;
    const BraidWord beta = central ? delta : power(delta, 2);
    out.center_order *= z;
    out.delta = concat(out.delta, delta);
    out.zeta = concat(out.zeta, beta);
    out.relation_checked = out.relation_checked && g.equal(power(beta, z), power(delta, 2));
  }
  out.z = power(out.delta, 2);
  out.z_central = commutes_with(out.z, out.subset);
  out.zeta_central = commutes_with(out.zeta, out.subset);
  out.conjugator = g.word({});
  return out;
}

std::optional<std::vector<int>> standard_subset(const ReflectionGroupData& w, const Subspace& a) {
  std::vector<int> subset;
  std::vector<VectorQ> roots;
  for (int i = 0; i < w.rank; ++i)
    if (a.contains(w.simple_roots[static_cast<std::size_t>(i)])) {
      subset.push_back(i + 1);
      roots.push_back(w.simple_roots[static_cast<std::size_t>(i)]);
    }
  if (Subspace::span(a.ambient_dim(), roots).dim() != a.dim()) return std::nullopt;
  return subset;
}

InertiaReport inertia_element(const Garside& g, const Subspace& a, const GroupElement& h) {
  const auto& w = g.group();
  const Subspace b = a.image(inverse(w, h).matrix);
  const auto subset = standard_subset(w, b);
  if (!subset || subset->empty())
    throw InvalidInput("the given element does not conjugate " + a.to_string() + " to a standard parabolic");
  InertiaReport out = inertia_element(g, *subset);
  const BraidWord lift = g.word(g.reduced_word(h));
  if (!(b.image(g.image(lift).matrix) == a)) throw ConsistencyError("conjugating lift does not map B to A");
  out.z = concat(concat(lift, out.z), inverse(lift));
  out.zeta = concat(concat(lift, out.zeta), inverse(lift));
  out.delta = concat(concat(lift, out.delta), inverse(lift));
  out.conjugator = lift;
  return out;
}

std::optional<GroupElement> find_conjugator(const Garside& g, const Subspace& a, const Caps& caps) {
  const auto& w = g.group();
  std::size_t scanned = 0;
  for (const auto& h : enumerate_group(w, caps)) {
    if (++scanned > caps.max_conjugation_search) throw CapExceeded("max_conjugation_search", caps.max_conjugation_search);
    auto subset = standard_subset(w, a.image(inverse(w, h).matrix));
    if (subset && !subset->empty()) return h;
  }
  return std::nullopt;
}

int reflection_length(const GroupElement& g) {
  MatrixQ m = g.matrix;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= 1;
  return static_cast<int>(rank(m));
}

bool absolute_order_below(const ReflectionGroupData& w, const GroupElement& g, const GroupElement& c) {
  return reflection_length(g) + reflection_length(multiply(inverse(w, g), c)) == reflection_length(c);
}

std::size_t count_below(const ReflectionGroupData& w, const GroupElement& c, const Caps& caps) {
  std::size_t n = 0;
  for (const auto& g : enumerate_group(w, caps)) n += absolute_order_below(w, g, c);
  return n;
}

}  // namespace nestbraid
