#include "nestbraid/wonderful.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace nestbraid {

namespace {

VectorCyc apply(const MatrixQ& m, const VectorCyc& v) {
  VectorCyc out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) out[i] += Cyclotomic(m(i, j)) * v[j];
  return out;
}

Cyclotomic pair(const VectorQ& a, const VectorCyc& v) {
  Cyclotomic s;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (!is_zero(a[j])) s += Cyclotomic(a[j]) * v[j];
  return s;
}

bool is_zero_vector(const VectorCyc& v) {
  return std::all_of(v.begin(), v.end(), [](const Cyclotomic& c) { return c.is_zero(); });
}

VectorCyc lift(const VectorQ& v) {
  VectorCyc out;
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

// G n for each hyperplane normal n: the functional cutting out the hyperplane.
std::vector<VectorQ> hyperplane_functionals(const Arrangement& a) {
  std::vector<VectorQ> out;
  for (const auto& h : a.hyperplanes()) out.push_back(a.gram() * h.normal);
  return out;
}

bool orthogonal_to(const Subspace& s, const MatrixQ& gram, const VectorCyc& v) {
  for (const auto& b : s.basis_vectors())
    if (!pair(gram * b, v).is_zero()) return false;
  return true;
}

std::string set_id(const NestedSet& t) {
  std::string out = "{";
  for (std::size_t k = 0; k < t.size(); ++k) out += (k ? "," : "") + std::to_string(t[k]);
  return out + "}";
}

// Integer vectors in [-h, h]^d with max |c| = h, first nonzero entry positive.
template <class Visit>
bool for_height(std::size_t d, int h, Visit&& visit) {
  std::vector<int> c(d, -h);
  while (true) {
    int top = 0;
    int first = 0;
    for (int x : c) {
      top = std::max(top, std::abs(x));
      if (first == 0) first = x;
    }
    if (top == h && first > 0 && visit(c)) return true;
    std::size_t k = 0;
    while (k < d && c[k] == h) c[k++] = -h;
    if (k == d) return false;
    ++c[k];
  }
}

VectorQ combine(const std::vector<VectorQ>& basis, const std::vector<int>& c, std::size_t n) {
  VectorQ v(n, Rational(0));
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (std::size_t i = 0; i < n; ++i) v[i] += c[k] * basis[k][i];
  return v;
}

}  // namespace

std::vector<std::size_t> Stratification::count_by_codim() const {
  std::vector<std::size_t> out;
  for (const auto& s : strata) {
    if (out.size() <= s.codim) out.resize(s.codim + 1, 0);
    ++out[s.codim];
  }
  return out;
}

Stratification stratification(const BuildingSet& f, const Caps& caps) {
  Stratification out;
  std::map<NestedSet, std::size_t> index;
  for (auto& t : enumerate_nested_sets(f, std::nullopt, caps)) {
    index.emplace(t, out.strata.size());
    out.strata.push_back({t, t.size(), set_id(t)});
  }
  for (std::size_t i = 0; i < out.strata.size(); ++i) {
    const NestedSet& t = out.strata[i].nested_set;
    for (std::size_t y = 0; y < f.size(); ++y) {
      if (std::binary_search(t.begin(), t.end(), y)) continue;
      NestedSet finer = t;
      finer.insert(std::upper_bound(finer.begin(), finer.end(), y), y);
      if (auto it = index.find(finer); it != index.end()) out.edges.emplace_back(i, it->second);
    }
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

Json strata_to_json(const Stratification& s, const BuildingSet& f, const MemberLabel& label) {
  Json nodes = Json::array();
  for (const auto& st : s.strata) {
    Json members = Json::array();
    for (auto m : st.nested_set) members.push_back(label ? Json(label(m)) : Json(m));
    nodes.push_back(Json{{"id", st.id}, {"codim", st.codim}, {"nested_set", members}});
  }
  Json edges = Json::array();
  for (const auto& [a, b] : s.edges) edges.push_back(Json::array({s.strata[a].id, s.strata[b].id}));
  Json building = Json::array();
  for (std::size_t i = 0; i < f.size(); ++i) {
    Json e = to_json(f.element(i));
    e["index"] = i;
    if (label) e["label"] = label(i);
    building.push_back(e);
  }
  return Json{{"building_set", building}, {"nodes", nodes}, {"edges", edges}};
}

std::string strata_to_dot(const Stratification& s, const BuildingSet& f, const MemberLabel& label) {
  (void)f;
  std::ostringstream out;
  out << "digraph strata {\n  rankdir=TB;\n";
  for (std::size_t i = 0; i < s.strata.size(); ++i) {
    const auto& st = s.strata[i];
    std::string text = "{";
    for (std::size_t k = 0; k < st.nested_set.size(); ++k)
      text += (k ? " " : "") + (label ? label(st.nested_set[k]) : "F" + std::to_string(st.nested_set[k]));
    text += "}";
    out << "  n" << i << " [label=\"" << text << "\\ncodim " << st.codim << "\"];\n";
  }
  for (const auto& [a, b] : s.edges) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::vector<Subspace> blowup_sequence(const BuildingSet& f) {
  const Closure& c = f.closure();
  const std::size_t n = c.arrangement().dim();
  if (!f.find(Subspace::whole(n))) throw InvalidInput("the whole space is not in the building set");
  std::vector<Subspace> out;
  for (std::size_t i = 0; i < f.size(); ++i) out.push_back(f.element(i).orthogonal(c.arrangement().gram()));
  std::sort(out.begin(), out.end());
  return out;
}

PointEncoding normalize_point_encoding(const VectorQ& x, const std::vector<VectorCyc>& lines, const BuildingSet& f) {
  const Closure& c = f.closure();
  const std::size_t n = c.arrangement().dim();
  const MatrixQ& gram = c.arrangement().gram();
  if (x.size() != n) throw InvalidInput("point has the wrong dimension");
  for (const auto& l : lines)
    if (l.size() != n) throw InvalidInput("line has the wrong dimension");
  PointEncoding p;
  p.x = x;
  std::vector<VectorCyc> conditions{lift(x)};
  while (true) {
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < f.size(); ++i) {
      bool ok = true;
      for (const auto& v : conditions)
        if (!orthogonal_to(f.element(i), gram, v)) {
          ok = false;
          break;
        }
      if (ok) candidates.push_back(i);
    }
    if (candidates.empty()) break;
    const std::size_t top = *std::max_element(candidates.begin(), candidates.end(), [&](std::size_t a, std::size_t b) {
      return f.element(a).dim() < f.element(b).dim();
    });
    for (auto i : candidates)
      if (!f.contains(top, i))
        throw InvalidInput("no greatest building-set element is orthogonal to the data (" +
                           f.element(top).to_string() + " and " + f.element(i).to_string() +
                           " are both maximal); the point is not encoded by a single chain");
    const std::size_t k = p.flats.size();
    if (k >= lines.size())
      throw InvalidInput("the chain needs a line in " + f.element(top).to_string() + " at position " +
                         std::to_string(k + 1));
    if (is_zero_vector(lines[k])) throw InvalidInput("line " + std::to_string(k + 1) + " is zero");
    if (!f.element(top).contains(lines[k]))
      throw InvalidInput("line " + std::to_string(k + 1) + " is not inside " + f.element(top).to_string());
    p.flats.push_back(top);
    p.lines.push_back(lines[k]);
    conditions.push_back(lines[k]);
  }
  if (lines.size() > p.flats.size())
    throw InvalidInput("the chain ends after " + std::to_string(p.flats.size()) + " line(s) but " +
                       std::to_string(lines.size()) + " were given");
  return p;
}

Json to_json(const PointEncoding& p, const BuildingSet& f) {
  Json chain = Json::array();
  for (std::size_t k = 0; k < p.flats.size(); ++k) {
    Json flat = to_json(f.element(p.flats[k]));
    flat["index"] = p.flats[k];
    chain.push_back(Json{{"flat", flat}, {"line", to_json(p.lines[k])}});
  }
  return Json{{"x", to_json(p.x)}, {"chain", chain}};
}

std::pair<VectorQ, std::vector<VectorCyc>> point_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("x")) throw InvalidInput("point JSON needs 'x'");
  std::vector<VectorCyc> lines;
  if (doc.contains("lines")) {
    if (!doc["lines"].is_array()) throw InvalidInput("'lines' must be an array");
    for (const auto& l : doc["lines"]) lines.push_back(cyclotomic_vector_from_json(l));
  }
  return {vector_from_json(doc["x"]), lines};
}

bool maps_to_multiple(const MatrixQ& w, const VectorCyc& v, Cyclotomic* factor) {
  const VectorCyc image = apply(w, v);
  std::size_t k = 0;
  while (k < v.size() && v[k].is_zero()) ++k;
  if (k == v.size()) return true;
  const Cyclotomic ratio = image[k] / v[k];
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!(image[i] == ratio * v[i])) return false;
  if (factor) *factor = ratio;
  return true;
}

bool is_scalar_on(const MatrixQ& w, const Subspace& s, Rational* scalar) {
  std::optional<Rational> common;
  for (const auto& b : s.basis_vectors()) {
    const VectorQ image = w * b;
    std::size_t k = 0;
    while (is_zero(b[k])) ++k;
    const Rational ratio = image[k] / b[k];
    if (common && *common != ratio) return false;
    for (std::size_t i = 0; i < b.size(); ++i)
      if (image[i] != ratio * b[i]) return false;
    common = ratio;
  }
  if (scalar) *scalar = common.value_or(Rational(1));
  return true;
}

StabilizerReport stabilizer_of_point(const PointEncoding& p, const BuildingSet& f, const ReflectionGroupData& w,
                                     const Caps& caps) {
  StabilizerReport out;
  for (auto& g : enumerate_group(w, caps)) {
    if (g.matrix * p.x != p.x) continue;
    bool keeps = true;
    for (const auto& l : p.lines)
      if (!maps_to_multiple(g.matrix, l)) {
        keeps = false;
        break;
      }
    if (!keeps) continue;
    if (!p.flats.empty() && !is_scalar_on(g.matrix, f.element(p.flats.back()))) out.is_cyclic_scalar = false;
    out.elements.push_back(std::move(g));
  }
  out.order = out.elements.size();
  return out;
}

RegularReport is_regular_element(const GroupElement& g, const ReflectionGroupData& w) {
  RegularReport out;
  const int m = element_order(g);
  const auto functionals = hyperplane_functionals(w.arrangement);
  for (int j = 0; j < m; ++j) {
    auto basis = eigenspace(g.matrix, m, j);
    if (basis.empty()) continue;
    bool inside_some = false;
    for (const auto& fn : functionals) {
      bool all_zero = std::all_of(basis.begin(), basis.end(), [&](const VectorCyc& b) { return pair(fn, b).is_zero(); });
      if (all_zero) {
        inside_some = true;
        break;
      }
    }
    if (inside_some) continue;
    // Each hyperplane kills sum t^k b_k for at most dim - 1 values of t.
    for (int t = 1;; ++t) {
      VectorCyc v(basis[0].size());
      Cyclotomic power(1);
      for (const auto& b : basis) {
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += power * b[i];
        power = power * Cyclotomic(t);
      }
      if (std::all_of(functionals.begin(), functionals.end(), [&](const VectorQ& fn) { return !pair(fn, v).is_zero(); })) {
        const int d = std::gcd(j, m);
        out.regular = true;
        out.order = m / d;
        out.exponent = j / d;
        out.witness = std::move(v);
        return out;
      }
    }
  }
  return out;
}

std::vector<GroupElement> parabolic_subgroup(const Subspace& a, const ReflectionGroupData& w, const Caps& caps) {
  return stabilizer_of_subspace(w, a.orthogonal(w.gram), StabilizerMode::Pointwise, caps);
}

SpringerReport is_springer_generic(const Subspace& a, const VectorCyc& l, const BuildingSet& f,
                                   const ReflectionGroupData& w, const Caps& caps) {
  auto member = f.find(a);
  if (!member) throw InvalidInput("subspace " + a.to_string() + " is not in the building set");
  if (l.size() != a.ambient_dim() || is_zero_vector(l)) throw InvalidInput("line must be a nonzero vector of V");
  if (!a.contains(l)) throw InvalidInput("line is not inside " + a.to_string());
  const Closure& c = f.closure();
  const LineSet& roots = c.lines(f.closure_index(*member));
  for (auto i = roots.find_first(); i != LineSet::npos; i = roots.find_next(i))
    if (pair(w.gram * c.arrangement().hyperplanes()[i].normal, l).is_zero())
      throw InvalidInput("line lies on a reflecting hyperplane of the parabolic subgroup");

  SpringerReport out;
  auto wa = parabolic_subgroup(a, w, caps);
  std::set<RootPermutation> scalars, center;
  for (const auto& g : wa) {
    if (is_scalar_on(g.matrix, a)) scalars.insert(g.perm);
    bool central = std::all_of(wa.begin(), wa.end(), [&](const GroupElement& h) {
      return compose(g.perm, h.perm) == compose(h.perm, g.perm);
    });
    if (central) center.insert(g.perm);
    if (maps_to_multiple(g.matrix, l)) out.stabilizer.push_back(g);
  }
  out.scalar_subgroup_order = scalars.size();
  out.center_order = center.size();
  out.generic = std::all_of(out.stabilizer.begin(), out.stabilizer.end(),
                            [&](const GroupElement& g) { return scalars.count(g.perm) > 0; });
  std::set<RootPermutation> stab;
  for (const auto& g : out.stabilizer) stab.insert(g.perm);
  out.stabilizer_is_center = stab == center;
  out.scalar_order = out.generic ? static_cast<int>(out.stabilizer.size()) : 0;
  out.smooth = out.generic;
  return out;
}

VectorQ find_springer_generic_line(const Subspace& a, const BuildingSet& f, const ReflectionGroupData& w,
                                   int max_height, const Caps& caps) {
  const auto basis = a.basis_vectors();
  const std::size_t n = a.ambient_dim();
  VectorQ found;
  for (int h = 1; h <= max_height; ++h) {
    bool done = for_height(basis.size(), h, [&](const std::vector<int>& coeffs) {
      VectorQ v = combine(basis, coeffs, n);
      try {
        if (!is_springer_generic(a, lift(v), f, w, caps).generic) return false;
      } catch (const InvalidInput&) {
        return false;
      }
      found = std::move(v);
      return true;
    });
    if (done) return found;
  }
  throw ConsistencyError("no Springer-generic line of height <= " + std::to_string(max_height) + " in " +
                         a.to_string());
}

VectorQ generic_point_of_orthogonal(const Subspace& a, const BuildingSet& f, int max_height) {
  const Closure& c = f.closure();
  const Arrangement& arr = c.arrangement();
  const Subspace perp = a.orthogonal(arr.gram());
  const std::size_t n = arr.dim();
  if (perp.dim() == 0) return VectorQ(n, Rational(0));
  const auto idx = c.find(a);
  if (!idx) throw InvalidInput("subspace " + a.to_string() + " is not in the closure");
  const LineSet& inside = c.lines(*idx);
  const auto functionals = hyperplane_functionals(arr);
  const auto basis = perp.basis_vectors();
  VectorQ found;
  for (int h = 1; h <= max_height; ++h) {
    bool done = for_height(basis.size(), h, [&](const std::vector<int>& coeffs) {
      VectorQ x = combine(basis, coeffs, n);
      for (std::size_t i = 0; i < functionals.size(); ++i)
        if (!inside.test(i) && is_zero(dot(functionals[i], x))) return false;
      found = std::move(x);
      return true;
    });
    if (done) return found;
  }
  throw ConsistencyError("no generic point of height <= " + std::to_string(max_height) + " in the orthogonal of " +
                         a.to_string());
}

}  // namespace nestbraid
