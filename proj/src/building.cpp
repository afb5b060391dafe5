#include "nestbraid/building.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>

namespace nestbraid {

struct Closure::SumCache {
  std::mutex mutex;
  std::unordered_map<std::uint64_t, std::size_t> sums;
};

namespace {

MatrixQ rows_of(const Arrangement& a, const LineSet& lines) {
  std::vector<VectorQ> rows;
  for (auto i = lines.find_first(); i != LineSet::npos; i = lines.find_next(i))
    rows.push_back(a.hyperplanes()[i].normal);
  return MatrixQ::from_rows(rows, a.dim());
}

}  // namespace

Closure Closure::build(const Arrangement& a, const Caps& caps) {
  const std::size_t n = a.size();
  std::vector<Subspace> found;
  std::vector<LineSet> found_lines;
  std::map<Subspace, std::size_t> seen;
  auto add = [&](Subspace s, LineSet lines) {
    if (found.size() >= caps.max_closure) throw CapExceeded("max_closure", caps.max_closure);
    seen.emplace(s, found.size());
    found.push_back(std::move(s));
    found_lines.push_back(std::move(lines));
  };
  for (std::size_t i = 0; i < n; ++i) {
    LineSet l(n);
    l.set(i);
    add(a.dual_line(i), l);
  }
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (std::size_t i = 0; i < n; ++i) {
      if (found_lines[head].test(i)) continue;
      Subspace s = found[head] + a.dual_line(i);
      if (seen.count(s)) continue;
      LineSet l = found_lines[head];
      l.set(i);
      for (std::size_t j = 0; j < n; ++j)
        if (!l.test(j) && s.contains(a.hyperplanes()[j].normal)) l.set(j);
      add(std::move(s), std::move(l));
    }
  }
  std::vector<std::size_t> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return found[x] < found[y]; });

  Closure c;
  c.arrangement_ = a;
  c.cache_ = std::make_shared<SumCache>();
  for (std::size_t k = 0; k < order.size(); ++k) {
    c.elements_.push_back(std::move(found[order[k]]));
    c.lines_.push_back(std::move(found_lines[order[k]]));
    c.by_subspace_.emplace(c.elements_.back(), k);
    c.by_lines_.emplace(c.lines_.back(), k);
  }
  return c;
}

std::optional<std::size_t> Closure::find(const Subspace& s) const {
  auto it = by_subspace_.find(s);
  if (it == by_subspace_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Closure::find_lines(const LineSet& lines) const {
  auto it = by_lines_.find(lines);
  if (it == by_lines_.end()) return std::nullopt;
  return it->second;
}

std::size_t Closure::index_of(const Subspace& s) const {
  if (auto i = find(s)) return *i;
  throw InvalidInput("subspace " + s.to_string() + " is not a sum of dual lines of the arrangement");
}

std::size_t Closure::sum(std::size_t a, std::size_t b) const {
  if (a > b) std::swap(a, b);
  if (contains(b, a)) return b;
  if (contains(a, b)) return a;
  const std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | b;
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->sums.find(key);
    if (it != cache_->sums.end()) return it->second;
  }
  std::size_t s = index_of(elements_[a] + elements_[b]);
  std::lock_guard<std::mutex> lock(cache_->mutex);
  cache_->sums.emplace(key, s);
  return s;
}

std::size_t Closure::span_of(const LineSet& lines) const {
  if (lines.none()) throw InvalidInput("span of an empty set of lines");
  if (auto i = find_lines(lines)) return *i;
  return index_of(Subspace::span(arrangement_.dim(), rows_of(arrangement_, lines).row_vectors()));
}

std::size_t Closure::rank_of(const LineSet& lines) const {
  if (lines.none()) return 0;
  return rank(rows_of(arrangement_, lines));
}

namespace {

// Exhaustive over bipartitions S1 | S2 of the lines of u with S1 holding the
// first line. A valid S1 is always the line set of span(S1), so only
// elements of C inside u are tried, smallest first.
std::optional<std::size_t> find_split(std::size_t u, const Closure& c) {
  const LineSet& lines = c.lines(u);
  const std::size_t first = lines.find_first();
  const std::size_t total = c.element(u).dim();
  for (std::size_t k = 0; k < c.size() && c.element(k).dim() < total; ++k) {
    const LineSet& s1 = c.lines(k);
    if (!s1.test(first) || !s1.is_subset_of(lines)) continue;
    if (c.element(k).dim() + c.rank_of(lines - s1) == total) return k;
  }
  return std::nullopt;
}

void split_into(std::size_t u, const Closure& c, const Caps& caps, std::vector<std::size_t>& out) {
  const LineSet& lines = c.lines(u);
  if (lines.count() == 1) {
    out.push_back(u);
    return;
  }
  if (lines.count() > caps.max_bipartition_lines)
    throw CapExceeded("max_bipartition_lines", caps.max_bipartition_lines);
  auto s1 = find_split(u, c);
  if (!s1) {
    out.push_back(u);
    return;
  }
  split_into(*s1, c, caps, out);
  split_into(c.span_of(lines - c.lines(*s1)), c, caps, out);
}

}  // namespace

std::vector<std::size_t> decompose_index(std::size_t u, const Closure& c, const Caps& caps) {
  std::vector<std::size_t> out;
  split_into(u, c, caps, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subspace> decompose(const Subspace& u, const Closure& c, const Caps& caps) {
  std::vector<Subspace> out;
  for (auto i : decompose_index(c.index_of(u), c, caps)) out.push_back(c.element(i));
  return out;
}

std::vector<std::size_t> root_components(std::size_t u, const Closure& c, const ReflectionGroupData& w) {
  const Arrangement& a = c.arrangement();
  if (!(a == w.arrangement)) throw InvalidInput("group data does not match the arrangement");
  const LineSet& lines = c.lines(u);
  std::vector<std::size_t> idx;
  for (auto i = lines.find_first(); i != LineSet::npos; i = lines.find_next(i)) idx.push_back(i);
  std::vector<std::size_t> comp(idx.size());
  std::iota(comp.begin(), comp.end(), 0);
  std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
    return comp[x] == x ? x : comp[x] = root(comp[x]);
  };
  for (std::size_t p = 0; p < idx.size(); ++p)
    for (std::size_t q = p + 1; q < idx.size(); ++q)
      if (!is_zero(inner(w.gram, a.hyperplanes()[idx[p]].normal, a.hyperplanes()[idx[q]].normal)))
        comp[root(p)] = root(q);
  std::map<std::size_t, LineSet> groups;
  for (std::size_t p = 0; p < idx.size(); ++p) {
    auto [it, fresh] = groups.try_emplace(root(p), LineSet(lines.size()));
    it->second.set(idx[p]);
  }
  std::vector<std::size_t> out;
  for (const auto& [r, g] : groups) out.push_back(c.span_of(g));
  std::sort(out.begin(), out.end());
  return out;
}

BuildingSet::BuildingSet(std::shared_ptr<const Closure> closure, std::vector<bool> irreducible)
    : closure_(std::move(closure)), irreducible_(std::move(irreducible)) {
  position_.assign(closure_->size(), -1);
  LineSet all(closure_->arrangement().size());
  for (std::size_t i = 0; i < closure_->size(); ++i) {
    all |= closure_->lines(i);
    if (!irreducible_[i]) continue;
    position_[i] = static_cast<int>(members_.size());
    members_.push_back(i);
  }
  rank_ = closure_->rank_of(all);
}

std::vector<Subspace> BuildingSet::elements() const {
  std::vector<Subspace> out;
  for (auto m : members_) out.push_back(closure_->element(m));
  return out;
}

std::optional<std::size_t> BuildingSet::find(const Subspace& s) const {
  auto c = closure_->find(s);
  if (!c) return std::nullopt;
  return from_closure(*c);
}

std::optional<std::size_t> BuildingSet::from_closure(std::size_t c) const {
  if (position_.at(c) < 0) return std::nullopt;
  return static_cast<std::size_t>(position_[c]);
}

BuildingSet minimal_building_set(const Arrangement& a, const ReflectionGroupData* w, const Caps& caps) {
  auto closure = std::make_shared<Closure>(Closure::build(a, caps));
  const Closure& c = *closure;
  std::vector<bool> irreducible(c.size());
  const bool cross_check = w != nullptr && w->rank <= 4;
  for (std::size_t u = 0; u < c.size(); ++u) {
    auto parts = w ? root_components(u, c, *w) : decompose_index(u, c, caps);
    irreducible[u] = parts.size() == 1;
    if (cross_check && decompose_index(u, c, caps) != parts)
      throw ConsistencyError("root-system and bipartition decompositions disagree on " +
                             c.element(u).to_string());
  }
  for (std::size_t u = 0; u < c.size(); ++u) {
    auto parts = w ? root_components(u, c, *w) : decompose_index(u, c, caps);
    std::size_t dim = 0;
    Subspace total(a.dim());
    for (auto p : parts) {
      if (!irreducible[p]) throw ConsistencyError("decomposition part is reducible");
      dim += c.element(p).dim();
      total = total + c.element(p);
    }
    if (dim != c.element(u).dim() || !(total == c.element(u)))
      throw ConsistencyError("element of the closure is not the direct sum of its parts");
  }
  BuildingSet f(closure, std::move(irreducible));
  if (f.size() > caps.max_building) throw CapExceeded("max_building", caps.max_building);
  return f;
}

namespace {

std::size_t member_index(const Subspace& s, const BuildingSet& f) {
  if (auto i = f.find(s)) return *i;
  throw InvalidInput("subspace " + s.to_string() + " is not in the building set");
}

// Antichains through x: extend by members of s after position `start` that
// are incomparable with everything chosen so far.
bool antichain_ok(const NestedSet& s, std::size_t start, std::vector<std::size_t>& chosen, std::size_t sum,
                  const BuildingSet& f) {
  const Closure& c = f.closure();
  for (std::size_t k = start; k < s.size(); ++k) {
    const std::size_t y = s[k];
    bool free = true;
    for (auto z : chosen)
      if (f.comparable(y, z)) {
        free = false;
        break;
      }
    if (!free) continue;
    const std::size_t next = c.sum(sum, f.closure_index(y));
    if (f.from_closure(next)) return false;
    chosen.push_back(y);
    bool ok = antichain_ok(s, k + 1, chosen, next, f);
    chosen.pop_back();
    if (!ok) return false;
  }
  return true;
}

}  // namespace

bool can_extend(const NestedSet& s, std::size_t x, const BuildingSet& f) {
  std::vector<std::size_t> chosen{x};
  return antichain_ok(s, 0, chosen, f.closure_index(x), f);
}

bool is_nested(const NestedSet& s, const BuildingSet& f) {
  NestedSet sorted = s;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidInput("nested set has a repeated member");
  for (auto x : sorted)
    if (x >= f.size()) throw InvalidInput("building set index out of range");
  NestedSet prefix;
  for (auto x : sorted) {
    if (!can_extend(prefix, x, f)) return false;
    prefix.push_back(x);
  }
  return true;
}

bool is_nested(const std::vector<Subspace>& s, const BuildingSet& f) {
  NestedSet idx;
  for (const auto& u : s) idx.push_back(member_index(u, f));
  return is_nested(idx, f);
}

namespace {

void order_canonically(std::vector<NestedSet>& sets) {
  std::stable_sort(sets.begin(), sets.end(),
                   [](const NestedSet& a, const NestedSet& b) { return a.size() < b.size(); });
}

}  // namespace

std::vector<NestedSet> enumerate_nested_sets(const BuildingSet& f, std::optional<std::size_t> max_cardinality,
                                             const Caps& caps) {
  std::vector<NestedSet> out;
  NestedSet current;
  const std::size_t limit = max_cardinality.value_or(f.size());
  std::function<void(std::size_t)> dfs = [&](std::size_t start) {
    if (out.size() >= caps.max_nested) throw CapExceeded("max_nested", caps.max_nested);
    out.push_back(current);
    if (current.size() >= limit) return;
    for (std::size_t x = start; x < f.size(); ++x) {
      if (!can_extend(current, x, f)) continue;
      current.push_back(x);
      dfs(x + 1);
      current.pop_back();
    }
  };
  dfs(0);
  order_canonically(out);
  return out;
}

std::vector<NestedSet> maximal_nested_sets(const BuildingSet& f, const Caps& caps) {
  std::vector<NestedSet> out;
  std::size_t visited = 0;
  NestedSet current;
  std::function<void(std::size_t)> dfs = [&](std::size_t start) {
    if (++visited > caps.max_nested) throw CapExceeded("max_nested", caps.max_nested);
    bool extendable = false;
    for (std::size_t x = 0; x < f.size(); ++x) {
      if (std::binary_search(current.begin(), current.end(), x) || !can_extend(current, x, f)) continue;
      extendable = true;
      if (x < start) continue;
      current.push_back(x);
      dfs(x + 1);
      current.pop_back();
    }
    if (!extendable) out.push_back(current);
  };
  dfs(0);
  order_canonically(out);
  return out;
}

}  // namespace nestbraid
