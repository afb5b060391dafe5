#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "nestbraid/arrangement.hpp"
#include "nestbraid/caps.hpp"
#include "nestbraid/reflection_group.hpp"

namespace nestbraid {

/// Bit i set: the line dual to hyperplane i lies in the subspace.
using LineSet = boost::dynamic_bitset<>;

/// C_A: the closure of the dual lines under sum, in canonical order.
/// Every element is spanned by the lines it contains, so its line set
/// determines it; inclusion of elements is inclusion of line sets.
class Closure {
 public:
  Closure() = default;
  static Closure build(const Arrangement& a, const Caps& caps = {});

  const Arrangement& arrangement() const { return arrangement_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Subspace>& elements() const { return elements_; }
  const Subspace& element(std::size_t i) const { return elements_.at(i); }
  const LineSet& lines(std::size_t i) const { return lines_.at(i); }
  std::optional<std::size_t> find(const Subspace& s) const;
  std::optional<std::size_t> find_lines(const LineSet& lines) const;
  /// Index of s; throws InvalidInput when s is not in C.
  std::size_t index_of(const Subspace& s) const;
  /// element(inner) is contained in element(outer).
  bool contains(std::size_t outer, std::size_t inner) const { return lines_[inner].is_subset_of(lines_[outer]); }
  /// Index of element(a) + element(b). Memoized and thread-safe.
  std::size_t sum(std::size_t a, std::size_t b) const;
  /// Index of the span of a nonempty set of lines.
  std::size_t span_of(const LineSet& lines) const;
  /// Dimension of the span of a set of lines.
  std::size_t rank_of(const LineSet& lines) const;

 private:
  struct SumCache;

  Arrangement arrangement_;
  std::vector<Subspace> elements_;
  std::vector<LineSet> lines_;
  std::map<Subspace, std::size_t> by_subspace_;
  std::unordered_map<LineSet, std::size_t> by_lines_;
  std::shared_ptr<SumCache> cache_;
};

/// Finest decomposition of U in C by exhaustive bipartition of the lines of
/// U: a split S1 | S2 is a decomposition exactly when rank S1 + rank S2 =
/// dim U. Parts are returned in canonical order; a single part means U is
/// irreducible. Throws InvalidInput when U is not in C and CapExceeded past
/// max_bipartition_lines.
std::vector<Subspace> decompose(const Subspace& u, const Closure& c, const Caps& caps = {});
std::vector<std::size_t> decompose_index(std::size_t u, const Closure& c, const Caps& caps = {});

/// Same decomposition through the root system: connected components of the
/// non-orthogonality graph on the roots lying in U.
std::vector<std::size_t> root_components(std::size_t u, const Closure& c, const ReflectionGroupData& w);

/// The building set of irreducibles, with the closure it was cut from.
class BuildingSet {
 public:
  BuildingSet() = default;
  BuildingSet(std::shared_ptr<const Closure> closure, std::vector<bool> irreducible);

  const Closure& closure() const { return *closure_; }
  std::size_t size() const { return members_.size(); }
  const Subspace& element(std::size_t i) const { return closure_->element(members_.at(i)); }
  std::vector<Subspace> elements() const;
  std::size_t closure_index(std::size_t i) const { return members_.at(i); }
  /// Per element of the closure.
  const std::vector<bool>& irreducible_flags() const { return irreducible_; }
  std::optional<std::size_t> find(const Subspace& s) const;
  /// Index in the building set of a closure element, if irreducible.
  std::optional<std::size_t> from_closure(std::size_t c) const;
  /// element(inner) is contained in element(outer).
  bool contains(std::size_t outer, std::size_t inner) const {
    return closure_->contains(members_[outer], members_[inner]);
  }
  bool comparable(std::size_t a, std::size_t b) const { return contains(a, b) || contains(b, a); }
  /// Dimension of the span of all lines.
  std::size_t rank() const { return rank_; }

 private:
  std::shared_ptr<const Closure> closure_;
  std::vector<bool> irreducible_;
  std::vector<std::size_t> members_;
  std::vector<int> position_;
  std::size_t rank_ = 0;
};

/// Irreducible elements of C. With group data the root route decides
/// irreducibility and, for rank <= 4, is cross-checked against decompose;
/// disagreement raises ConsistencyError. Every element of C is checked to
/// be the direct sum of its parts.
BuildingSet minimal_building_set(const Arrangement& a, const ReflectionGroupData* w = nullptr,
                                 const Caps& caps = {});

/// Sorted indices into a BuildingSet.
using NestedSet = std::vector<std::size_t>;

/// Every family of pairwise incomparable members of size >= 2 has its sum
/// outside the building set. Throws InvalidInput for non-members.
bool is_nested(const std::vector<Subspace>& s, const BuildingSet& f);
bool is_nested(const NestedSet& s, const BuildingSet& f);
/// For nested s and x not in s: whether s + {x} is nested. Only antichains
/// through x are examined.
bool can_extend(const NestedSet& s, std::size_t x, const BuildingSet& f);

/// All nested sets, the empty one included, ordered by size and then
/// lexicographically. Throws CapExceeded past max_nested.
std::vector<NestedSet> enumerate_nested_sets(const BuildingSet& f,
                                             std::optional<std::size_t> max_cardinality = std::nullopt,
                                             const Caps& caps = {});
/// Nested sets admitting no extension, in the same order.
std::vector<NestedSet> maximal_nested_sets(const BuildingSet& f, const Caps& caps = {});

}  // namespace nestbraid
