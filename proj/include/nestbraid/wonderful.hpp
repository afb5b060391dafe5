#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nestbraid/building.hpp"
#include "nestbraid/io.hpp"

namespace nestbraid {

/// Boundary stratum D_T of the minimal model, one per nested set T.
struct Stratum {
  NestedSet nested_set;
  std::size_t codim = 0;
  std::string id;
};

/// Strata in nested-set order (the open stratum first) and the covering
/// relations T < T + {F}, as index pairs (coarser, finer).
struct Stratification {
  std::vector<Stratum> strata;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::size_t> count_by_codim() const;
};

Stratification stratification(const BuildingSet& f, const Caps& caps = {});

/// Optional printable label of a building-set member (e.g. a codec label).
using MemberLabel = std::function<std::string(std::size_t)>;
Json strata_to_json(const Stratification& s, const BuildingSet& f, const MemberLabel& label = {});
std::string strata_to_dot(const Stratification& s, const BuildingSet& f, const MemberLabel& label = {});

/// Orthogonals F^perp of the members, by increasing dimension and then
/// canonically; starts with the origin. Throws InvalidInput if V is not a
/// member.
std::vector<Subspace> blowup_sequence(const BuildingSet& f);

/// A point of the model: x in V and a chain of members F_1 > F_2 > ... with
/// a line l_i in each F_i. F_1 is the greatest member orthogonal to x and
/// F_(i+1) the greatest member orthogonal to x, l_1, ..., l_i; dually F_i^perp
/// is the smallest blow-up center containing x, l_1, ..., l_(i-1). The
/// chain ends when no member qualifies, so a generic x has an empty chain.
struct PointEncoding {
  VectorQ x;
  std::vector<std::size_t> flats;
  std::vector<VectorCyc> lines;
};

/// Builds the chain from x and the supplied lines. Throws InvalidInput when
/// the greatest member is not unique, a line is zero or outside its F_i, or
/// the number of lines does not match the chain.
PointEncoding normalize_point_encoding(const VectorQ& x, const std::vector<VectorCyc>& lines, const BuildingSet& f);

Json to_json(const PointEncoding& p, const BuildingSet& f);
/// {"x": [...], "lines": [[...], ...]}; entries as in cyclotomic_from_json.
std::pair<VectorQ, std::vector<VectorCyc>> point_from_json(const Json& doc);

/// w maps v to a multiple of v; on success the factor is stored.
bool maps_to_multiple(const MatrixQ& w, const VectorCyc& v, Cyclotomic* factor = nullptr);
/// w restricted to s is a scalar (checked on the canonical basis with one
/// common ratio); on success the scalar is stored.
bool is_scalar_on(const MatrixQ& w, const Subspace& s, Rational* scalar = nullptr);

struct StabilizerReport {
  std::vector<GroupElement> elements;
  std::size_t order = 0;
  /// Every element is a scalar on the last F_i (vacuous for a bare x).
  bool is_cyclic_scalar = true;
};

/// stab x intersected with the setwise stabilizers of the l_i.
StabilizerReport stabilizer_of_point(const PointEncoding& p, const BuildingSet& f, const ReflectionGroupData& w,
                                     const Caps& caps = {});

struct RegularReport {
  bool regular = false;
  int order = 1;
  /// The eigenvalue exp(2 pi i exponent / order) with a regular eigenvector.
  int exponent = 0;
  VectorCyc witness;
};

/// Regular in the sense of an eigenvector off every reflecting hyperplane.
/// Eigenspaces for every power of a primitive order(w)-th root are tried;
/// the witness is sum t^k b_k over an eigenbasis for the first t = 1, 2, ...
/// avoiding all hyperplanes.
RegularReport is_regular_element(const GroupElement& g, const ReflectionGroupData& w);

struct SpringerReport {
  bool generic = false;
  /// Elements of W_A mapping l into itself.
  std::vector<GroupElement> stabilizer;
  /// Elements of W_A acting as a scalar on A.
  std::size_t scalar_subgroup_order = 0;
  /// Brute-force centre of W_A.
  std::size_t center_order = 0;
  bool stabilizer_is_center = false;
  /// Order of the scalar by which a generator of the stabilizer acts on A
  /// when generic (the m of eps_m); 1 for a trivial stabilizer.
  int scalar_order = 1;
  bool smooth = false;
};

/// W_A: the pointwise stabilizer of the orthogonal of A.
std::vector<GroupElement> parabolic_subgroup(const Subspace& a, const ReflectionGroupData& w, const Caps& caps = {});

/// Requires A in F, l a nonzero vector of A off every hyperplane of W_A
/// (roots inside A); throws InvalidInput otherwise. Generic iff every
/// element of W_A stabilizing l is a scalar on A.
SpringerReport is_springer_generic(const Subspace& a, const VectorCyc& l, const BuildingSet& f,
                                   const ReflectionGroupData& w, const Caps& caps = {});

/// Small integer combinations of the basis of A, by increasing height, off
/// the hyperplanes of W_A and certified generic. Throws ConsistencyError if
/// none is found up to the height bound.
VectorQ find_springer_generic_line(const Subspace& a, const BuildingSet& f, const ReflectionGroupData& w,
                                   int max_height = 4, const Caps& caps = {});

/// A point of the orthogonal of A lying on exactly the hyperplanes of the
/// roots in A (the origin when A = V).
VectorQ generic_point_of_orthogonal(const Subspace& a, const BuildingSet& f, int max_height = 6);

}  // namespace nestbraid
