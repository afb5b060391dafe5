#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nestbraid/arrangement.hpp"
#include "nestbraid/caps.hpp"

namespace nestbraid {

enum class CoxeterType { A, B, D, G2 };

CoxeterType parse_coxeter_type(const std::string& label);
std::string type_name(CoxeterType type);

/// Permutation of the full root list: perm[i] is the index of g(root i).
using RootPermutation = std::vector<int>;

/// Element of W. Both representations are kept; equality is matrix equality.
struct GroupElement {
  MatrixQ matrix;
  RootPermutation perm;

  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.matrix == b.matrix; }
};

/// Root datum, Coxeter presentation and invariant data of a finite Coxeter
/// group of type A, B, D or G2 realized over Q.
///
/// Coordinates:
///  - A_r acts on the sum-zero subspace of Q^(r+1) written in the basis
///    e_i - e_(r+1), i = 1..r. The root e_i - e_j has coordinates
///    u_i - u_j (u_(r+1) = 0) and the Gram matrix is I + J.
///  - B_n, D_n use the standard basis of Q^n with Gram I.
///  - G2 lives in the sum-zero plane of Q^3 with the same basis and Gram
///    matrix as A_2.
/// D_n simple generators follow the order s1, s1', s2, ..., s(n-1) with
/// roots e2 - e1, e1 + e2, e3 - e2, ..., en - e(n-1); s2 is the branch node.
struct ReflectionGroupData {
  CoxeterType type = CoxeterType::A;
  int rank = 0;
  MatrixQ gram;
  /// Positive roots first (sorted by height, then lexicographically), then
  /// their negatives in the same order: roots[i + N] = -roots[i].
  std::vector<VectorQ> roots;
  std::size_t positive_count = 0;
  std::vector<VectorQ> simple_roots;
  std::vector<int> simple_root_index;
  std::vector<std::vector<int>> coxeter_matrix;
  std::vector<int> degrees;
  std::vector<MatrixQ> generators;
  std::vector<RootPermutation> generator_perms;
  std::vector<std::string> generator_names;
  std::uint64_t group_order = 0;
  Arrangement arrangement;
  /// For each positive root, the index of its hyperplane in `arrangement`.
  std::vector<int> hyperplane_of_root;
  /// Inverse of the matrix whose columns are the simple roots.
  MatrixQ simple_basis_inverse;

  std::string label() const;
  std::vector<VectorQ> positive_roots() const {
    return {roots.begin(), roots.begin() + static_cast<std::ptrdiff_t>(positive_count)};
  }
  int root_index(const VectorQ& v) const;
  bool is_positive(int root) const { return root < static_cast<int>(positive_count); }
  int negate(int root) const {
    return root < static_cast<int>(positive_count) ? root + static_cast<int>(positive_count)
                                                   : root - static_cast<int>(positive_count);
  }
  /// Coefficients of v in the simple-root basis.
  VectorQ simple_coordinates(const VectorQ& v) const;
};

/// Builds the essential reflection arrangement and its group data.
/// Supported: A (1..7), B (2..6), D (4..6), G2 (2). Degrees are embedded and
/// checked against the group order and the order of the Coxeter element.
std::pair<Arrangement, ReflectionGroupData> build_reflection_arrangement(CoxeterType type, int rank);
ReflectionGroupData build_group(CoxeterType type, int rank);

/// Reflection data for an arbitrary simple system (used for parabolic
/// subgroups and tests); degrees are left empty.
ReflectionGroupData group_from_simple_roots(const std::vector<VectorQ>& simple_roots,
                                            const MatrixQ& gram);

GroupElement identity_element(const ReflectionGroupData& w);
GroupElement multiply(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const ReflectionGroupData& w, const GroupElement& g);
GroupElement element_from_perm(const ReflectionGroupData& w, const RootPermutation& perm);
GroupElement generator_element(const ReflectionGroupData& w, int i);
RootPermutation compose(const RootPermutation& a, const RootPermutation& b);
/// Multiplicative order of g.
int element_order(const GroupElement& g);
/// The Coxeter element: product of the simple generators in index order.
GroupElement coxeter_element(const ReflectionGroupData& w);

/// All elements of W by closure of the generators (BFS order from the
/// identity). Throws CapExceeded when the group order exceeds the cap.
std::vector<GroupElement> enumerate_group(const ReflectionGroupData& w, const Caps& caps = {});

enum class StabilizerMode { Setwise, Pointwise };

std::vector<GroupElement> stabilizer_of_subspace(const ReflectionGroupData& w, const Subspace& s,
                                                 StabilizerMode mode, const Caps& caps = {});
/// Distinct images w.S, sorted canonically.
std::vector<Subspace> orbit_on_subspaces(const ReflectionGroupData& w, const Subspace& s,
                                         const Caps& caps = {});

/// Elements commuting with every generator, by exhaustive scan.
std::vector<GroupElement> brute_force_center(const ReflectionGroupData& w, const Caps& caps = {});

}  // namespace nestbraid
