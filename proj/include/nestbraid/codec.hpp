#pragma once

#include <string>
#include <vector>

#include "nestbraid/subspace.hpp"

namespace nestbraid {

/// Subset I of {1..n}, |I| >= 2, sorted; stands for the span of the roots
/// e_i - e_j (i, j in I) of S_n in the coordinates of build_group(A, n-1).
struct SnLabel {
  std::vector<int> elements;
  friend bool operator==(const SnLabel&, const SnLabel&) = default;
  friend auto operator<=>(const SnLabel&, const SnLabel&) = default;
};

Subspace sn_decode(const SnLabel& label, int n);
/// Throws InvalidInput when the subspace is not irreducible.
SnLabel sn_encode(const Subspace& s, int n);
/// Pairwise disjoint or included.
bool sn_labels_nested(const std::vector<SnLabel>& labels);
std::string to_string(const SnLabel& label);

/// Irreducible subspace of D_n.
///  strong: elements = {i1 < ... < ik}, k >= 3, printed {0,i1,...,ik}; the
///          span of e_i1, ..., e_ik.
///  weak:   elements = {i1, e2*i2, ..., ek*ik}, |i1| < ... < |ik|, i1 > 0,
///          k >= 2; the span of e_i1 - e_j*e_ij.
struct DnLabel {
  bool strong = false;
  std::vector<int> elements;
  friend bool operator==(const DnLabel&, const DnLabel&) = default;
  friend auto operator<=>(const DnLabel&, const DnLabel&) = default;
};

Subspace dn_decode(const DnLabel& label, int n);
DnLabel dn_encode(const Subspace& s, int n);
/// Label-level nestedness:
///  - strong labels form a chain;
///  - at most one pair {i,j}, {i,-j} occurs, and every other label B then
///    satisfies B & {i,j} = {} or {0,i,j} strictly inside B (weights
///    forgotten);
///  - any two labels outside such pairs are disjoint or included (weights
///    forgotten, 0 counted for strong labels), and included weak labels
///    have equal weights up to a global sign on the smaller one.
bool dn_labels_nested(const std::vector<DnLabel>& labels);
std::string to_string(const DnLabel& label);

}  // namespace nestbraid
