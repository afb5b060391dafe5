#pragma once

#include <string>
#include <vector>

#include "nestbraid/matrix.hpp"

namespace nestbraid {

/// Linear subspace of Q^n in canonical form: its basis is the nonzero rows of
/// the reduced row-echelon form of any spanning set, so two subspaces are
/// equal exactly when their representations are.
class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace of Q^ambient_dim.
  explicit Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim), basis_(0, ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, const std::vector<VectorQ>& vectors);
  static Subspace whole(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.rows(); }
  const MatrixQ& basis() const { return basis_; }
  std::vector<VectorQ> basis_vectors() const { return basis_.row_vectors(); }

  bool contains(const VectorQ& v) const;
  bool contains(const Subspace& other) const;
  /// Membership of a vector over a cyclotomic field in the extension of
  /// scalars of this (rational) subspace.
  bool contains(const VectorCyc& v) const;

  Subspace operator+(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  /// {x : v . x = 0 for all v} under the standard dot product.
  Subspace annihilator() const;
  /// {x : v^T G x = 0 for all v}.
  Subspace orthogonal(const MatrixQ& gram) const;
  /// g applied to every vector.
  Subspace image(const MatrixQ& g) const;

  /// Coordinates of v in the canonical basis; v must lie in the subspace.
  VectorQ coordinates(const VectorQ& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
  }
  /// Canonical order: dimension first, then lexicographic on basis entries.
  friend bool operator<(const Subspace& a, const Subspace& b);

  std::string to_string() const;

 private:
  std::size_t ambient_dim_ = 0;
  MatrixQ basis_;
};

}  // namespace nestbraid
