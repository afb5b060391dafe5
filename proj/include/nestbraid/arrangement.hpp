#pragma once

#include <cstddef>
#include <vector>

#include "nestbraid/subspace.hpp"

namespace nestbraid {

/// Central hyperplane {x : n^T G x = 0} stored by its normal n, scaled to a
/// primitive integer vector with positive leading entry so equal hyperplanes
/// have equal representations.
struct Hyperplane {
  VectorQ normal;

  friend bool operator==(const Hyperplane& a, const Hyperplane& b) { return a.normal == b.normal; }
};

/// Central arrangement in Q^dim with a positive definite Gram matrix that
/// identifies V with its dual. Hyperplanes are deduplicated and sorted.
class Arrangement {
 public:
  Arrangement() = default;

  /// Canonicalizes and deduplicates the normals. An empty gram means the
  /// identity. Throws InvalidInput on zero normals or dimension mismatch.
  static Arrangement from_normals(std::size_t dim, const std::vector<VectorQ>& normals,
                                  MatrixQ gram = {});

  std::size_t dim() const { return dim_; }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  std::size_t size() const { return hyperplanes_.size(); }
  const MatrixQ& gram() const { return gram_; }
  bool essential() const { return essential_; }

  /// Span of the i-th normal: the line dual to hyperplane i.
  Subspace dual_line(std::size_t i) const;
  /// Intersection of all hyperplanes.
  Subspace common_intersection() const;
  /// Index of the hyperplane with this normal (any nonzero multiple), or -1.
  int index_of(const VectorQ& normal) const;

  /// Quotient by the common intersection, realized on the span of the
  /// normals with coordinates in its canonical basis.
  Arrangement essentialize() const;

  friend bool operator==(const Arrangement& a, const Arrangement& b) {
    return a.dim_ == b.dim_ && a.hyperplanes_ == b.hyperplanes_ && a.gram_ == b.gram_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<Hyperplane> hyperplanes_;
  MatrixQ gram_;
  bool essential_ = false;
};

/// Bilinear form of the arrangement's Gram matrix.
Rational inner(const MatrixQ& gram, const VectorQ& a, const VectorQ& b);

}  // namespace nestbraid
