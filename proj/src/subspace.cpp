#include "nestbraid/subspace.hpp"

#include <sstream>

namespace nestbraid {

namespace {

MatrixQ nonzero_rows(const RrefResult<Rational>& r) {
  MatrixQ out(r.rank, r.reduced.cols());
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = r.reduced(i, j);
  return out;
}

}  // namespace

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<VectorQ>& vectors) {
  for (const auto& v : vectors)
    if (v.size() != ambient_dim) throw InvalidInput("vector length does not match ambient dimension");
  Subspace s(ambient_dim);
  if (!vectors.empty()) s.basis_ = nonzero_rows(rref(MatrixQ::from_rows(vectors, ambient_dim)));
  return s;
}

Subspace Subspace::whole(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  s.basis_ = MatrixQ::identity(ambient_dim);
  return s;
}

bool Subspace::contains(const VectorQ& v) const {
  if (v.size() != ambient_dim_) throw InvalidInput("vector length does not match ambient dimension");
  // Reduce v against the echelon rows; pivots are the leading ones.
  VectorQ r = v;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    std::size_t p = 0;
    while (is_zero(basis_(i, p))) ++p;
    if (is_zero(r[p])) continue;
    Rational f = r[p];
    for (std::size_t j = p; j < ambient_dim_; ++j) r[j] -= f * basis_(i, j);
  }
  for (const auto& x : r)
    if (!is_zero(x)) return false;
  return true;
}

bool Subspace::contains(const VectorCyc& v) const {
  if (v.size() != ambient_dim_) throw InvalidInput("vector length does not match ambient dimension");
  for (const auto& a : annihilator().basis_vectors()) {
    Cyclotomic s;
    for (std::size_t j = 0; j < ambient_dim_; ++j)
      if (!is_zero(a[j])) s += Cyclotomic(a[j]) * v[j];
    if (!s.is_zero()) return false;
  }
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.dim() > dim()) return false;
  for (std::size_t i = 0; i < other.basis_.rows(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Subspace Subspace::operator+(const Subspace& other) const {
  auto rows = basis_vectors();
  for (auto& r : other.basis_vectors()) rows.push_back(std::move(r));
  return span(ambient_dim_, rows);
}

Subspace Subspace::intersect(const Subspace& other) const {
  return (annihilator() + other.annihilator()).annihilator();
}

Subspace Subspace::annihilator() const {
  if (dim() == 0) return whole(ambient_dim_);
  return span(ambient_dim_, kernel(basis_));
}

Subspace Subspace::orthogonal(const MatrixQ& gram) const {
  if (dim() == 0) return whole(ambient_dim_);
  return span(ambient_dim_, kernel(basis_ * gram));
}

Subspace Subspace::image(const MatrixQ& g) const {
  std::vector<VectorQ> rows;
  for (std::size_t i = 0; i < basis_.rows(); ++i) rows.push_back(g * basis_.row(i));
  return span(ambient_dim_, rows);
}

VectorQ Subspace::coordinates(const VectorQ& v) const {
  if (!contains(v)) throw InvalidInput("vector is not in the subspace");
  // In RREF the coordinate on row i is the entry of v at that row's pivot.
  VectorQ c;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    std::size_t p = 0;
    while (is_zero(basis_(i, p))) ++p;
    c.push_back(v[p]);
  }
  return c;
}

bool operator<(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim_ != b.ambient_dim_) return a.ambient_dim_ < b.ambient_dim_;
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  const auto& x = a.basis_.data();
  const auto& y = b.basis_.data();
  for (std::size_t i = 0; i < x.size(); ++i) {
    int c = cmp(x[i], y[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string Subspace::to_string() const {
  std::ostringstream out;
  out << "span" << nestbraid::to_string(basis_);
  return out.str();
}

}  // namespace nestbraid
