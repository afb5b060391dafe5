#include "nestbraid/arrangement.hpp"

#include <algorithm>

namespace nestbraid {

namespace {

bool lex_less(const VectorQ& a, const VectorQ& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

void check_gram(const MatrixQ& gram, std::size_t dim) {
  if (gram.rows() != dim || gram.cols() != dim) throw InvalidInput("gram matrix has wrong shape");
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (gram(i, j) != gram(j, i)) throw InvalidInput("gram matrix is not symmetric");
  // Sylvester: all leading principal minors positive.
  for (std::size_t k = 1; k <= dim; ++k) {
    MatrixQ lead(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead(i, j) = gram(i, j);
    // Determinant via elimination.
    Rational det = 1;
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t p = c;
      while (p < k && is_zero(lead(p, c))) ++p;
      if (p == k) throw InvalidInput("gram matrix is not positive definite");
      if (p != c) {
        lead.swap_rows(p, c);
        det = -det;
      }
      det *= lead(c, c);
      for (std::size_t i = c + 1; i < k; ++i) {
        Rational f = lead(i, c) / lead(c, c);
        for (std::size_t j = c; j < k; ++j) lead(i, j) -= f * lead(c, j);
      }
    }
    if (sgn(det) <= 0) throw InvalidInput("gram matrix is not positive definite");
  }
}

}  // namespace

Rational inner(const MatrixQ& gram, const VectorQ& a, const VectorQ& b) {
  return dot(a, gram * b);
}

Arrangement Arrangement::from_normals(std::size_t dim, const std::vector<VectorQ>& normals,
                                      MatrixQ gram) {
  Arrangement a;
  a.dim_ = dim;
  if (gram.rows() == 0) gram = MatrixQ::identity(dim);
  check_gram(gram, dim);
  a.gram_ = std::move(gram);
  std::vector<VectorQ> canon;
  for (const auto& n : normals) {
    if (n.size() != dim) throw InvalidInput("normal length does not match dimension");
    auto p = primitive_integer(n);
    if (std::all_of(p.begin(), p.end(), [](const Rational& x) { return is_zero(x); }))
      throw InvalidInput("zero normal vector");
    canon.push_back(std::move(p));
  }
  std::sort(canon.begin(), canon.end(), lex_less);
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  for (auto& n : canon) a.hyperplanes_.push_back(Hyperplane{std::move(n)});
  std::vector<VectorQ> rows;
  for (const auto& h : a.hyperplanes_) rows.push_back(h.normal);
  a.essential_ = Subspace::span(dim, rows).dim() == dim;
  return a;
}

Subspace Arrangement::dual_line(std::size_t i) const {
  return Subspace::span(dim_, {hyperplanes_.at(i).normal});
}

Subspace Arrangement::common_intersection() const {
  std::vector<VectorQ> rows;
  for (const auto& h : hyperplanes_) rows.push_back(h.normal);
  return Subspace::span(dim_, rows).orthogonal(gram_);
}

int Arrangement::index_of(const VectorQ& normal) const {
  auto p = primitive_integer(normal);
  for (std::size_t i = 0; i < hyperplanes_.size(); ++i)
    if (hyperplanes_[i].normal == p) return static_cast<int>(i);
  return -1;
}

Arrangement Arrangement::essentialize() const {
  std::vector<VectorQ> rows;
  for (const auto& h : hyperplanes_) rows.push_back(h.normal);
  Subspace span = Subspace::span(dim_, rows);
  const MatrixQ& basis = span.basis();
  MatrixQ gram = basis * gram_ * basis.transpose();
  std::vector<VectorQ> normals;
  for (const auto& h : hyperplanes_) normals.push_back(span.coordinates(h.normal));
  return from_normals(span.dim(), normals, gram);
}

}  // namespace nestbraid
