#include "nestbraid/matrix.hpp"

#include <sstream>

namespace nestbraid {

MatrixCyc to_cyclotomic(const MatrixQ& m) {
  MatrixCyc out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Cyclotomic(m(i, j));
  return out;
}

std::vector<VectorCyc> eigenspace(const MatrixQ& m, int order, int exponent) {
  if (m.rows() != m.cols()) throw InvalidInput("eigenspace of non-square matrix");
  MatrixCyc shifted = to_cyclotomic(m);
  // Embed everything into Q(zeta_order) up front so the kernel is computed
  // in a single field.
  const Cyclotomic zeta = Cyclotomic::root_of_unity(order, exponent);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) shifted(i, j) = shifted(i, j).embed(order);
    shifted(i, i) -= zeta;
  }
  return kernel(shifted);
}

std::string to_string(const MatrixQ& m) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? ", " : "") << to_string(m(i, j));
    out << "]";
  }
  out << "]";
  return out.str();
}

}  // namespace nestbraid
