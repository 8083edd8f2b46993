#include "homsol/subspace.hpp"

#include <stdexcept>

namespace homsol {

Subspace Subspace::span(int ambient_dim, const std::vector<QVec>& vectors) {
  Subspace s(ambient_dim);
  if (vectors.empty()) return s;
  // RREF of the row matrix; nonzero rows transposed back give the canonical
  // column echelon basis.
  QMat rowsm(static_cast<int>(vectors.size()), ambient_dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (static_cast<int>(vectors[i].size()) != ambient_dim)
      throw std::invalid_argument("span: vector of wrong ambient dimension");
    for (int j = 0; j < ambient_dim; ++j) rowsm(static_cast<int>(i), j) = vectors[i][j];
  }
  std::vector<int> pivots = rref(rowsm);
  QMat basis(ambient_dim, static_cast<int>(pivots.size()));
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (int j = 0; j < ambient_dim; ++j) basis(j, static_cast<int>(r)) = rowsm(static_cast<int>(r), j);
  s.basis_ = basis;
  return s;
}

Subspace Subspace::full(int ambient_dim) {
  Subspace s(ambient_dim);
  s.basis_ = QMat::identity(ambient_dim);
  return s;
}

bool Subspace::contains(const QVec& v) const {
  if (static_cast<int>(v.size()) != ambient_) return false;
  if (max_abs(v) == 0) return true;
  LinearSolution sol = solve_linear(basis_, v);
  return sol.feasible;
}

bool Subspace::contains(const Subspace& other) const {
  for (int j = 0; j < other.dim(); ++j)
    if (!contains(other.basis_vector(j))) return false;
  return true;
}

QVec Subspace::coordinates(const QVec& v) const {
  LinearSolution sol = solve_linear(basis_, v);
  if (!sol.feasible) throw std::invalid_argument("vector not in subspace");
  return sol.particular;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("ambient mismatch");
  std::vector<QVec> vecs;
  for (int j = 0; j < dim(); ++j) vecs.push_back(basis_vector(j));
  for (int j = 0; j < other.dim(); ++j) vecs.push_back(other.basis_vector(j));
  return span(ambient_, vecs);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("ambient mismatch");
  // kernel of [A | -B]: coefficient pairs with A x = B y
  QMat m(ambient_, dim() + other.dim());
  m.set_block(0, 0, basis_);
  m.set_block(0, dim(), -other.basis_);
  std::vector<QVec> vecs;
  for (const QVec& k : kernel_basis(m)) {
    QVec x(k.begin(), k.begin() + dim());
    QVec v(ambient_, Rat(0));
    for (int j = 0; j < dim(); ++j)
      if (x[j] != 0) v = v + x[j] * basis_vector(j);
    vecs.push_back(std::move(v));
  }
  return span(ambient_, vecs);
}

}  // namespace homsol
