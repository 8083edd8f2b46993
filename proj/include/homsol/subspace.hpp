#ifndef HOMSOL_SUBSPACE_HPP
#define HOMSOL_SUBSPACE_HPP

#include <vector>

#include "homsol/matrix.hpp"

namespace homsol {

/// Linear subspace of Q^n, stored in reduced column echelon form with
/// smallest-index pivots, so equality of subspaces is equality of bases.
class Subspace {
 public:
  Subspace() : ambient_(0) {}
  explicit Subspace(int ambient_dim) : ambient_(ambient_dim), basis_(ambient_dim, 0) {}

  /// Span of the given column vectors (dependent columns are dropped).
  static Subspace span(int ambient_dim, const std::vector<QVec>& vectors);
  static Subspace full(int ambient_dim);

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.cols(); }
  const QMat& basis() const { return basis_; }
  QVec basis_vector(int j) const { return basis_.column(j); }

  bool contains(const QVec& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in this basis; throws if v is outside the subspace.
  QVec coordinates(const QVec& v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  int ambient_;
  QMat basis_;  // ambient_ x dim, canonical
};

}  // namespace homsol

#endif
