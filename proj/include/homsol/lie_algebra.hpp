#ifndef HOMSOL_LIE_ALGEBRA_HPP
#define HOMSOL_LIE_ALGEBRA_HPP

#include <string>
#include <vector>

#include "homsol/matrix.hpp"
#include "homsol/subspace.hpp"

namespace homsol {

/// Real Lie algebra given by antisymmetric structure constants over Q.
/// c[i][j][k] is the coefficient of e_k in [e_i, e_j]. Immutable after
/// construction.
class LieAlgebra {
 public:
  LieAlgebra() : dim_(0) {}
  /// brackets: list of (i, j, coefficient vector of [e_i,e_j]); the (j, i)
  /// entries are filled in by antisymmetry. Jacobi is NOT checked here, use
  /// jacobi_defect.
  LieAlgebra(int dim, std::vector<std::string> basis_names,
             const std::vector<std::tuple<int, int, QVec>>& brackets);

  int dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return names_; }

  /// [e_i, e_j] as a coordinate vector.
  const QVec& bracket_basis(int i, int j) const { return table_[i * dim_ + j]; }
  QVec bracket(const QVec& x, const QVec& y) const;

  /// Matrix of ad(x): y -> [x, y].
  QMat ad(const QVec& x) const;
  QMat ad_basis(int i) const;

  /// Structure constant c[i][j][k].
  const Rat& c(int i, int j, int k) const { return table_[i * dim_ + j][k]; }

 private:
  int dim_;
  std::vector<std::string> names_;
  std::vector<QVec> table_;  // dim*dim entries, each a dim-vector
};

/// Max absolute coefficient of the cyclic Jacobi sum over all basis triples;
/// zero exactly when the structure constants define a Lie algebra.
Rat jacobi_defect(const LieAlgebra& L);

/// B(e_i, e_j) = tr(ad e_i  ad e_j).
QMat killing_form(const LieAlgebra& L);

/// Block direct sum; each summand becomes an ideal.
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// Structure constants of a subalgebra in the coordinates of V's basis;
/// throws if V is not closed under the bracket.
LieAlgebra restrict_to_subalgebra(const LieAlgebra& L, const Subspace& V);

/// Span of [V, W].
Subspace bracket_space(const LieAlgebra& L, const Subspace& V, const Subspace& W);

bool is_solvable(const LieAlgebra& L);
bool is_nilpotent(const LieAlgebra& L);

}  // namespace homsol

#endif
