#ifndef HOMSOL_STRUCTURE_HPP
#define HOMSOL_STRUCTURE_HPP

#include <vector>

#include "homsol/lie_algebra.hpp"

namespace homsol {

/// Canonical basis of Der(L) = {A : A[x,y] = [Ax,y] + [x,Ay]}.
std::vector<QMat> derivation_space(const LieAlgebra& L);

/// Defect of the derivation identity for A, max-abs over basis pairs.
Rat derivation_defect(const LieAlgebra& L, const QMat& A);

/// Solvable radical via the Cartan criterion: the B-orthogonal complement
/// of [L, L].
Subspace solvable_radical(const LieAlgebra& L);

/// Maximal nilpotent ideal. Computed inside rad(L) as the radical of the
/// trace form on the associative algebra generated by ad(rad(L)); the result
/// is verified to be a nilpotent ideal containing [L, rad(L)].
Subspace nilradical(const LieAlgebra& L);

/// Kernel of X -> tr(ad X); equals L iff L is unimodular.
Subspace unimodular_kernel(const LieAlgebra& L);

bool is_unimodular(const LieAlgebra& L);

struct SubspaceInfo {
  bool is_subalgebra = false;
  bool is_ideal = false;
  bool is_nilpotent = false;   // meaningful only when is_subalgebra
  bool is_abelian = false;
  Subspace center;             // {x in V : [x, V] = 0}
  Subspace derived;            // span [V, V]
};
SubspaceInfo subalgebra_queries(const LieAlgebra& L, const Subspace& V);

/// Center of the whole algebra, {x : [x, L] = 0}.
Subspace center(const LieAlgebra& L);

/// Wang's gap: no isometry group of an n-manifold (n != 4) has a closed
/// subgroup of dimension d with n(n-1)/2 + 1 < d < n(n+1)/2.
bool wang_gap_admissible(int n, int d);

}  // namespace homsol

#endif
