#ifndef HOMSOL_METRIC_HPP
#define HOMSOL_METRIC_HPP

#include <string>
#include <vector>

#include "homsol/lie_algebra.hpp"
#include "homsol/structure.hpp"

namespace homsol {

/// Metric reductive decomposition g = k + h + n with an inner product on
/// p = h + n given as a Gram matrix in the declared basis (h columns first).
/// Bases are kept in declared order; Subspace views are derived on demand.
struct MRD {
  LieAlgebra g;
  QMat k_basis;  // g.dim x dk
  QMat h_basis;  // g.dim x dh
  QMat n_basis;  // g.dim x dn
  QMat gram;     // (dh+dn) x (dh+dn), block diagonal across the h/n split
  Tolerance tol;

  int dk() const { return k_basis.cols(); }
  int dh() const { return h_basis.cols(); }
  int dn() const { return n_basis.cols(); }
  int dp() const { return dh() + dn(); }

  QMat p_basis() const;              // [h | n]
  QMat gram_h() const { return gram.block(0, 0, dh(), dh()); }
  QMat gram_n() const { return gram.block(dh(), dh(), dn(), dn()); }
  Subspace k_space() const;
  Subspace h_space() const;
  Subspace n_space() const;
  Subspace u_space() const;          // k + h
};

/// Checks every MRD invariant; throws std::invalid_argument with the first
/// violated one. check_nilradical=false skips the (expensive) n = nilradical
/// cross-check.
void validate_mrd(const MRD& mrd, bool check_nilradical = true);

/// Metric adjoint A^t = G^{-1} A^T G, the unique map with <Ax,y> = <x,A^t y>.
QMat metric_transpose(const QMat& a, const QMat& gram);

/// S(A) = (A + A^t)/2 with the metric transpose.
QMat metric_symmetrize(const QMat& a, const QMat& gram);

/// Ricci operator of a reductive decomposition (L, k, p) with Gram matrix
/// `gram` on the span of the p_basis columns, in Gram-contracted form (no
/// orthonormalization). Returns the operator matrix in the p basis.
QMat ricci_reductive(const LieAlgebra& L, const QMat& k_basis, const QMat& p_basis, const QMat& gram);

enum class RicciPart { full_p, u_part, n_part };

/// Ricci operator of the MRD: on p, on U/K (u = k+h with gram|h), or of the
/// metric nilpotent algebra (n, gram|n).
QMat ricci_operator(const MRD& mrd, RicciPart part);

/// Mean curvature vector: unique H in p with <H,X> = tr ad X for all X in p,
/// in g coordinates. Throws if tr ad Z != 0 for some Z in k.
QVec mean_curvature(const MRD& mrd);

/// theta(y) = ad(y)|_n as a matrix in the n basis; y in g coordinates.
/// Throws if [y, n] does not stay in n.
QMat theta_matrix(const MRD& mrd, const QVec& y);

/// theta on the declared h basis.
std::vector<QMat> theta_on_h(const MRD& mrd);

/// Symmetric operator C_theta on h: <C Y, Y> = tr S(ad Y|_n)^2.
QMat c_theta(const MRD& mrd);

/// Gram-contracted sum over h of [theta(Y_i), theta(Y_i)^t]; zero iff
/// Zero exactly when compatibility condition (iv) holds. Matrix on n.
QMat compatibility_defect(const MRD& mrd);

/// Moment map m(theta) = compatibility defect / |theta|^2, with
/// |theta|^2 = Gram-contracted sum of tr theta(Y_i) theta(Y_j)^t. Throws when
/// theta = 0 on h.
QMat moment_map(const std::vector<QMat>& theta_h, const QMat& gram_h, const QMat& gram_n);
QMat moment_map(const MRD& mrd);

/// |theta|^2 as used by the moment map.
Rat theta_norm_squared(const std::vector<QMat>& theta_h, const QMat& gram_h, const QMat& gram_n);

}  // namespace homsol

#endif
