#include "homsol/structure.hpp"

#include <stdexcept>

namespace homsol {

namespace {

// vec(A) with A_{kl} at index k*d + l (row-major).
QVec vectorize(const QMat& a) {
  QVec v;
  v.reserve(a.rows() * a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) v.push_back(a(i, j));
  return v;
}

QMat unvectorize(const QVec& v, int d) {
  QMat a(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a(i, j) = v[i * d + j];
  return a;
}

// Closes a set of matrices under multiplication (span-wise).
std::vector<QMat> associative_closure(const std::vector<QMat>& gens, int d) {
  std::vector<QMat> basis;
  std::vector<QVec> rows;  // vectorized basis for rank checks
  auto try_add = [&](const QMat& m) {
    rows.push_back(vectorize(m));
    QMat test(static_cast<int>(rows.size()), d * d);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (int j = 0; j < d * d; ++j) test(static_cast<int>(i), j) = rows[i][j];
    if (rank(test) == static_cast<int>(rows.size())) {
      basis.push_back(m);
      return true;
    }
    rows.pop_back();
    return false;
  };
  for (const QMat& g : gens) try_add(g);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (static_cast<int>(basis.size()) == d * d) return basis;
      try_add(basis[i] * basis[j]);
    }
  return basis;
}

bool matrix_is_nilpotent(const QMat& m) {
  QMat p = m;
  for (int k = 1; k < m.rows(); ++k) p = p * m;
  return m.rows() == 0 || p.is_zero();
}

}  // namespace

std::vector<QMat> derivation_space(const LieAlgebra& L) {
  int d = L.dim();
  if (d == 0) return {};
  // Unknown vec(A); one block of d equations per basis pair i < j:
  //   A [e_i,e_j] - [A e_i, e_j] - [e_i, A e_j] = 0.
  int npairs = d * (d - 1) / 2;
  QMat sys(npairs * d, d * d);
  int row0 = 0;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      const QVec& cij = L.bracket_basis(i, j);
      for (int m = 0; m < d; ++m) {
        // (A c_ij)_m = sum_k c_ij^k A_{mk}
        for (int k = 0; k < d; ++k)
          if (cij[k] != 0) sys(row0 + m, m * d + k) += cij[k];
        // [A e_i, e_j]_m = sum_k A_{ki} c_kj^m
        for (int k = 0; k < d; ++k) {
          const Rat& ckj = L.c(k, j, m);
          if (ckj != 0) sys(row0 + m, k * d + i) -= ckj;
        }
        // [e_i, A e_j]_m = sum_k A_{kj} c_ik^m
        for (int k = 0; k < d; ++k) {
          const Rat& cik = L.c(i, k, m);
          if (cik != 0) sys(row0 + m, k * d + j) -= cik;
        }
      }
      row0 += d;
    }
  std::vector<QMat> out;
  for (const QVec& v : kernel_basis(sys)) out.push_back(unvectorize(v, d));
  return out;
}

Rat derivation_defect(const LieAlgebra& L, const QMat& A) {
  int d = L.dim();
  if (A.rows() != d || A.cols() != d) throw std::invalid_argument("derivation_defect: size mismatch");
  Rat worst(0);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      QVec lhs = A * L.bracket_basis(i, j);
      QVec ei = A.column(i), ej = A.column(j);
      QVec ei_full(d, Rat(0)), ej_full(d, Rat(0));
      ei_full[i] = 1;
      ej_full[j] = 1;
      QVec rhs = L.bracket(ei, ej_full) + L.bracket(ei_full, ej);
      Rat m = max_abs(lhs - rhs);
      if (m > worst) worst = m;
    }
  return worst;
}

Subspace solvable_radical(const LieAlgebra& L) {
  QMat B = killing_form(L);
  Subspace derived = bracket_space(L, Subspace::full(L.dim()), Subspace::full(L.dim()));
  if (derived.dim() == 0) return Subspace::full(L.dim());
  // rows: x -> B(x, w) for each basis vector w of [L, L]
  QMat sys(derived.dim(), L.dim());
  for (int r = 0; r < derived.dim(); ++r) {
    QVec w = B * derived.basis_vector(r);
    for (int j = 0; j < L.dim(); ++j) sys(r, j) = w[j];
  }
  Subspace rad = Subspace::span(L.dim(), kernel_basis(sys));
  if (!rad.contains(bracket_space(L, Subspace::full(L.dim()), rad)))
    throw std::logic_error("solvable_radical: result is not an ideal");
  return rad;
}

Subspace nilradical(const LieAlgebra& L) {
  Subspace rad = solvable_radical(L);
  if (rad.dim() == 0) return rad;
  std::vector<QMat> gens;
  for (int i = 0; i < rad.dim(); ++i) gens.push_back(L.ad(rad.basis_vector(i)));
  std::vector<QMat> assoc = associative_closure(gens, L.dim());
  // x in rad with tr(ad x . a) = 0 for every a in the associative algebra
  QMat sys(static_cast<int>(assoc.size()), rad.dim());
  for (std::size_t r = 0; r < assoc.size(); ++r)
    for (int j = 0; j < rad.dim(); ++j)
      sys(static_cast<int>(r), j) = (L.ad(rad.basis_vector(j)) * assoc[r]).trace();
  std::vector<QVec> coeffs = kernel_basis(sys);
  std::vector<QVec> vecs;
  for (const QVec& c : coeffs) {
    QVec v(L.dim(), Rat(0));
    for (int j = 0; j < rad.dim(); ++j)
      if (c[j] != 0) v = v + c[j] * rad.basis_vector(j);
    vecs.push_back(std::move(v));
  }
  Subspace nil = Subspace::span(L.dim(), vecs);
  // postconditions: ideal, ad-nilpotent elements, contains [L, rad]
  if (!nil.contains(bracket_space(L, Subspace::full(L.dim()), nil)))
    throw std::logic_error("nilradical: result is not an ideal");
  for (int j = 0; j < nil.dim(); ++j)
    if (!matrix_is_nilpotent(L.ad(nil.basis_vector(j))))
      throw std::logic_error("nilradical: element with non-nilpotent ad");
  if (!nil.contains(bracket_space(L, Subspace::full(L.dim()), rad)))
    throw std::logic_error("nilradical: does not contain [L, rad]");
  return nil;
}

Subspace unimodular_kernel(const LieAlgebra& L) {
  QMat sys(1, L.dim());
  for (int j = 0; j < L.dim(); ++j) sys(0, j) = L.ad_basis(j).trace();
  return Subspace::span(L.dim(), kernel_basis(sys));
}

bool is_unimodular(const LieAlgebra& L) { return unimodular_kernel(L).dim() == L.dim(); }

SubspaceInfo subalgebra_queries(const LieAlgebra& L, const Subspace& V) {
  if (V.ambient_dim() != L.dim()) throw std::invalid_argument("subspace of wrong ambient dimension");
  SubspaceInfo info;
  info.derived = bracket_space(L, V, V);
  info.is_subalgebra = V.contains(info.derived);
  info.is_ideal = V.contains(bracket_space(L, Subspace::full(L.dim()), V));
  info.is_abelian = info.derived.dim() == 0;
  if (info.is_subalgebra && V.dim() > 0)
    info.is_nilpotent = is_nilpotent(restrict_to_subalgebra(L, V));
  else
    info.is_nilpotent = V.dim() == 0;
  // center of V: x in V with [x, v] = 0 for every basis v of V
  if (V.dim() > 0) {
    QMat sys(L.dim() * V.dim(), V.dim());
    for (int b = 0; b < V.dim(); ++b) {
      for (int j = 0; j < V.dim(); ++j) {
        QVec w = L.bracket(V.basis_vector(j), V.basis_vector(b));
        for (int m = 0; m < L.dim(); ++m) sys(b * L.dim() + m, j) = w[m];
      }
    }
    std::vector<QVec> vecs;
    for (const QVec& c : kernel_basis(sys)) {
      QVec v(L.dim(), Rat(0));
      for (int j = 0; j < V.dim(); ++j)
        if (c[j] != 0) v = v + c[j] * V.basis_vector(j);
      vecs.push_back(std::move(v));
    }
    info.center = Subspace::span(L.dim(), vecs);
  } else {
    info.center = Subspace(L.dim());
  }
  return info;
}

Subspace center(const LieAlgebra& L) { return subalgebra_queries(L, Subspace::full(L.dim())).center; }

bool wang_gap_admissible(int n, int d) {
  if (n < 1) throw std::invalid_argument("wang_gap_admissible requires n >= 1");
  if (n == 4) return true;
  long lo = static_cast<long>(n) * (n - 1) / 2 + 1;
  long hi = static_cast<long>(n) * (n + 1) / 2;
  return !(lo < d && d < hi);
}

}  // namespace homsol
