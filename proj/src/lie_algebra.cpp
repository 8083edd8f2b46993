#include "homsol/lie_algebra.hpp"

#include <stdexcept>
#include <tuple>

namespace homsol {

LieAlgebra::LieAlgebra(int dim, std::vector<std::string> basis_names,
                       const std::vector<std::tuple<int, int, QVec>>& brackets)
    : dim_(dim), names_(std::move(basis_names)), table_(dim * dim, QVec(dim, Rat(0))) {
  if (names_.empty()) {
    for (int i = 0; i < dim_; ++i) names_.push_back("e" + std::to_string(i + 1));
  }
  if (static_cast<int>(names_.size()) != dim_) throw std::invalid_argument("basis name count mismatch");
  for (const auto& [i, j, v] : brackets) {
    if (i < 0 || i >= dim_ || j < 0 || j >= dim_) throw std::invalid_argument("bracket index out of range");
    if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("bracket coefficient list of wrong length");
    if (i == j) {
      if (max_abs(v) != 0) throw std::invalid_argument("[x,x] must vanish");
      continue;
    }
    table_[i * dim_ + j] = v;
    table_[j * dim_ + i] = Rat(-1) * v;
  }
}

QVec LieAlgebra::bracket(const QVec& x, const QVec& y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
    throw std::invalid_argument("bracket: dimension mismatch");
  QVec r(dim_, Rat(0));
  for (int i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      Rat f = x[i] * y[j];
      const QVec& b = bracket_basis(i, j);
      for (int k = 0; k < dim_; ++k)
        if (b[k] != 0) r[k] += f * b[k];
    }
  }
  return r;
}

QMat LieAlgebra::ad(const QVec& x) const {
  QMat m(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    QVec ej(dim_, Rat(0));
    ej[j] = 1;
    m.set_column(j, bracket(x, ej));
  }
  return m;
}

QMat LieAlgebra::ad_basis(int i) const {
  QMat m(dim_, dim_);
  for (int j = 0; j < dim_; ++j) m.set_column(j, bracket_basis(i, j));
  return m;
}

Rat jacobi_defect(const LieAlgebra& L) {
  Rat worst(0);
  int n = L.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        QVec ei(n, Rat(0)), ej(n, Rat(0)), ek(n, Rat(0));
        ei[i] = ej[j] = ek[k] = 1;
        QVec s = L.bracket(L.bracket_basis(i, j), ek) + L.bracket(L.bracket_basis(j, k), ei) +
                 L.bracket(L.bracket_basis(k, i), ej);
        Rat m = max_abs(s);
        if (m > worst) worst = m;
      }
  return worst;
}

QMat killing_form(const LieAlgebra& L) {
  int n = L.dim();
  std::vector<QMat> ads;
  ads.reserve(n);
  for (int i = 0; i < n; ++i) ads.push_back(L.ad_basis(i));
  QMat B(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Rat t = (ads[i] * ads[j]).trace();
      B(i, j) = t;
      B(j, i) = t;
    }
  return B;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  int n = a.dim() + b.dim();
  std::vector<std::string> names;
  for (const auto& s : a.basis_names()) names.push_back(s + "'");
  for (const auto& s : b.basis_names()) names.push_back(s + "''");
  std::vector<std::tuple<int, int, QVec>> br;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i + 1; j < a.dim(); ++j) {
      QVec v(n, Rat(0));
      const QVec& w = a.bracket_basis(i, j);
      for (int k = 0; k < a.dim(); ++k) v[k] = w[k];
      br.emplace_back(i, j, v);
    }
  for (int i = 0; i < b.dim(); ++i)
    for (int j = i + 1; j < b.dim(); ++j) {
      QVec v(n, Rat(0));
      const QVec& w = b.bracket_basis(i, j);
      for (int k = 0; k < b.dim(); ++k) v[a.dim() + k] = w[k];
      br.emplace_back(a.dim() + i, a.dim() + j, v);
    }
  return LieAlgebra(n, names, br);
}

LieAlgebra restrict_to_subalgebra(const LieAlgebra& L, const Subspace& V) {
  int m = V.dim();
  std::vector<std::tuple<int, int, QVec>> br;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      QVec b = L.bracket(V.basis_vector(i), V.basis_vector(j));
      if (!V.contains(b)) throw std::invalid_argument("subspace is not a subalgebra");
      br.emplace_back(i, j, V.coordinates(b));
    }
  return LieAlgebra(m, {}, br);
}

Subspace bracket_space(const LieAlgebra& L, const Subspace& V, const Subspace& W) {
  std::vector<QVec> vecs;
  for (int i = 0; i < V.dim(); ++i)
    for (int j = 0; j < W.dim(); ++j) vecs.push_back(L.bracket(V.basis_vector(i), W.basis_vector(j)));
  return Subspace::span(L.dim(), vecs);
}

bool is_solvable(const LieAlgebra& L) {
  Subspace d = Subspace::full(L.dim());
  for (int it = 0; it <= L.dim(); ++it) {
    if (d.dim() == 0) return true;
    Subspace next = bracket_space(L, d, d);
    if (next == d) return false;
    d = next;
  }
  return d.dim() == 0;
}

bool is_nilpotent(const LieAlgebra& L) {
  Subspace c = Subspace::full(L.dim());
  Subspace full = c;
  for (int it = 0; it <= L.dim(); ++it) {
    if (c.dim() == 0) return true;
    Subspace next = bracket_space(L, full, c);
    if (next == c) return false;
    c = next;
  }
  return c.dim() == 0;
}

}  // namespace homsol
