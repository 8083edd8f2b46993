#include "homsol/metric.hpp"

#include <stdexcept>

namespace homsol {

namespace {

std::vector<QVec> columns_of(const QMat& m) {
  std::vector<QVec> cols;
  for (int j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  return cols;
}

// Adapted basis [k | p] with its inverse, for projecting brackets onto p.
struct Projector {
  QMat full;      // g.dim x g.dim
  QMat full_inv;  // g.dim x g.dim
  int dk;

  QVec project_p(const QVec& v) const {
    QVec c = full_inv * v;
    return QVec(c.begin() + dk, c.end());
  }
};

Projector make_projector(const QMat& k_basis, const QMat& p_basis) {
  int n = p_basis.rows();
  QMat full(n, n);
  if (k_basis.cols() + p_basis.cols() != n)
    throw std::invalid_argument("k and p do not span the algebra");
  full.set_block(0, 0, k_basis);
  full.set_block(0, k_basis.cols(), p_basis);
  auto inv = inverse(full);
  if (!inv) throw std::invalid_argument("k + p bases are linearly dependent");
  return Projector{full, *inv, k_basis.cols()};
}

}  // namespace

QMat MRD::p_basis() const {
  QMat p(g.dim(), dp());
  p.set_block(0, 0, h_basis);
  p.set_block(0, dh(), n_basis);
  return p;
}

Subspace MRD::k_space() const { return Subspace::span(g.dim(), columns_of(k_basis)); }
Subspace MRD::h_space() const { return Subspace::span(g.dim(), columns_of(h_basis)); }
Subspace MRD::n_space() const { return Subspace::span(g.dim(), columns_of(n_basis)); }
Subspace MRD::u_space() const { return k_space().sum(h_space()); }

void validate_mrd(const MRD& mrd, bool check_nilradical) {
  const LieAlgebra& g = mrd.g;
  if (mrd.dk() + mrd.dp() != g.dim()) throw std::invalid_argument("MRD: dimensions of k, h, n do not add up to dim g");
  Subspace k = mrd.k_space(), h = mrd.h_space(), n = mrd.n_space();
  if (k.dim() != mrd.dk() || h.dim() != mrd.dh() || n.dim() != mrd.dn())
    throw std::invalid_argument("MRD: a declared basis is linearly dependent");
  if (k.sum(h).sum(n).dim() != g.dim()) throw std::invalid_argument("MRD: k + h + n is not all of g");
  if (jacobi_defect(g) != 0) throw std::invalid_argument("MRD: structure constants violate the Jacobi identity");

  Subspace full = Subspace::full(g.dim());
  if (!k.contains(bracket_space(g, k, k))) throw std::invalid_argument("MRD: [k,k] not contained in k");
  if (!h.contains(bracket_space(g, k, h))) throw std::invalid_argument("MRD: [k,h] not contained in h");
  if (!n.contains(bracket_space(g, full, n))) throw std::invalid_argument("MRD: [g,n] not contained in n");

  QMat B = killing_form(g);
  QMat p = mrd.p_basis();
  for (int i = 0; i < mrd.dk(); ++i) {
    QVec bk = B * mrd.k_basis.column(i);
    for (int j = 0; j < mrd.dp(); ++j) {
      Rat v(0);
      QVec pj = p.column(j);
      for (int m = 0; m < g.dim(); ++m) v += bk[m] * pj[m];
      if (v != 0) throw std::invalid_argument("MRD: B(k, p) != 0");
    }
  }

  if (mrd.gram.rows() != mrd.dp() || mrd.gram.cols() != mrd.dp())
    throw std::invalid_argument("MRD: gram matrix has wrong size");
  if (!mrd.gram.is_symmetric()) throw std::invalid_argument("MRD: gram matrix not symmetric");
  if (!is_positive_definite(mrd.gram)) throw std::invalid_argument("MRD: gram matrix not positive definite");
  if (mrd.gram.block(0, mrd.dh(), mrd.dh(), mrd.dn()).max_abs_entry() != 0)
    throw std::invalid_argument("MRD: gram(h, n) != 0");

  if (check_nilradical && n != nilradical(g))
    throw std::invalid_argument("MRD: declared n is not the nilradical");

  // ad Z|_p must be gram-skew for Z in k
  Projector proj = make_projector(mrd.k_basis, p);
  for (int i = 0; i < mrd.dk(); ++i) {
    QMat adz(mrd.dp(), mrd.dp());
    QVec z = mrd.k_basis.column(i);
    for (int j = 0; j < mrd.dp(); ++j) adz.set_column(j, proj.project_p(g.bracket(z, p.column(j))));
    if ((metric_transpose(adz, mrd.gram) + adz).max_abs_entry() != 0)
      throw std::invalid_argument("MRD: ad(k)|_p is not gram-skew");
  }
}

QMat metric_transpose(const QMat& a, const QMat& gram) {
  auto ginv = inverse(gram);
  if (!ginv) throw std::invalid_argument("metric_transpose: singular gram matrix");
  return *ginv * a.transpose() * gram;
}

QMat metric_symmetrize(const QMat& a, const QMat& gram) {
  return Rat(1, 2) * (a + metric_transpose(a, gram));
}

QMat ricci_reductive(const LieAlgebra& L, const QMat& k_basis, const QMat& p_basis, const QMat& gram) {
  int dp = p_basis.cols();
  if (dp == 0) return QMat(0, 0);
  auto ginv_opt = inverse(gram);
  if (!ginv_opt) throw std::invalid_argument("ricci_reductive: singular gram matrix");
  const QMat ginv = *ginv_opt;
  Projector proj = make_projector(k_basis, p_basis);

  // br[a][b] = [e_a, e_b] projected to p (coordinates in the p basis)
  std::vector<std::vector<QVec>> br(dp, std::vector<QVec>(dp));
  for (int a = 0; a < dp; ++a)
    for (int b = 0; b < dp; ++b) br[a][b] = proj.project_p(L.bracket(p_basis.column(a), p_basis.column(b)));

  QMat B = killing_form(L);
  QMat Bp(dp, dp);
  for (int a = 0; a < dp; ++a)
    for (int b = 0; b < dp; ++b) {
      QVec bv = B * p_basis.column(a);
      Rat s(0);
      QVec pb = p_basis.column(b);
      for (int m = 0; m < L.dim(); ++m) s += bv[m] * pb[m];
      Bp(a, b) = s;
    }

  // mean curvature coordinates: G H = (tr ad e_a)_a
  QVec t(dp);
  for (int a = 0; a < dp; ++a) t[a] = L.ad(p_basis.column(a)).trace();
  QVec hcoord = ginv * t;

  auto ip = [&](const QVec& x, const QVec& y) {
    Rat s(0);
    QVec gy = gram * y;
    for (int m = 0; m < dp; ++m) s += x[m] * gy[m];
    return s;
  };

  // V_x[a][b] = <[e_a,e_b]_p, e_x>
  std::vector<QMat> V(dp, QMat(dp, dp));
  for (int a = 0; a < dp; ++a)
    for (int b = 0; b < dp; ++b) {
      QVec gb = gram * br[a][b];
      for (int x = 0; x < dp; ++x) V[x](a, b) = gb[x];
    }

  QMat R(dp, dp);
  for (int x = 0; x < dp; ++x)
    for (int y = x; y < dp; ++y) {
      Rat term1(0);
      for (int a = 0; a < dp; ++a)
        for (int b = 0; b < dp; ++b)
          if (ginv(a, b) != 0) term1 += ginv(a, b) * ip(br[x][a], br[y][b]);
      Rat term3(0);
      QMat U = ginv * V[x] * ginv.transpose();
      for (int c = 0; c < dp; ++c)
        for (int e = 0; e < dp; ++e)
          if (U(c, e) != 0) term3 += U(c, e) * V[y](c, e);
      // [H, e_x]_p via the precomputed basis brackets
      QVec bhx(dp, Rat(0)), bhy(dp, Rat(0));
      for (int a = 0; a < dp; ++a) {
        if (hcoord[a] == 0) continue;
        bhx = bhx + hcoord[a] * br[a][x];
        bhy = bhy + hcoord[a] * br[a][y];
      }
      QVec ex(dp, Rat(0)), ey(dp, Rat(0));
      ex[x] = 1;
      ey[y] = 1;
      Rat term4 = ip(bhx, ey) + ip(bhy, ex);
      Rat val = Rat(-1, 2) * term1 - Rat(1, 2) * Bp(x, y) + Rat(1, 4) * term3 - Rat(1, 2) * term4;
      R(x, y) = val;
      R(y, x) = val;
    }
  return ginv * R;
}

QMat ricci_operator(const MRD& mrd, RicciPart part) {
  switch (part) {
    case RicciPart::full_p:
      return ricci_reductive(mrd.g, mrd.k_basis, mrd.p_basis(), mrd.gram);
    case RicciPart::u_part: {
      if (mrd.dh() == 0) return QMat(0, 0);
      Subspace u = mrd.u_space();
      LieAlgebra lu = restrict_to_subalgebra(mrd.g, u);
      QMat ku(u.dim(), mrd.dk());
      for (int j = 0; j < mrd.dk(); ++j) ku.set_column(j, u.coordinates(mrd.k_basis.column(j)));
      QMat hu(u.dim(), mrd.dh());
      for (int j = 0; j < mrd.dh(); ++j) hu.set_column(j, u.coordinates(mrd.h_basis.column(j)));
      return ricci_reductive(lu, ku, hu, mrd.gram_h());
    }
    case RicciPart::n_part: {
      if (mrd.dn() == 0) return QMat(0, 0);
      Subspace n = mrd.n_space();
      LieAlgebra ln = restrict_to_subalgebra(mrd.g, n);
      QMat nn(n.dim(), mrd.dn());
      for (int j = 0; j < mrd.dn(); ++j) nn.set_column(j, n.coordinates(mrd.n_basis.column(j)));
      return ricci_reductive(ln, QMat(n.dim(), 0), nn, mrd.gram_n());
    }
  }
  throw std::logic_error("unreachable");
}

QVec mean_curvature(const MRD& mrd) {
  for (int i = 0; i < mrd.dk(); ++i) {
    if (mrd.g.ad(mrd.k_basis.column(i)).trace() != 0)
      throw std::invalid_argument("mean_curvature: tr ad Z != 0 on k (inconsistent with compact isotropy)");
  }
  QMat p = mrd.p_basis();
  QVec t(mrd.dp());
  for (int a = 0; a < mrd.dp(); ++a) t[a] = mrd.g.ad(p.column(a)).trace();
  auto ginv = inverse(mrd.gram);
  QVec hc = *ginv * t;
  QVec h(mrd.g.dim(), Rat(0));
  for (int a = 0; a < mrd.dp(); ++a)
    if (hc[a] != 0) h = h + hc[a] * p.column(a);
  return h;
}

QMat theta_matrix(const MRD& mrd, const QVec& y) {
  Subspace n = mrd.n_space();
  QMat th(mrd.dn(), mrd.dn());
  for (int j = 0; j < mrd.dn(); ++j) {
    QVec w = mrd.g.bracket(y, mrd.n_basis.column(j));
    if (!n.contains(w)) throw std::invalid_argument("theta_matrix: [y, n] leaves n");
    LinearSolution sol = solve_linear(mrd.n_basis, w);
    th.set_column(j, sol.particular);
  }
  return th;
}

std::vector<QMat> theta_on_h(const MRD& mrd) {
  std::vector<QMat> out;
  for (int i = 0; i < mrd.dh(); ++i) out.push_back(theta_matrix(mrd, mrd.h_basis.column(i)));
  return out;
}

QMat c_theta(const MRD& mrd) {
  int dh = mrd.dh();
  if (dh == 0) return QMat(0, 0);
  QMat gram_n = mrd.gram_n();
  std::vector<QMat> th = theta_on_h(mrd);
  std::vector<QMat> sth;
  for (const QMat& t : th) sth.push_back(metric_symmetrize(t, gram_n));
  // bilinear form <C Y_i, Y_j> = tr S(theta Y_i) S(theta Y_j)
  QMat C(dh, dh);
  for (int i = 0; i < dh; ++i)
    for (int j = i; j < dh; ++j) {
      Rat v = (sth[i] * sth[j]).trace();
      C(i, j) = v;
      C(j, i) = v;
    }
  return *inverse(mrd.gram_h()) * C;
}

QMat compatibility_defect(const MRD& mrd) {
  int dn = mrd.dn();
  QMat defect(dn, dn);
  if (mrd.dh() == 0 || dn == 0) return defect;
  QMat gram_n = mrd.gram_n();
  QMat ginv_h = *inverse(mrd.gram_h());
  std::vector<QMat> th = theta_on_h(mrd);
  std::vector<QMat> tht;
  for (const QMat& t : th) tht.push_back(metric_transpose(t, gram_n));
  for (int i = 0; i < mrd.dh(); ++i)
    for (int j = 0; j < mrd.dh(); ++j) {
      if (ginv_h(i, j) == 0) continue;
      defect = defect + ginv_h(i, j) * (th[i] * tht[j] - tht[j] * th[i]);
    }
  return defect;
}

Rat theta_norm_squared(const std::vector<QMat>& theta_h, const QMat& gram_h, const QMat& gram_n) {
  QMat ginv_h = *inverse(gram_h);
  Rat s(0);
  for (std::size_t i = 0; i < theta_h.size(); ++i)
    for (std::size_t j = 0; j < theta_h.size(); ++j) {
      const Rat& w = ginv_h(static_cast<int>(i), static_cast<int>(j));
      if (w == 0) continue;
      s += w * (theta_h[i] * metric_transpose(theta_h[j], gram_n)).trace();
    }
  return s;
}

QMat moment_map(const std::vector<QMat>& theta_h, const QMat& gram_h, const QMat& gram_n) {
  Rat norm2 = theta_norm_squared(theta_h, gram_h, gram_n);
  if (norm2 == 0) throw std::invalid_argument("moment_map: theta = 0, |theta|^2 vanishes");
  QMat ginv_h = *inverse(gram_h);
  int dn = gram_n.rows();
  QMat defect(dn, dn);
  for (std::size_t i = 0; i < theta_h.size(); ++i)
    for (std::size_t j = 0; j < theta_h.size(); ++j) {
      const Rat& w = ginv_h(static_cast<int>(i), static_cast<int>(j));
      if (w == 0) continue;
      QMat tjt = metric_transpose(theta_h[j], gram_n);
      defect = defect + w * (theta_h[i] * tjt - tjt * theta_h[i]);
    }
  return Rat(1) / norm2 * defect;
}

QMat moment_map(const MRD& mrd) { return moment_map(theta_on_h(mrd), mrd.gram_h(), mrd.gram_n()); }

}  // namespace homsol
