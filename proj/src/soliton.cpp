#include "homsol/soliton.hpp"

#include <sstream>
#include <stdexcept>

namespace homsol {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::einstein: return "einstein";
    case Verdict::algebraic_soliton: return "algebraic_soliton";
    case Verdict::solvsoliton: return "solvsoliton";
    case Verdict::nilsoliton: return "nilsoliton";
    case Verdict::not_soliton: return "not_soliton";
  }
  return "?";
}

std::string to_string(SignClass s) {
  switch (s) {
    case SignClass::expanding: return "expanding";
    case SignClass::steady: return "steady";
    case SignClass::shrinking: return "shrinking";
  }
  return "?";
}

std::string to_string(CompactUVerdict v) {
  switch (v) {
    case CompactUVerdict::obstructed: return "obstructed";
    case CompactUVerdict::not_obstructed: return "not_obstructed";
    case CompactUVerdict::not_applicable: return "not_applicable";
  }
  return "?";
}

namespace {

SignClass sign_class_of(const Rat& c) {
  if (c < 0) return SignClass::expanding;
  if (c > 0) return SignClass::shrinking;
  return SignClass::steady;
}

std::vector<QVec> columns_of(const QMat& m) {
  std::vector<QVec> cols;
  for (int j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  return cols;
}

// Structure constants in the (possibly non-canonical) declared basis given by
// the columns of `basis`; throws if the span is not bracket-closed.
LieAlgebra restrict_declared(const LieAlgebra& L, const QMat& basis) {
  int m = basis.cols();
  Subspace V = Subspace::span(L.dim(), columns_of(basis));
  std::vector<std::tuple<int, int, QVec>> brackets;
  std::vector<std::string> names;
  for (int i = 0; i < m; ++i) names.push_back("b" + std::to_string(i));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      QVec w = L.bracket(basis.column(i), basis.column(j));
      if (!V.contains(w)) throw std::invalid_argument("restrict_declared: span not bracket-closed");
      brackets.emplace_back(i, j, solve_linear(basis, w).particular);
    }
  return LieAlgebra(m, names, brackets);
}

// Inner product on g in the adapted basis [k | p]: -B on k, gram on p.
QMat full_gram(const MRD& mrd, const QMat& bk_neg) {
  QMat G(mrd.g.dim(), mrd.g.dim());
  G.set_block(0, 0, bk_neg);
  G.set_block(mrd.dk(), mrd.dk(), mrd.gram);
  return G;
}

QMat neg_killing_on_k(const MRD& mrd) {
  QMat B = killing_form(mrd.g);
  int dk = mrd.dk();
  QMat bk(dk, dk);
  for (int i = 0; i < dk; ++i) {
    QVec bi = B * mrd.k_basis.column(i);
    for (int j = 0; j < dk; ++j) {
      Rat s(0);
      QVec kj = mrd.k_basis.column(j);
      for (int m = 0; m < mrd.g.dim(); ++m) s += bi[m] * kj[m];
      bk(i, j) = -s;
    }
  }
  return bk;
}

struct AssembledDerivation {
  QMat D_std;      // on g, standard basis
  QMat D_adapted;  // on g, adapted [k|p] basis
  QMat D_p;        // p block of D_adapted
};

AssembledDerivation assemble_derivation(const MRD& mrd, const QMat& D1) {
  int d = mrd.g.dim(), dk = mrd.dk(), dp = mrd.dp();
  QMat T(d, d);
  T.set_block(0, 0, mrd.k_basis);
  T.set_block(0, dk, mrd.p_basis());
  auto Tinv = inverse(T);
  if (!Tinv) throw std::invalid_argument("soliton_derivation: k, h, n bases are dependent");

  QMat bk = neg_killing_on_k(mrd);
  if (dk > 0 && !is_positive_definite(bk))
    throw std::invalid_argument("soliton_derivation: Killing form not negative definite on k");

  QVec H = mean_curvature(mrd);
  QMat adH = *Tinv * mrd.g.ad(H) * T;
  QMat S = metric_symmetrize(adH, full_gram(mrd, bk));

  QMat D = -S;
  QMat lower = D.block(dk + mrd.dh(), dk + mrd.dh(), mrd.dn(), mrd.dn()) + D1;
  D.set_block(dk + mrd.dh(), dk + mrd.dh(), lower);
  // only the n block survives outside -S(ad H); the k and h blocks of the
  // correction are zero by construction
  AssembledDerivation out;
  out.D_adapted = D;
  out.D_std = T * D * *Tinv;
  out.D_p = D.block(dk, dk, dp, dp);
  return out;
}

// vec(ric) = c vec(I) + sum_j t_j vec(D_j) over the derivation space of L.
struct FeasibleDerivation {
  bool feasible = false;
  Rat c = 0;
  QMat D;
};

FeasibleDerivation ric_derivation_solve(const LieAlgebra& L, const QMat& ric) {
  int d = L.dim();
  std::vector<QMat> ders = derivation_space(L);
  QMat A(d * d, 1 + static_cast<int>(ders.size()));
  QVec b(d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      int r = i * d + j;
      A(r, 0) = (i == j) ? 1 : 0;
      for (std::size_t m = 0; m < ders.size(); ++m) A(r, 1 + static_cast<int>(m)) = ders[m](i, j);
      b[r] = ric(i, j);
    }
  LinearSolution sol = solve_linear(A, b);
  FeasibleDerivation out;
  out.feasible = sol.feasible;
  if (!sol.feasible) return out;
  QVec x = sol.particular;
  // c is non-unique only when I is itself a derivation (abelian directions);
  // normalize such multiplicity to c = 0
  for (const QVec& nv : sol.nullspace)
    if (nv[0] != 0) {
      x = x - (x[0] / nv[0]) * nv;
      break;
    }
  out.c = x[0];
  out.D = QMat(d, d);
  for (std::size_t m = 0; m < ders.size(); ++m)
    if (x[1 + m] != 0) out.D = out.D + x[1 + m] * ders[m];
  return out;
}

SolitonCertificate solve_metric_algebra(const LieAlgebra& L, const QMat& gram, Verdict tag) {
  int d = L.dim();
  if (gram.rows() != d || gram.cols() != d) throw std::invalid_argument("gram matrix has wrong size");
  QMat ric = ricci_reductive(L, QMat(d, 0), QMat::identity(d), gram);
  FeasibleDerivation fd = ric_derivation_solve(L, ric);
  SolitonCertificate cert;
  cert.residuals["feasibility"] = fd.feasible ? 0 : 1;
  if (!fd.feasible) {
    cert.verdict = Verdict::not_soliton;
    return cert;
  }
  if ((ric - (QMat::diagonal(QVec(d, fd.c)) + fd.D)).max_abs_entry() != 0)
    throw std::logic_error("derivation solver returned an inconsistent solution");
  cert.c = fd.c;
  cert.sign_class = sign_class_of(fd.c);
  cert.D = fd.D;
  cert.verdict = fd.D.is_zero() ? Verdict::einstein : tag;
  return cert;
}

}  // namespace

SolitonCertificate check_algebraic_soliton(const MRD& mrd) {
  validate_mrd(mrd);
  if (mrd.dp() == 0) throw std::invalid_argument("check_algebraic_soliton: h = 0 and n = 0, nothing to certify");
  const LieAlgebra& g = mrd.g;
  SolitonCertificate cert;

  // (i) u = k + h is a reductive subalgebra
  Subspace u = mrd.u_space();
  bool u_closed = u.contains(bracket_space(g, u, u));
  bool u_reductive = false;
  if (u_closed && u.dim() > 0) {
    LieAlgebra uL = restrict_to_subalgebra(g, u);
    u_reductive = solvable_radical(uL) == center(uL);
  } else if (u.dim() == 0) {
    u_reductive = true;
  }
  cert.residuals["i"] = (u_closed && u_reductive) ? 0 : 1;
  if (!u_closed) {
    cert.verdict = Verdict::not_soliton;
    return cert;
  }

  // (ii) ric_u = cI + C_theta on h; c is forced by the trace when h != 0,
  // otherwise it comes out of the nilsoliton solver in (iii)
  QMat D1;
  if (mrd.dh() > 0) {
    QMat ric_u = ricci_operator(mrd, RicciPart::u_part);
    QMat M = ric_u - c_theta(mrd);
    cert.c = M.trace() / mrd.dh();
    cert.residuals["ii"] = (M - QMat::diagonal(QVec(mrd.dh(), cert.c))).max_abs_entry();

    // (iii) D1 = ric_n - cI is a derivation of n
    if (mrd.dn() > 0) {
      QMat ric_n = ricci_operator(mrd, RicciPart::n_part);
      D1 = ric_n - QMat::diagonal(QVec(mrd.dn(), cert.c));
      cert.residuals["iii"] = derivation_defect(restrict_declared(g, mrd.n_basis), D1);
    } else {
      D1 = QMat(0, 0);
      cert.residuals["iii"] = 0;
    }
  } else {
    cert.residuals["ii"] = 0;
    LieAlgebra nL = restrict_declared(g, mrd.n_basis);
    QMat ric_n = ricci_operator(mrd, RicciPart::n_part);
    FeasibleDerivation fd = ric_derivation_solve(nL, ric_n);
    if (!fd.feasible) {
      cert.residuals["iii"] = 1;
      cert.verdict = Verdict::not_soliton;
      return cert;
    }
    cert.c = fd.c;
    D1 = fd.D;
    cert.residuals["iii"] = 0;
  }
  cert.D1 = D1;
  cert.sign_class = sign_class_of(cert.c);

  // (iv)
  cert.residuals["iv"] = compatibility_defect(mrd).max_abs_entry();

  // (v) D = -S(ad H) + blockdiag(0,0,D1) is a derivation of g and the full
  // Ricci operator equals cI + D_p
  AssembledDerivation ad = assemble_derivation(mrd, D1);
  cert.D = ad.D_std;
  cert.residuals["v"] = derivation_defect(g, ad.D_std);
  QMat ric_full = ricci_operator(mrd, RicciPart::full_p);
  cert.residuals["v_ricci"] = (ric_full - QMat::diagonal(QVec(mrd.dp(), cert.c)) - ad.D_p).max_abs_entry();

  bool all_zero = true;
  for (const auto& [name, r] : cert.residuals)
    if (!mrd.tol.is_zero(r)) all_zero = false;
  if (!all_zero)
    cert.verdict = Verdict::not_soliton;
  else
    cert.verdict = ad.D_std.is_zero() ? Verdict::einstein : Verdict::algebraic_soliton;
  return cert;
}

SolitonCertificate check_solvsoliton(const LieAlgebra& L, const QMat& gram, Tolerance) {
  if (!is_solvable(L)) throw std::invalid_argument("check_solvsoliton: algebra is not solvable");
  return solve_metric_algebra(L, gram, Verdict::solvsoliton);
}

SolitonCertificate check_nilsoliton(const LieAlgebra& L, const QMat& gram, Tolerance) {
  if (!is_nilpotent(L)) throw std::invalid_argument("check_nilsoliton: algebra is not nilpotent");
  return solve_metric_algebra(L, gram, Verdict::nilsoliton);
}

QMat soliton_derivation(const MRD& mrd, const Rat&, const QMat& D1) {
  AssembledDerivation ad = assemble_derivation(mrd, D1);
  if (derivation_defect(mrd.g, ad.D_std) != 0)
    throw std::invalid_argument("soliton_derivation: assembled map is not a derivation");
  Subspace n = mrd.n_space();
  for (int j = 0; j < mrd.g.dim(); ++j) {
    QVec ej(mrd.g.dim(), Rat(0));
    ej[j] = 1;
    if (!n.contains(ad.D_std * ej))
      throw std::invalid_argument("soliton_derivation: image not contained in the nilradical");
  }
  return ad.D_std;
}

SolitonCertificate product_soliton_check(const MRD& a, const MRD& b) {
  auto einstein_constant = [](const MRD& f) {
    validate_mrd(f);
    QMat ric = ricci_operator(f, RicciPart::full_p);
    if (f.dp() == 0 || ric.is_zero())
      throw std::invalid_argument("product_soliton_check: flat factor; use the trivial-soliton path");
    Rat c = ric(0, 0);
    if (ric != QMat::diagonal(QVec(f.dp(), c)))
      throw std::invalid_argument("product_soliton_check: factor is not Einstein");
    return c;
  };
  Rat c1 = einstein_constant(a);
  Rat c2 = einstein_constant(b);

  int da = a.g.dim(), db = b.g.dim();
  auto embed = [&](const QMat& ma, const QMat& mb) {
    QMat out(da + db, ma.cols() + mb.cols());
    out.set_block(0, 0, ma);
    out.set_block(da, ma.cols(), mb);
    return out;
  };
  MRD prod;
  prod.g = direct_sum(a.g, b.g);
  prod.k_basis = embed(a.k_basis, b.k_basis);
  prod.h_basis = embed(a.h_basis, b.h_basis);
  prod.n_basis = embed(a.n_basis, b.n_basis);
  int dh = a.dh() + b.dh(), dn = a.dn() + b.dn();
  prod.gram = QMat(dh + dn, dh + dn);
  prod.gram.set_block(0, 0, a.gram_h());
  prod.gram.set_block(a.dh(), a.dh(), b.gram_h());
  prod.gram.set_block(dh, dh, a.gram_n());
  prod.gram.set_block(dh + a.dn(), dh + a.dn(), b.gram_n());
  prod.tol = a.tol;

  SolitonCertificate cert = check_algebraic_soliton(prod);
  if (cert.passed() != (c1 == c2))
    throw std::logic_error("product_soliton_check: certificate disagrees with the constant comparison");
  return cert;
}

Rat cartan_split_defect(const MRD& mrd, const CartanSplit& split) {
  const LieAlgebra& g = mrd.g;
  Subspace h = mrd.h_space();
  Subspace hm = Subspace::span(g.dim(), columns_of(split.h_minus));
  Subspace hp = Subspace::span(g.dim(), columns_of(split.h_plus));
  if (!h.contains(hm) || !h.contains(hp)) throw std::invalid_argument("cartan_split_defect: split not inside h");
  if (hm.dim() != split.h_minus.cols() || hp.dim() != split.h_plus.cols() ||
      hm.dim() + hp.dim() != mrd.dh() || hm.sum(hp).dim() != mrd.dh())
    throw std::invalid_argument("cartan_split_defect: h_minus + h_plus is not a direct sum equal to h");

  // <h_minus, h_plus> = 0 in the p inner product
  QMat p = mrd.p_basis();
  auto p_coords = [&](const QVec& v) { return solve_linear(p, v).particular; };
  for (int i = 0; i < split.h_minus.cols(); ++i)
    for (int j = 0; j < split.h_plus.cols(); ++j) {
      QVec x = p_coords(split.h_minus.column(i)), y = mrd.gram * p_coords(split.h_plus.column(j));
      Rat s(0);
      for (int m = 0; m < mrd.dp(); ++m) s += x[m] * y[m];
      if (s != 0) throw std::invalid_argument("cartan_split_defect: h_minus not orthogonal to h_plus");
    }

  Subspace kmax = mrd.k_space().sum(hm);
  if (!hp.contains(bracket_space(g, kmax, hp)))
    throw std::invalid_argument("cartan_split_defect: [k_max, h_plus] not contained in h_plus");
  if (!kmax.contains(bracket_space(g, hp, hp)))
    throw std::invalid_argument("cartan_split_defect: [h_plus, h_plus] not contained in k_max");

  QMat B = killing_form(g);
  auto b_restricted = [&](const Subspace& V) {
    QMat m(V.dim(), V.dim());
    for (int i = 0; i < V.dim(); ++i) {
      QVec bi = B * V.basis_vector(i);
      for (int j = 0; j < V.dim(); ++j) {
        Rat s(0);
        QVec vj = V.basis_vector(j);
        for (int r = 0; r < g.dim(); ++r) s += bi[r] * vj[r];
        m(i, j) = s;
      }
    }
    return m;
  };
  if (kmax.dim() > 0 && !is_negative_definite(b_restricted(kmax)))
    throw std::invalid_argument("cartan_split_defect: Killing form not negative definite on k_max");
  if (hp.dim() > 0 && !is_positive_definite(b_restricted(hp)))
    throw std::invalid_argument("cartan_split_defect: Killing form not positive definite on h_plus");

  QMat gram_n = mrd.gram_n();
  Rat defect(0);
  auto bump = [&](const Rat& v) {
    if (v > defect) defect = v;
  };
  for (int i = 0; i < split.h_minus.cols(); ++i) {
    QMat th = theta_matrix(mrd, split.h_minus.column(i));
    bump((metric_transpose(th, gram_n) + th).max_abs_entry());
  }
  for (int i = 0; i < split.h_plus.cols(); ++i) {
    QMat th = theta_matrix(mrd, split.h_plus.column(i));
    bump((metric_transpose(th, gram_n) - th).max_abs_entry());
  }
  return defect;
}

CompactUVerdict compact_u_obstruction(const MRD& mrd) {
  Subspace u = mrd.u_space();
  if (u.dim() == 0) return CompactUVerdict::not_obstructed;
  LieAlgebra uL = restrict_to_subalgebra(mrd.g, u);
  if (!is_negative_definite(killing_form(uL))) return CompactUVerdict::not_applicable;
  return mrd.dh() > 0 ? CompactUVerdict::obstructed : CompactUVerdict::not_obstructed;
}

MilnorScanReport milnor_sl2_scan(const std::vector<Rat>& as, const std::vector<Rat>& bs,
                                 const std::vector<Rat>& ds, const std::vector<Rat>& lambdas) {
  for (const Rat& a : as)
    if (a <= 0) throw std::invalid_argument("milnor_sl2_scan: a must be positive");
  for (const Rat& b : bs)
    if (b <= 0) throw std::invalid_argument("milnor_sl2_scan: b must be positive");
  for (const Rat& d : ds)
    if (d >= 0) throw std::invalid_argument("milnor_sl2_scan: d must be negative");
  for (const Rat& l : lambdas)
    if (l <= 0) throw std::invalid_argument("milnor_sl2_scan: lambda must be positive");
  if (as.empty() || bs.empty() || ds.empty() || lambdas.empty())
    throw std::invalid_argument("milnor_sl2_scan: empty grid");

  MilnorScanReport rep;
  for (const Rat& a : as)
    for (const Rat& b : bs)
      for (const Rat& d : ds)
        for (const Rat& l : lambdas) {
          ++rep.points;
          Rat c = Rat(1, 2) * (d * d - (a - b) * (a - b));
          Rat r1 = Rat(1, 2) * (a * a - (b - d) * (b - d)) - (c - 2 * l * b * d);
          Rat r2 = Rat(1, 2) * (b * b - (a - d) * (a - d)) - (c - 2 * l * a * d);
          Rat ident = (r1 - r2) - (a - b) * (a + b - (2 * l + 1) * d);
          Rat ai = rat_abs(ident);
          if (ai > rep.identity_max_residual) rep.identity_max_residual = ai;
          if (r1 == 0 && r2 == 0 && c < 0) ++rep.solutions_with_c_negative;
          if (a == b) {
            ++rep.equal_ab_points;
            if (!(c > 0)) rep.equal_ab_branch_positive = false;
          }
        }
  return rep;
}

std::vector<AuditItem> lemadimn_audit(const MRD& mrd) {
  validate_mrd(mrd);
  const LieAlgebra& g = mrd.g;
  std::vector<AuditItem> items;

  {
    AuditItem it{"einstein_when_n_zero", mrd.dn() == 0, true,
                 mrd.dn() == 0 ? "no nilradical part: any certificate is Einstein" : "n != 0"};
    items.push_back(it);
  }

  bool unimod = is_unimodular(g);
  {
    AuditItem it;
    it.name = "theta_trivial_dim_n_one_unimodular";
    it.applicable = (mrd.dn() == 1 && unimod);
    if (it.applicable) {
      it.pass = true;
      for (const QMat& th : theta_on_h(mrd))
        if (!th.is_zero()) it.pass = false;
      it.detail = "unimodularity tested at the algebra level, tr ad X = 0 for all X";
    } else {
      it.detail = mrd.dn() == 1 ? "algebra not unimodular" : "dim n != 1";
    }
    items.push_back(it);
  }

  Subspace u = mrd.u_space();
  Subspace zu(g.dim());
  if (u.dim() > 0) {
    LieAlgebra uL = restrict_to_subalgebra(g, u);
    Subspace zloc = center(uL);
    std::vector<QVec> lifted;
    for (int j = 0; j < zloc.dim(); ++j) lifted.push_back(u.basis() * zloc.basis_vector(j));
    zu = Subspace::span(g.dim(), lifted);
  }

  {
    AuditItem it;
    it.name = "center_of_u_inside_h_dim_n_one";
    it.applicable = (mrd.dn() == 1);
    if (it.applicable) {
      it.pass = mrd.h_space().contains(zu);
      it.detail = "dim z(u) = " + std::to_string(zu.dim());
    } else {
      it.detail = "dim n != 1";
    }
    items.push_back(it);
  }

  {
    AuditItem it;
    it.name = "center_of_u_bounded_by_dim_n_squared";
    it.applicable = (mrd.dn() > 0);
    if (it.applicable) {
      it.pass = zu.dim() <= mrd.dn() * mrd.dn();
      it.detail = "dim z(u) = " + std::to_string(zu.dim()) + ", bound = " + std::to_string(mrd.dn() * mrd.dn());
    } else {
      it.detail = "n = 0";
    }
    items.push_back(it);
  }

  return items;
}

}  // namespace homsol
