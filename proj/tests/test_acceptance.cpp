// End-to-end acceptance run: each numbered check prints one PASS/FAIL line
// and the process exits nonzero if any of them fail. Everything here runs in
// exact rational arithmetic.

#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "homsol/catalogue.hpp"
#include "homsol/io.hpp"
#include "homsol/metric.hpp"
#include "homsol/soliton.hpp"
#include "homsol/structure.hpp"

using namespace homsol;

namespace {

QVec unit(int d, int i) {
  QVec v(d, Rat(0));
  v[i] = 1;
  return v;
}

QVec lin(int d, std::initializer_list<std::pair<int, Rat>> terms) {
  QVec v(d, Rat(0));
  for (auto& [i, c] : terms) v[i] = c;
  return v;
}

std::vector<Params> grid_points(const FamilySpec& fam) {
  std::vector<Params> stack{{}};
  for (const auto& pn : fam.param_names) {
    std::vector<Params> next;
    for (const auto& base : stack)
      for (const auto& v : fam.default_grid.at(pn)) {
        Params q = base;
        q[pn] = v;
        next.push_back(q);
      }
    stack = std::move(next);
  }
  std::vector<Params> in;
  for (auto& q : stack)
    if (!fam.in_domain || fam.in_domain(q)) in.push_back(q);
  return in;
}

// 1. rank-two semisimple-extension family: certificate with c = -6/alpha on
//    the full (alpha, beta) grid, and the solvable companion algebra returns
//    the same constant with D = diag(0, 0, 6/alpha, 6/alpha).
bool criterion1() {
  for (Rat alpha : {Rat(1, 2), Rat(1), Rat(2), Rat(3)})
    for (Rat beta : {Rat(1, 2), Rat(1), Rat(2), Rat(3)}) {
      auto m = build_family("sl2_semi_r2", {{"alpha", alpha}, {"beta", beta}});
      auto cert = check_algebraic_soliton(m);
      if (!cert.passed() || cert.c != Rat(-6) / alpha) return false;

      auto [L, gram] = family("subals_solv").build_algebra({{"alpha", alpha}, {"beta", beta}});
      auto solv = check_solvsoliton(L, gram);
      if (!solv.passed() || solv.c != cert.c) return false;
      QMat expect = QMat::diagonal(QVec{Rat(0), Rat(0), Rat(6) / alpha, Rat(6) / alpha});
      if (!solv.D || *solv.D != expect) return false;
      if (derivation_defect(L, *solv.D) != Rat(0)) return false;
    }
  return true;
}

// 2. four-dimensional transitive algebra with one-dimensional nilradical:
//    ric_u = diag(-d^2/2 - ba, -d^2/2 - ba, d^2/2) on >= 8 points, and the
//    certified constant on the family is c = -ab.
bool criterion2() {
  int points = 0;
  for (Rat a : {Rat(1), Rat(2), Rat(1, 2)})
    for (Rat b : {Rat(1), Rat(3)})
      for (Rat d : {Rat(1), Rat(-2), Rat(1, 3)}) {
        LieAlgebra u(4, {}, {{0, 1, Rat(-a) * unit(4, 2)},
                             {0, 2, a * unit(4, 1)},
                             {1, 2, lin(4, {{0, b}, {3, d}})}});
        QMat k = QMat::from_columns({unit(4, 0)});
        QMat p = QMat::from_columns({unit(4, 1), unit(4, 2), unit(4, 3)});
        QMat ric = ricci_reductive(u, k, p, QMat::identity(3));
        Rat top = -d * d / 2 - b * a;
        if (ric != QMat::diagonal(QVec{top, top, d * d / 2})) return false;
        ++points;
      }
  if (points < 8) return false;
  for (Rat a : {Rat(1), Rat(2)})
    for (Rat b : {Rat(1), Rat(4)}) {
      // e^2 = ab makes the point certifiable; then c = -ab
      Rat e2 = a * b;
      Rat e = (e2 == 1) ? Rat(1) : Rat(2);
      if (e * e != e2) continue;
      auto cert = check_algebraic_soliton(
          build_family("dim4_g5_n1", {{"a", a}, {"b", b}, {"e", e}}));
      if (!cert.passed() || cert.c != -a * b) return false;
    }
  return true;
}

// 3. six-dimensional family with two-dimensional nilradical: displayed
//    ric_{u/k} and C_theta, certificate passes exactly when beta = 3 alpha,
//    then Einstein with c = -2/alpha.
bool criterion3() {
  const auto& fam = family("dim6_n2");
  for (const auto& p : grid_points(fam)) {
    Rat alpha = p.at("alpha"), beta = p.at("beta");
    auto m = build_family("dim6_n2", p);
    QMat ric_u = ricci_operator(m, RicciPart::u_part);
    if (ric_u != QMat::diagonal(QVec{Rat(0), Rat(-4) / beta, Rat(-4) / beta})) return false;
    if (c_theta(m) != QMat::diagonal(QVec{Rat(2) / alpha, Rat(2) / beta, Rat(2) / beta}))
      return false;
    auto cert = check_algebraic_soliton(m);
    bool should = (beta == 3 * alpha);
    if (cert.passed() != should) return false;
    if (should && (cert.verdict != Verdict::einstein || cert.c != Rat(-2) / alpha))
      return false;
  }
  return true;
}

// 4. constraint surfaces of the three five-dimensional theta families on the
//    default grids, including the distinguished point (4, 1, 1).
bool criterion4() {
  auto surface = [&](const char* name, std::function<bool(const Params&)> expect) {
    const auto& fam = family(name);
    for (const auto& p : grid_points(fam)) {
      auto cert = check_algebraic_soliton(build_family(name, p));
      if ((cert.passed() && cert.c < 0) != expect(p)) return false;
    }
    return true;
  };
  if (!surface("theta_ad", [](const Params& p) { return p.at("beta") == p.at("gamma"); }))
    return false;
  if (!surface("theta_12_r3", [](const Params&) { return true; })) return false;
  if (!surface("theta_12_heis", [](const Params& p) {
        return p.at("alpha") * p.at("gamma") == 4 * p.at("beta") * p.at("beta");
      }))
    return false;
  auto special = check_algebraic_soliton(build_family(
      "theta_12_heis", {{"alpha", Rat(4)}, {"beta", Rat(1)}, {"gamma", Rat(1)}}));
  return special.passed() && special.c < 0;
}

// 5. circle-isotropy transitive part: ric = diag(a^2/2, -a^2/2 + b + ad,
//    -a^2/2 + b + ad) on >= 8 points with ad + b < 0.
bool criterion5() {
  int points = 0;
  for (Rat a : {Rat(1), Rat(2), Rat(1, 2)})
    for (Rat d : {Rat(0), Rat(1), Rat(-1)})
      for (Rat b : {Rat(-2), Rat(-4)}) {
        if (a * d + b >= 0) continue;
        LieAlgebra u(4, {}, {{0, 2, unit(4, 3)},
                             {0, 3, Rat(-1) * unit(4, 2)},
                             {2, 3, lin(4, {{1, a}, {0, b}})},
                             {1, 3, Rat(-d) * unit(4, 2)},
                             {1, 2, d * unit(4, 3)}});
        QMat k = QMat::from_columns({unit(4, 0)});
        QMat p = QMat::from_columns({unit(4, 1), unit(4, 2), unit(4, 3)});
        QMat ric = ricci_reductive(u, k, p, QMat::identity(3));
        Rat side = -a * a / 2 + b + a * d;
        if (ric != QMat::diagonal(QVec{a * a / 2, side, side})) return false;
        ++points;
      }
  return points >= 8;
}

// 6. moment map vanishes on every passing certificate with theta != 0;
//    Cartan-split defect 0 where the split is known; Milnor-frame scan over
//    the 4^4 grid is clean.
bool criterion6() {
  for (const auto& fam : family_registry()) {
    if (fam.solvable_check) continue;
    for (const auto& p : grid_points(fam)) {
      auto m = build_family(fam.name, p);
      auto cert = check_algebraic_soliton(m);
      if (!cert.passed()) continue;
      auto th = theta_on_h(m);
      if (theta_norm_squared(th, m.gram_h(), m.gram_n()) == 0) continue;
      if (!moment_map(m).is_zero()) return false;
    }
  }
  auto m1 = build_family("sl2_semi_r2", {{"alpha", Rat(1)}, {"beta", Rat(2)}});
  if (cartan_split_defect(m1, CartanSplit{QMat(5, 0), m1.h_basis}) != Rat(0)) return false;
  auto m2 = build_family("theta_ad", {{"alpha", Rat(2)}, {"beta", Rat(1)}, {"gamma", Rat(1)}});
  if (cartan_split_defect(m2, CartanSplit{QMat(6, 0), m2.h_basis}) != Rat(0)) return false;
  std::vector<Rat> as{1, 2, 3, 4}, bs{1, 2, 3, 4}, ds{-1, -2, -3, -4},
      ls{Rat(1, 2), 1, 2, 3};
  auto rep = milnor_sl2_scan(as, bs, ds, ls);
  return rep.points == 256 && rep.identity_max_residual == 0 &&
         rep.solutions_with_c_negative == 0 && rep.equal_ab_branch_positive;
}

// 7. structural property suite.
bool criterion7() {
  // nilradical oracle corpus and derivation dimensions are exercised in the
  // unit suites; re-check the headline dimension facts here.
  LieAlgebra h3(3, {}, {{0, 1, unit(3, 2)}});
  LieAlgebra sl2(3, {}, {{0, 1, Rat(2) * unit(3, 1)},
                         {0, 2, Rat(-2) * unit(3, 2)},
                         {1, 2, unit(3, 0)}});
  if (derivation_space(LieAlgebra(4, {}, {})).size() != 16) return false;
  if (derivation_space(h3).size() != 6) return false;
  if (derivation_space(sl2).size() != 3) return false;
  if (nilradical(direct_sum(sl2, h3)).dim() != 3) return false;

  for (const auto& fam : family_registry()) {
    auto m = build_family(fam.name, grid_points(fam).front());
    QMat b = killing_form(m.g);
    if (!(m.k_basis.transpose() * b * m.p_basis()).is_zero()) return false;
    if (!m.gram.block(0, m.dh(), m.dh(), m.dn()).is_zero()) return false;
    // theta homomorphism on the declared u basis
    std::vector<QVec> ucols;
    for (int j = 0; j < m.dk(); ++j) ucols.push_back(m.k_basis.column(j));
    for (int j = 0; j < m.dh(); ++j) ucols.push_back(m.h_basis.column(j));
    for (size_t i = 0; i < ucols.size(); ++i)
      for (size_t j = i + 1; j < ucols.size(); ++j) {
        QMat lhs = theta_matrix(m, m.g.bracket(ucols[i], ucols[j]));
        QMat ti = theta_matrix(m, ucols[i]);
        QMat tj = theta_matrix(m, ucols[j]);
        if (lhs != ti * tj - tj * ti) return false;
      }
  }
  // scaling law on three families and three scales
  for (const char* name : {"sl2_semi_r2", "rh2_x_r", "dim6_n2"}) {
    Params p;
    if (std::string(name) == "dim6_n2")
      p = {{"alpha", Rat(1)}, {"beta", Rat(3)}, {"gamma", Rat(2)}};
    else if (std::string(name) == "rh2_x_r")
      p = {{"s", Rat(1)}, {"u", Rat(2)}};
    else
      p = {{"alpha", Rat(1)}, {"beta", Rat(2)}};
    auto base = build_family(name, p);
    auto cert0 = check_algebraic_soliton(base);
    if (!cert0.passed()) return false;
    for (Rat s : {Rat(2), Rat(5), Rat(1, 3)}) {
      MRD scaled = base;
      scaled.gram = s * base.gram;
      auto cert = check_algebraic_soliton(scaled);
      if (cert.c != cert0.c / s) return false;
      if (!cert.D || *cert.D != Rat(1) / s * *cert0.D) return false;
    }
  }
  return true;
}

// 8. product lemma.
bool criterion8() {
  auto rh2 = build_family("rh2", {{"s", Rat(1)}});    // c = -1
  auto rh3 = build_family("rh3", {{"s", Rat(1)}});    // c = -2
  auto rh3b = build_family("rh3", {{"s", Rat(2)}});   // c = -1
  if (product_soliton_check(rh2, rh3).verdict != Verdict::not_soliton) return false;
  if (product_soliton_check(rh2, rh3b).verdict != Verdict::einstein) return false;
  // Einstein x flat goes through the trivial-soliton path instead
  LieAlgebra r1(1, {}, {});
  MRD flat{r1, QMat(1, 0), QMat(1, 0), QMat::identity(1), QMat::identity(1), Tolerance{}};
  bool threw = false;
  try {
    (void)product_soliton_check(rh2, flat);
  } catch (const std::invalid_argument&) {
    threw = true;
  }
  if (!threw) return false;
  auto trivial = check_algebraic_soliton(build_family("rh2_x_r", {{"s", Rat(1)}, {"u", Rat(1)}}));
  return trivial.verdict == Verdict::algebraic_soliton && trivial.c == Rat(-1);
}

// 9. classification completeness is out of scope; in its place the border-case
//    audit must pass on every certified expanding point of the catalogue and
//    the full table run must be clean.
bool criterion9() {
  if (!verify_tables().all_ok()) return false;
  for (const auto& fam : family_registry()) {
    if (fam.solvable_check) continue;
    for (const auto& p : grid_points(fam)) {
      auto m = build_family(fam.name, p);
      auto cert = check_algebraic_soliton(m);
      if (!cert.passed() || cert.c >= 0) continue;
      for (const auto& item : lemadimn_audit(m))
        if (item.applicable && !item.pass) return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  struct Entry {
    const char* label;
    bool (*fn)();
  };
  const Entry entries[] = {
      {"1. rank-two extension family constants and solvable companion", criterion1},
      {"2. dim-4 transitive Ricci display and c = -ab", criterion2},
      {"3. dim-6 faithful family: displays and beta = 3 alpha surface", criterion3},
      {"4. theta constraint surfaces on the default grids", criterion4},
      {"5. circle-isotropy Ricci display with ad + b < 0", criterion5},
      {"6. moment map, Cartan split, Milnor-frame scan", criterion6},
      {"7. structural property suite", criterion7},
      {"8. product lemma", criterion8},
      {"9. table run and border-case audit (classification scope note)", criterion9},
  };
  bool all = true;
  for (const auto& e : entries) {
    bool ok = false;
    try {
      ok = e.fn();
    } catch (const std::exception& ex) {
      std::cout << "  exception: " << ex.what() << "\n";
      ok = false;
    }
    all = all && ok;
    std::cout << (ok ? "PASS" : "FAIL") << "  " << e.label << "\n";
  }
  return all ? 0 : 1;
}
