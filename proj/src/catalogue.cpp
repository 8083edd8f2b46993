#include "homsol/catalogue.hpp"

#include <stdexcept>

namespace homsol {

namespace {

Rat P(const Params& p, const std::string& name) {
  auto it = p.find(name);
  if (it == p.end()) throw std::invalid_argument("missing parameter: " + name);
  return it->second;
}

QVec unit(int d, int i) {
  QVec v(d, Rat(0));
  v[i] = 1;
  return v;
}

QVec lin(int d, std::initializer_list<std::pair<int, Rat>> terms) {
  QVec v(d, Rat(0));
  for (const auto& [i, c] : terms) v[i] = c;
  return v;
}

// g = u (acting through the matrices `theta`) + n, basis u first then n.
LieAlgebra semidirect(const std::vector<std::string>& u_names,
                      const std::vector<std::tuple<int, int, QVec>>& u_brackets,
                      const std::vector<QMat>& theta, const std::vector<std::string>& n_names,
                      const std::vector<std::tuple<int, int, QVec>>& n_brackets) {
  int du = static_cast<int>(u_names.size()), dn = static_cast<int>(n_names.size());
  int d = du + dn;
  std::vector<std::string> names = u_names;
  names.insert(names.end(), n_names.begin(), n_names.end());
  std::vector<std::tuple<int, int, QVec>> br;
  for (const auto& [i, j, v] : u_brackets) {
    QVec w(d, Rat(0));
    for (int m = 0; m < du; ++m) w[m] = v[m];
    br.emplace_back(i, j, w);
  }
  for (int i = 0; i < du; ++i)
    for (int j = 0; j < dn; ++j) {
      QVec w(d, Rat(0));
      bool nonzero = false;
      for (int k = 0; k < dn; ++k) {
        w[du + k] = theta[i](k, j);
        if (w[du + k] != 0) nonzero = true;
      }
      if (nonzero) br.emplace_back(i, du + j, w);
    }
  for (const auto& [i, j, v] : n_brackets) {
    QVec w(d, Rat(0));
    for (int m = 0; m < dn; ++m) w[du + m] = v[m];
    br.emplace_back(du + i, du + j, w);
  }
  return LieAlgebra(d, names, br);
}

MRD make_mrd(LieAlgebra g, const std::vector<int>& k_idx, const std::vector<int>& h_idx,
             const std::vector<int>& n_idx, const QVec& gram_diag) {
  int d = g.dim();
  auto pick = [&](const std::vector<int>& idx) {
    QMat m(d, static_cast<int>(idx.size()));
    for (std::size_t j = 0; j < idx.size(); ++j) m.set_column(static_cast<int>(j), unit(d, idx[j]));
    return m;
  };
  MRD mrd;
  mrd.k_basis = pick(k_idx);
  mrd.h_basis = pick(h_idx);
  mrd.n_basis = pick(n_idx);
  mrd.g = std::move(g);
  mrd.gram = QMat::diagonal(gram_diag);
  return mrd;
}

std::vector<Rat> std_grid() { return {Rat(1, 2), 1, 2, 3}; }

QMat m2(Rat a, Rat b, Rat c, Rat d) { return QMat{{a, b}, {c, d}}; }

std::vector<FamilySpec> make_registry() {
  std::vector<FamilySpec> fams;

  {
    FamilySpec f;
    f.name = "sl2_semi_r2";
    f.description = "sl2(R) acting on R^2 by the standard representation, SO(2) isotropy";
    f.param_names = {"alpha", "beta"};
    f.default_grid = {{"alpha", std_grid()}, {"beta", std_grid()}};
    f.in_domain = [](const Params& p) { return P(p, "alpha") > 0 && P(p, "beta") > 0; };
    f.build_mrd = [](const Params& p) {
      Rat al = P(p, "alpha"), be = P(p, "beta");
      LieAlgebra g = semidirect(
          {"Z", "Y1", "Y2"},
          {{0, 1, lin(3, {{2, 2}})}, {0, 2, lin(3, {{1, -2}})}, {1, 2, lin(3, {{0, -2}})}},
          {m2(0, -1, 1, 0), m2(1, 0, 0, -1), m2(0, 1, 1, 0)}, {"X1", "X2"}, {});
      return make_mrd(std::move(g), {0}, {1, 2}, {3, 4}, {al, al, be, be});
    };
    f.expect_pass = [](const Params&) { return true; };
    f.expect_c = [](const Params& p) { return Rat(-6) / P(p, "alpha"); };
    f.expect_verdict = Verdict::algebraic_soliton;
    fams.push_back(std::move(f));
  }

  {
    FamilySpec f;
    f.name = "dim4_g5_n1";
    f.description = "R + sl2(R) with SO(2) isotropy, one-dimensional nilradical scaled by e";
    f.param_names = {"a", "b", "e"};
    f.default_grid = {{"a", std_grid()}, {"b", std_grid()}, {"e", std_grid()}};
    f.in_domain = [](const Params& p) { return P(p, "a") != 0 && P(p, "b") != 0 && P(p, "e") != 0; };
    f.build_mrd = [](const Params& p) {
      Rat a = P(p, "a"), b = P(p, "b"), e = P(p, "e");
      QMat z1(1, 1);
      QMat te(1, 1);
      te(0, 0) = e;
      LieAlgebra g = semidirect(
          {"Z", "Y1", "Y2", "Y3"},
          {{0, 1, lin(4, {{2, -a}})}, {0, 2, lin(4, {{1, a}})}, {1, 2, lin(4, {{0, b}})}},
          {z1, z1, z1, te}, {"X"}, {});
      return make_mrd(std::move(g), {0}, {1, 2, 3}, {4}, {1, 1, 1, 1});
    };
    f.expect_pass = [](const Params& p) { return P(p, "e") * P(p, "e") == P(p, "a") * P(p, "b"); };
    f.expect_c = [](const Params& p) { return -P(p, "a") * P(p, "b"); };
    f.expect_verdict = Verdict::einstein;
    fams.push_back(std::move(f));
  }

  {
    FamilySpec f;
    f.name = "dim5_g5_n1";
    f.description = "R + (su(2) or sl2(R)) in a Milnor frame, fourth vector acting by an inner derivation; no expanding certificate exists";
    f.param_names = {"a", "b", "d", "e", "f", "g"};
    f.default_grid = {{"a", {1, 2}}, {"b", {1, 3}}, {"d", {-1, 1, -2}},
                      {"e", {0, 1}}, {"f", {0, 1}}, {"g", {0, 1}}};
    f.in_domain = [](const Params& p) { return P(p, "a") != 0 && P(p, "b") != 0 && P(p, "d") != 0; };
    f.build_mrd = [](const Params& p) {
      Rat a = P(p, "a"), b = P(p, "b"), d = P(p, "d");
      Rat e = P(p, "e"), fc = P(p, "f"), gc = P(p, "g");
      QMat z1(1, 1), one(1, 1);
      one(0, 0) = 1;
      LieAlgebra g = semidirect(
          {"Y1", "Y2", "Y3", "Y4"},
          {{0, 1, lin(4, {{2, d}})},
           {1, 2, lin(4, {{0, a}})},
           {2, 0, lin(4, {{1, b}})},
           {3, 0, lin(4, {{1, gc * b}, {2, -fc * d}})},
           {3, 1, lin(4, {{0, -gc * a}, {2, e * d}})},
           {3, 2, lin(4, {{0, fc * a}, {1, -e * b}})}},
          {z1, z1, z1, one}, {"X"}, {});
      return make_mrd(std::move(g), {}, {0, 1, 2, 3}, {4}, {1, 1, 1, 1, 1});
    };
    f.expect_pass = nullptr;  // obstruction family
    fams.push_back(std::move(f));
  }

  {
    FamilySpec f;
    f.name = "dim6_n2";
    f.description = "R + sl2(R) acting faithfully on R^2, SO(2) isotropy";
    f.param_names = {"alpha", "beta", "gamma"};
    f.default_grid = {{"alpha", std_grid()}, {"beta", std_grid()}, {"gamma", std_grid()}};
    f.in_domain = [](const Params& p) {
      return P(p, "alpha") > 0 && P(p, "beta") > 0 && P(p, "gamma") > 0;
    };
    f.build_mrd = [](const Params& p) {
      Rat al = P(p, "alpha"), be = P(p, "beta"), ga = P(p, "gamma");
      LieAlgebra g = semidirect(
          {"Z", "Y1", "Y2", "Y3"},
          {{0, 2, lin(4, {{3, 1}})}, {0, 3, lin(4, {{2, -1}})}, {2, 3, lin(4, {{0, -4}})}},
          {m2(0, Rat(-1, 2), Rat(1, 2), 0), m2(1, 0, 0, 1), m2(1, 0, 0, -1), m2(0, 1, 1, 0)},
          {"X1", "X2"}, {});
      return make_mrd(std::move(g), {0}, {1, 2, 3}, {4, 5}, {al, be, be, ga, ga});
    };
    f.expect_pass = [](const Params& p) { return P(p, "beta") == 3 * P(p, "alpha"); };
    f.expect_c = [](const Params& p) { return Rat(-2) / P(p, "alpha"); };
    f.expect_verdict = Verdict::einstein;
    fams.push_back(std::move(f));
  }

  {
    FamilySpec f;
    f.name = "rh2_times_solv3";
    f.description = "sl2(R) acting trivially on the nilradical; central direction acts by diag(s,t)";
    f.param_names = {"b", "s", "t"};
    f.default_grid = {{"b", {-1, -2, -5}}, {"s", {0, 1, 2}}, {"t", {0, 1, 2}}};
    f.in_domain = [](const Params& p) {
      return P(p, "b") < 0 && !(P(p, "s") == 0 && P(p, "t") == 0);
    };
    f.build_mrd = [](const Params& p) {
      Rat b = P(p, "b"), s = P(p, "s"), t = P(p, "t");
      QMat z2(2, 2);
      LieAlgebra g = semidirect(
          {"Z", "Y1", "Y2", "Y3"},
          {{0, 2, lin(4, {{3, 1}})}, {0, 3, lin(4, {{2, -1}})}, {2, 3, lin(4, {{0, b}})}},
          {z2, m2(s, 0, 0, t), z2, z2}, {"X1", "X2"}, {});
      return make_mrd(std::move(g), {0}, {1, 2, 3}, {4, 5}, {1, 1, 1, 1, 1});
    };
    f.expect_pass = [](const Params& p) {
      return P(p, "s") * P(p, "s") + P(p, "t") * P(p, "t") == -P(p, "b");
    };
    f.expect_c = [](const Params& p) { return P(p, "b"); };
    fams.push_back(std::move(f));
  }

  // the common sl2(R) isotropy algebra of the three rank-3 nilradical families
  auto sl2_u_brackets = []() {
    return std::vector<std::tuple<int, int, QVec>>{
        {0, 1, lin(3, {{2, -2}})}, {0, 2, lin(3, {{1, 2}})}, {1, 2, lin(3, {{0, 2}})}};
  };

  {
    FamilySpec f;
    f.name = "theta_ad";
    f.description = "sl2(R) acting on R^3 by its adjoint representation";
    f.param_names = {"alpha", "beta", "gamma"};
    f.default_grid = {{"alpha", std_grid()}, {"beta", std_grid()}, {"gamma", std_grid()}};
    f.in_domain = [](const Params& p) {
      return P(p, "alpha") > 0 && P(p, "beta") > 0 && P(p, "gamma") > 0;
    };
    f.build_mrd = [sl2_u_brackets](const Params& p) {
      Rat al = P(p, "alpha"), be = P(p, "beta"), ga = P(p, "gamma");
      LieAlgebra g = semidirect(
          {"Z", "Y1", "Y2"}, sl2_u_brackets(),
          {QMat{{0, 2, 0}, {-2, 0, 0}, {0, 0, 0}}, QMat{{0, 0, 0}, {0, 0, 2}, {0, 2, 0}},
           QMat{{0, 0, -2}, {0, 0, 0}, {-2, 0, 0}}},
          {"X1", "X2", "X3"}, {});
      return make_mrd(std::move(g), {0}, {1, 2}, {3, 4, 5}, {al, al, be, be, ga});
    };
    f.expect_pass = [](const Params& p) { return P(p, "beta") == P(p, "gamma"); };
    f.expect_c = [](const Params& p) { return Rat(-12) / P(p, "alpha"); };
    f.expect_verdict = Verdict::algebraic_soliton;
    fams.push_back(std::move(f));
  }

  auto theta12 = []() {
    return std::vector<QMat>{QMat{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}},
                             QMat{{1, 0, 0}, {0, -1, 0}, {0, 0, 0}},
                             QMat{{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}};
  };

  {
    FamilySpec f;
    f.name = "theta_12_r3";
    f.description = "sl2(R) acting on R^3 by standard + trivial";
    f.param_names = {"alpha", "beta", "gamma"};
    f.default_grid = {{"alpha", std_grid()}, {"beta", std_grid()}, {"gamma", std_grid()}};
    f.in_domain = [](const Params& p) {
      return P(p, "alpha") > 0 && P(p, "beta") > 0 && P(p, "gamma") > 0;
    };
    f.build_mrd = [sl2_u_brackets, theta12](const Params& p) {
      Rat al = P(p, "alpha"), be = P(p, "beta"), ga = P(p, "gamma");
      LieAlgebra g =
          semidirect({"Z", "Y1", "Y2"}, sl2_u_brackets(), theta12(), {"X1", "X2", "X3"}, {});
      return make_mrd(std::move(g), {0}, {1, 2}, {3, 4, 5}, {al, al, be, be, ga});
    };
    f.expect_pass = [](const Params&) { return true; };
    f.expect_c = [](const Params& p) { return Rat(-6) / P(p, "alpha"); };
    f.expect_verdict = Verdict::algebraic_soliton;
    fams.push_back(std::move(f));
  }

  {
    FamilySpec f;
    f.name = "theta_12_heis";
    f.description = "sl2(R) acting on the Heisenberg algebra by standard + trivial";
    f.param_names = {"alpha", "beta", "gamma"};
    f.default_grid = {{"alpha", {Rat(1, 2), 1, 2, 3, 4}},
                      {"beta", std_grid()},
                      {"gamma", std_grid()}};
    f.in_domain = [](const Params& p) {
      return P(p, "alpha") > 0 && P(p, "beta") > 0 && P(p, "gamma") > 0;
    };
    f.build_mrd = [sl2_u_brackets, theta12](const Params& p) {
      Rat al = P(p, "alpha"), be = P(p, "beta"), ga = P(p, "gamma");
      LieAlgebra g = semidirect({"Z", "Y1", "Y2"}, sl2_u_brackets(), theta12(),
                                {"X1", "X2", "X3"}, {{0, 1, lin(3, {{2, 1}})}});
      return make_mrd(std::move(g), {0}, {1, 2}, {3, 4, 5}, {al, al, be, be, ga});
    };
    f.expect_pass = [](const Params& p) {
      return P(p, "alpha") * P(p, "gamma") == 4 * P(p, "beta") * P(p, "beta");
    };
    f.expect_c = [](const Params& p) { return Rat(-6) / P(p, "alpha"); };
    f.expect_verdict = Verdict::algebraic_soliton;
    fams.push_back(std::move(f));
  }

  {
    FamilySpec f;
    f.name = "subals_solv";
    f.description = "transitive solvable subalgebra of sl2(R) x| R^2, certified by the solvable-algebra solver";
    f.param_names = {"alpha", "beta"};
    f.default_grid = {{"alpha", std_grid()}, {"beta", std_grid()}};
    f.solvable_check = true;
    f.in_domain = [](const Params& p) { return P(p, "alpha") > 0 && P(p, "beta") > 0; };
    f.build_algebra = [](const Params& p) {
      Rat al = P(p, "alpha"), be = P(p, "beta");
      LieAlgebra L(4, {"A", "B", "C", "D"},
                   {{0, 1, lin(4, {{1, -2}})},
                    {0, 2, lin(4, {{2, 1}})},
                    {0, 3, lin(4, {{3, -1}})},
                    {1, 2, lin(4, {{3, 2}})}});
      return std::make_pair(std::move(L), QMat::diagonal({al, al, be, be}));
    };
    f.build_mrd = [f_alg = f.build_algebra](const Params& p) {
      auto [L, gram] = f_alg(p);
      QVec diag{gram(0, 0), gram(1, 1), gram(2, 2), gram(3, 3)};
      return make_mrd(std::move(L), {}, {0}, {1, 2, 3}, diag);
    };
    f.expect_pass = [](const Params&) { return true; };
    f.expect_c = [](const Params& p) { return Rat(-6) / P(p, "alpha"); };
    f.expect_verdict = Verdict::solvsoliton;
    f.expect_D = [](const Params& p) {
      Rat v = Rat(6) / P(p, "alpha");
      return QMat::diagonal({0, 0, v, v});
    };
    fams.push_back(std::move(f));
  }

  // hyperbolic planes/spaces and their flat extensions (trivial solitons)
  auto hyperbolic = [](int leaves) {
    // [x, y_i] = y_i for i = 1..leaves
    std::vector<std::tuple<int, int, QVec>> br;
    for (int i = 1; i <= leaves; ++i) br.emplace_back(0, i, lin(leaves + 1, {{i, 1}}));
    std::vector<std::string> names = {"x"};
    for (int i = 1; i <= leaves; ++i) names.push_back("y" + std::to_string(i));
    return LieAlgebra(leaves + 1, names, br);
  };

  auto add_product_family = [&](const std::string& name, const std::string& desc, int leaves,
                                int flat, Rat cnum, bool einstein_row) {
    FamilySpec f;
    f.name = name;
    f.description = desc;
    f.param_names = flat > 0 ? std::vector<std::string>{"s", "u"} : std::vector<std::string>{"s"};
    f.default_grid = {{"s", {Rat(1, 2), 1, 2}}};
    if (flat > 0) f.default_grid["u"] = {Rat(1, 2), 1, 2};
    f.in_domain = [flat](const Params& p) {
      return P(p, "s") > 0 && (flat == 0 || P(p, "u") > 0);
    };
    f.build_mrd = [leaves, flat, hyperbolic](const Params& p) {
      Rat s = P(p, "s");
      int d = 1 + leaves + flat;
      std::vector<std::tuple<int, int, QVec>> br;
      for (int i = 1; i <= leaves; ++i) br.emplace_back(0, i, lin(d, {{i, 1}}));
      std::vector<std::string> names = {"x"};
      for (int i = 1; i <= leaves; ++i) names.push_back("y" + std::to_string(i));
      for (int i = 0; i < flat; ++i) names.push_back("z" + std::to_string(i + 1));
      LieAlgebra g(d, names, br);
      std::vector<int> n_idx;
      QVec diag{s};
      for (int i = 1; i <= leaves; ++i) {
        n_idx.push_back(i);
        diag.push_back(s);
      }
      for (int i = 0; i < flat; ++i) {
        n_idx.push_back(1 + leaves + i);
        diag.push_back(P(p, "u"));
      }
      return make_mrd(std::move(g), {}, {0}, n_idx, diag);
    };
    f.expect_pass = [](const Params&) { return true; };
    f.expect_c = [cnum](const Params& p) { return cnum / P(p, "s"); };
    f.expect_verdict = einstein_row ? Verdict::einstein : Verdict::algebraic_soliton;
    fams.push_back(std::move(f));
  };
  add_product_family("rh2", "hyperbolic plane", 1, 0, -1, true);
  add_product_family("rh3", "hyperbolic 3-space", 2, 0, -2, true);
  add_product_family("rh2_x_r", "hyperbolic plane times a flat line", 1, 1, -1, false);
  add_product_family("rh2_x_r2", "hyperbolic plane times a flat plane", 1, 2, -1, false);
  add_product_family("rh3_x_r", "hyperbolic 3-space times a flat line", 2, 1, -2, false);

  {
    FamilySpec f;
    f.name = "rh3_w_line";
    f.description = "so(3,1)/so(3) hyperbolic factor with a central line acting on a one-dimensional nilradical";
    f.param_names = {"s"};
    f.default_grid = {{"s", {1, 2, 3}}};
    f.in_domain = [](const Params& p) { return P(p, "s") > 0; };
    f.build_mrd = [](const Params& p) {
      Rat s = P(p, "s");
      int d = 8;
      // e1..e3 rotations, f1..f3 boosts, W central in u, X nilradical
      std::vector<std::tuple<int, int, QVec>> br = {
          {0, 1, lin(d, {{2, 1}})},  {1, 2, lin(d, {{0, 1}})},  {2, 0, lin(d, {{1, 1}})},
          {0, 4, lin(d, {{5, 1}})},  {0, 5, lin(d, {{4, -1}})}, {1, 3, lin(d, {{5, -1}})},
          {1, 5, lin(d, {{3, 1}})},  {2, 3, lin(d, {{4, 1}})},  {2, 4, lin(d, {{3, -1}})},
          {3, 4, lin(d, {{2, -1}})}, {4, 5, lin(d, {{0, -1}})}, {5, 3, lin(d, {{1, -1}})},
          {6, 7, lin(d, {{7, Rat(2) / s}})}};
      LieAlgebra g(d, {"e1", "e2", "e3", "f1", "f2", "f3", "W", "X"}, br);
      return make_mrd(std::move(g), {0, 1, 2}, {3, 4, 5, 6}, {7}, {s, s, s, 1, 1});
    };
    f.expect_pass = [](const Params& p) { return P(p, "s") == 2; };
    f.expect_c = [](const Params&) { return Rat(-1); };
    f.expect_verdict = Verdict::einstein;
    fams.push_back(std::move(f));
  }

  return fams;
}

}  // namespace

const std::vector<FamilySpec>& family_registry() {
  static const std::vector<FamilySpec> fams = make_registry();
  return fams;
}

const FamilySpec& family(const std::string& name) {
  for (const FamilySpec& f : family_registry())
    if (f.name == name) return f;
  throw std::invalid_argument("unknown family: " + name);
}

MRD build_family(const std::string& name, const Params& params) {
  const FamilySpec& f = family(name);
  for (const std::string& pn : f.param_names) P(params, pn);
  if (!f.in_domain(params)) throw std::invalid_argument("parameters out of domain for family " + name);
  return f.build_mrd(params);
}

bool TableReport::all_ok() const {
  for (const TableRow& r : rows)
    if (!r.ok) return false;
  return true;
}

TableRow run_family_point(const FamilySpec& fam, const Params& params) {
  TableRow row;
  row.family = fam.name;
  row.params = params;
  SolitonCertificate cert;
  if (fam.solvable_check) {
    auto [L, gram] = fam.build_algebra(params);
    cert = check_solvsoliton(L, gram);
  } else {
    cert = check_algebraic_soliton(fam.build_mrd(params));
  }
  row.verdict = cert.verdict;
  row.c = cert.c;

  if (!fam.expect_pass) {
    row.ok = !(cert.passed() && cert.c < 0);
    if (!row.ok) row.note = "unexpected expanding certificate";
    return row;
  }
  bool expected = fam.expect_pass(params);
  row.ok = (cert.passed() == expected);
  if (!row.ok) {
    row.note = expected ? "expected a certificate, got none" : "unexpected certificate";
    return row;
  }
  if (!expected) return row;

  if (cert.c >= 0) {
    row.ok = false;
    row.note = "certificate is not expanding";
  } else if (fam.expect_c && cert.c != fam.expect_c(params)) {
    row.ok = false;
    row.note = "constant mismatch: got " + rat_to_string(cert.c) + ", expected " +
               rat_to_string(fam.expect_c(params));
  } else if (fam.expect_verdict && cert.verdict != *fam.expect_verdict) {
    row.ok = false;
    row.note = "verdict mismatch: got " + to_string(cert.verdict) + ", expected " +
               to_string(*fam.expect_verdict);
  } else if (fam.expect_D && (!cert.D || *cert.D != fam.expect_D(params))) {
    row.ok = false;
    row.note = "derivation mismatch";
  }
  return row;
}

TableReport verify_tables() {
  TableReport report;
  for (const FamilySpec& fam : family_registry()) {
    std::vector<Params> points{{}};
    for (const std::string& pn : fam.param_names) {
      std::vector<Params> next;
      for (const Params& base : points)
        for (const Rat& v : fam.default_grid.at(pn)) {
          Params p = base;
          p[pn] = v;
          next.push_back(std::move(p));
        }
      points = std::move(next);
    }
    for (const Params& p : points) {
      if (!fam.in_domain(p)) continue;
      report.rows.push_back(run_family_point(fam, p));
    }
  }
  return report;
}

QMat milnor_extension_ricci(const OffdiagSample& s) {
  LieAlgebra u(4, {"Y1", "Y2", "Y3", "Y4"},
               {{0, 1, lin(4, {{2, s.d}})},
                {1, 2, lin(4, {{0, s.a}})},
                {2, 0, lin(4, {{1, s.b}})},
                {3, 0, lin(4, {{1, s.g * s.b}, {2, -s.f * s.d}})},
                {3, 1, lin(4, {{0, -s.g * s.a}, {2, s.e * s.d}})},
                {3, 2, lin(4, {{0, s.f * s.a}, {1, -s.e * s.b}})}});
  return ricci_reductive(u, QMat(4, 0), QMat::identity(4), QMat::identity(4));
}

OffdiagReport offdiag_obstruction_check(const std::vector<OffdiagSample>& samples) {
  OffdiagReport rep;
  for (const OffdiagSample& s : samples) {
    if (s.a == 0 || s.b == 0 || s.d == 0)
      throw std::invalid_argument("offdiag_obstruction_check: a, b, d must be nonzero");
    ++rep.points;
    QMat ric = milnor_extension_ricci(s);
    Rat p1 = Rat(-1, 2) * (s.b - s.d) * (s.b - s.d) * s.e;
    Rat p2 = Rat(-1, 2) * (s.a - s.d) * (s.a - s.d) * s.f;
    Rat p3 = Rat(-1, 2) * (s.a - s.b) * (s.a - s.b) * s.g;
    for (const Rat& r : {rat_abs(ric(0, 3) - p1), rat_abs(ric(1, 3) - p2), rat_abs(ric(2, 3) - p3)})
      if (r > rep.pattern_max_residual) rep.pattern_max_residual = r;
    bool distinct = s.a != s.b && s.b != s.d && s.a != s.d;
    if (distinct && ric(0, 3) == 0 && ric(1, 3) == 0 && ric(2, 3) == 0)
      if (s.e != 0 || s.f != 0 || s.g != 0) rep.distinct_forces_zero = false;
    if (s.a == s.b && s.e == 0 && s.f == 0) {
      Rat c = ric(2, 2);
      if (c != Rat(1, 2) * s.d * s.d || !(c > 0)) rep.equal_ab_branch_positive = false;
    }
  }
  return rep;
}

}  // namespace homsol
