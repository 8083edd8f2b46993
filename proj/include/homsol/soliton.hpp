#ifndef HOMSOL_SOLITON_HPP
#define HOMSOL_SOLITON_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homsol/metric.hpp"

namespace homsol {

enum class Verdict { einstein, algebraic_soliton, solvsoliton, nilsoliton, not_soliton };
enum class SignClass { expanding, steady, shrinking };

std::string to_string(Verdict v);
std::string to_string(SignClass s);

struct SolitonCertificate {
  Verdict verdict = Verdict::not_soliton;
  Rat c = 0;
  SignClass sign_class = SignClass::steady;
  std::optional<QMat> D;   // derivation on g, standard basis of g
  std::optional<QMat> D1;  // derivation on n, declared n basis
  // per-condition defect norms, keyed "i".."v", "v_ricci"; 0 on a pass
  std::map<std::string, Rat> residuals;

  bool passed() const { return verdict != Verdict::not_soliton; }
};

/// Runs the five certificate conditions on an MRD, determines
/// the cosmological constant, assembles the derivation of condition (v) and
/// cross-checks Ric = cI + D_p.
SolitonCertificate check_algebraic_soliton(const MRD& mrd);

/// Solvsoliton feasibility for a metric solvable Lie algebra: is
/// Ric = cI + D solvable for some c and D in Der(L)? When c is not pinned by
/// the system (I itself a derivation), c = 0 is reported.
SolitonCertificate check_solvsoliton(const LieAlgebra& L, const QMat& gram, Tolerance tol = {});

/// Same solver restricted to nilpotent algebras; verdict tagged nilsoliton.
SolitonCertificate check_nilsoliton(const LieAlgebra& L, const QMat& gram, Tolerance tol = {});

/// D = -S(ad H) + blockdiag(0, 0, D1) on g (standard basis). Throws if the
/// result is not a derivation or its image leaves the nilradical.
QMat soliton_derivation(const MRD& mrd, const Rat& c, const QMat& D1);

/// Direct-sum check of the product lemma: two non-flat Einstein factors give
/// a soliton iff their constants agree. Throws if a factor is flat or not
/// Einstein.
SolitonCertificate product_soliton_check(const MRD& a, const MRD& b);

struct CartanSplit {
  QMat h_minus;  // g.dim x mminus, columns in g coordinates
  QMat h_plus;
};

/// Max norm of theta(Y)^t + theta(Y) over h^- and theta(Y)^t - theta(Y) over
/// h^+; validates the Cartan-decomposition invariants first.
Rat cartan_split_defect(const MRD& mrd, const CartanSplit& split);

enum class CompactUVerdict { obstructed, not_obstructed, not_applicable };
std::string to_string(CompactUVerdict v);

/// Compact-U obstruction: Killing form of u negative definite and h != 0
/// forces C_theta = 0, impossible for an expanding soliton.
CompactUVerdict compact_u_obstruction(const MRD& mrd);

struct MilnorScanReport {
  long points = 0;
  Rat identity_max_residual = 0;       // must stay 0
  long solutions_with_c_negative = 0;  // must stay 0
  long equal_ab_points = 0;            // points on the a = b branch
  bool equal_ab_branch_positive = true;  // c = d^2/2 > 0 on that branch
};

/// Evaluates the three Milnor-frame soliton equations of the sl2 corollary on
/// a grid, verifies the factor identity
/// (lhs1-lhs2) - (rhs1-rhs2) = (a-b)(a+b-(2l+1)d) exactly, and counts
/// solutions with c < 0 (there are none).
MilnorScanReport milnor_sl2_scan(const std::vector<Rat>& as, const std::vector<Rat>& bs,
                                 const std::vector<Rat>& ds, const std::vector<Rat>& lambdas);

struct AuditItem {
  std::string name;
  bool applicable = false;
  bool pass = true;
  std::string detail;
};
/// Border-case lemma audit: (i) n = 0 forces the Einstein path, (ii) theta
/// trivial when dim n = 1 and g unimodular, (iii) z(u) inside h when
/// dim n = 1, (iv) dim z(u) <= (dim n)^2.
std::vector<AuditItem> lemadimn_audit(const MRD& mrd);

}  // namespace homsol

#endif
