#ifndef HOMSOL_CATALOGUE_HPP
#define HOMSOL_CATALOGUE_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homsol/soliton.hpp"

namespace homsol {

using Params = std::map<std::string, Rat>;

/// One classification row: a parameterized construction together with its
/// expected certification outcome.
struct FamilySpec {
  std::string name;
  std::string description;
  std::vector<std::string> param_names;
  std::map<std::string, std::vector<Rat>> default_grid;

  // true: certified through the solvable-algebra solver instead of the
  // reductive-decomposition path
  bool solvable_check = false;

  std::function<bool(const Params&)> in_domain;
  std::function<MRD(const Params&)> build_mrd;  // when !solvable_check
  std::function<std::pair<LieAlgebra, QMat>(const Params&)> build_algebra;  // when solvable_check

  // null expect_pass means "no parameter point may yield an expanding pass"
  std::function<bool(const Params&)> expect_pass;
  std::function<Rat(const Params&)> expect_c;  // optional, checked on passing points
  std::optional<Verdict> expect_verdict;       // optional, checked on passing points
  std::function<QMat(const Params&)> expect_D; // optional, solvable rows
};

const std::vector<FamilySpec>& family_registry();
const FamilySpec& family(const std::string& name);

/// Builds the family's decomposition at the given parameter point; throws on
/// unknown family, missing parameter, or out-of-domain values. For
/// solvable-check rows the returned MRD has k = 0 and the algebra's own
/// reductive decomposition.
MRD build_family(const std::string& name, const Params& params);

struct TableRow {
  std::string family;
  Params params;
  bool ok = false;  // observed outcome matches the expected record
  Verdict verdict = Verdict::not_soliton;
  Rat c = 0;
  std::string note;
};

struct TableReport {
  std::vector<TableRow> rows;
  bool all_ok() const;
};

/// Runs every registered family over its default grid and compares verdict,
/// constant and (where recorded) derivation with the expected record.
TableReport verify_tables();

/// One certification run at a single parameter point, with the row-level
/// expectation comparison applied.
TableRow run_family_point(const FamilySpec& fam, const Params& params);

struct OffdiagSample {
  Rat a, b, d, e, f, g;
};

struct OffdiagReport {
  long points = 0;
  // match of the three stated off-diagonal Ricci entries against
  // -(b-d)^2 e/2, -(a-d)^2 f/2, -(a-b)^2 g/2
  Rat pattern_max_residual = 0;
  // pairwise-distinct (a,b,d) with vanishing entries forces e = f = g = 0
  bool distinct_forces_zero = true;
  // on the a = b branch with e = f = 0, the (3,3) entry equals d^2/2 > 0
  bool equal_ab_branch_positive = true;
};

/// Ricci analysis of the 4-dimensional reductive algebra R + so(3)/sl(2,R)
/// written in a Milnor frame, with the fourth basis vector acting by an inner
/// derivation with coefficients (e, f, g).
OffdiagReport offdiag_obstruction_check(const std::vector<OffdiagSample>& samples);

/// The Ricci operator used by offdiag_obstruction_check (orthonormal basis).
QMat milnor_extension_ricci(const OffdiagSample& s);

}  // namespace homsol

#endif
