#ifndef HOMSOL_IO_HPP
#define HOMSOL_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "homsol/catalogue.hpp"

namespace homsol {

/// A parsed input document. Documents that declare the k/h/n decomposition
/// yield a validated MRD; plain metric-algebra documents (no decomposition)
/// carry the Gram matrix over the whole algebra instead.
struct ParsedInput {
  LieAlgebra algebra;
  std::optional<MRD> mrd;
  QMat gram;  // over p when mrd is set, over the whole algebra otherwise
  Tolerance tol;
};

/// Parses and validates a JSON document (schema 1, rationals as "p/q"
/// strings; plain floats are accepted only in float mode and converted to
/// their exact binary value). Throws std::invalid_argument with a located
/// message on any syntax or invariant violation.
ParsedInput parse_input(const std::string& text);

/// Document serialization of an MRD; parse_input round-trips it.
std::string serialize_mrd(const MRD& mrd);

/// CLI entry point, also used directly by tests. Commands:
///   check <file>        algebraic-soliton certificate for an MRD document
///   solvsoliton <file>  Ric = cI + D feasibility for a metric algebra
///   nilradical <file>   nilradical of the document's algebra (exact mode only)
///   derivations <file>  derivation space of the document's algebra
///   tables              run the whole catalogue against its expected records
///   scan <family>       sweep one family's parameter grid
///   milnor-scan [default]  three-equation scan of the Milnor-frame system
/// Flags: --mode exact|float, --tol <t>, --format human|json,
///        --grid "a=1,2;b=1/2,3".
/// Exit code 0 = PASS, 1 = mathematical FAIL, 2 = input/usage error.
int run_command(const std::vector<std::string>& args, std::ostream& out);

}  // namespace homsol

#endif
