#ifndef HOMSOL_RATIONAL_HPP
#define HOMSOL_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace homsol {

/// Exact scalar type. All structural computations run over the rationals;
/// float-mode inputs are converted to their exact binary values and a
/// tolerance is carried separately (see Tolerance).
using Rat = boost::multiprecision::cpp_rational;

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

/// Parses "p", "-p/q" or a decimal like "1.25" into an exact rational.
Rat parse_rational(const std::string& text);

/// Renders as "p" or "p/q".
std::string rat_to_string(const Rat& x);

/// Zero test policy: exact by default, |x| < eps when a tolerance is set.
struct Tolerance {
  std::optional<Rat> eps;  // empty = exact mode

  bool exact() const { return !eps.has_value(); }
  bool is_zero(const Rat& x) const {
    if (exact()) return x == 0;
    return rat_abs(x) < *eps;
  }
};

}  // namespace homsol

#endif
