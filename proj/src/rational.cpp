#include "homsol/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace homsol {

using Int = boost::multiprecision::cpp_int;

Rat parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rat(num, den);
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    // decimal literal: digits after the dot become a power-of-ten denominator
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::size_t frac_len = text.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
      throw std::invalid_argument("bad rational literal '" + text + "'");
    Int num(digits);
    Int den = 1;
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    return Rat(num, den);
  }
  return Rat(Int(text));
}

std::string rat_to_string(const Rat& x) {
  std::string s = numerator(x).str();
  if (denominator(x) != 1) s += "/" + denominator(x).str();
  return s;
}

}  // namespace homsol
