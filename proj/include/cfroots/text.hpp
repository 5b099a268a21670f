#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "cfroots/poly.hpp"

namespace cfroots {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dense form: whitespace-separated decimal coefficients ascending,
// "a0 a1 ... ad". Sparse form: "exponent:coefficient" terms, detected by
// the presence of ':'. At least one coefficient must be nonzero.
IntPoly parse_polynomial(std::string_view text);

// Dense form; parse(format(a)) == a.
std::string format_polynomial(const IntPoly& a);

// "p/q" or plain integer text.
Rational parse_rational(std::string_view text);

}  // namespace cfroots
