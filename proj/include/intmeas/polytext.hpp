// Text grammar for integer polynomials in the variable t:
//   poly := ['+'|'-'] term (('+'|'-') term)*
//   term := integer | [integer] 't' ['^' natural]
// No spaces required; "t^2-2", "3t^2+t-1" and "-t^3+2t" all parse.

#pragma once

#include <stdexcept>
#include <string>

#include "intmeas/intpoly.hpp"

namespace intmeas {

struct PolyParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

IntPolynomial parse_poly(const std::string& text);

}  // namespace intmeas
