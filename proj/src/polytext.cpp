#include "intmeas/polytext.hpp"

#include <cctype>
#include <map>

namespace intmeas {

IntPolynomial parse_poly(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw PolyParseError("parse_poly: empty input");

  std::map<unsigned long, BigInt> terms;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
      if (i >= s.size()) throw PolyParseError("parse_poly: dangling sign");
    }
    std::string digits;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits.push_back(s[i++]);
    BigInt coeff = digits.empty() ? BigInt(1) : BigInt(digits);
    unsigned long exp = 0;
    if (i < s.size() && (s[i] == 't' || s[i] == 'T')) {
      ++i;
      exp = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string e;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) e.push_back(s[i++]);
        if (e.empty()) throw PolyParseError("parse_poly: missing exponent after '^'");
        exp = std::stoul(e);
      }
    } else if (digits.empty()) {
      throw PolyParseError(std::string("parse_poly: unexpected character '") + s[i] + "'");
    }
    if (sign < 0) coeff = -coeff;
    terms[exp] += coeff;
    if (i < s.size() && s[i] != '+' && s[i] != '-')
      throw PolyParseError(std::string("parse_poly: unexpected character '") + s[i] + "'");
  }

  unsigned long degree = 0;
  for (const auto& [e, c] : terms)
    if (c != 0) degree = std::max(degree, e);
  std::vector<BigInt> coeffs(degree + 1, BigInt(0));
  for (const auto& [e, c] : terms)
    if (e <= degree) coeffs[e] += c;
  bool all_zero = true;
  for (const auto& c : coeffs)
    if (c != 0) all_zero = false;
  if (all_zero) throw PolyParseError("parse_poly: zero polynomial");
  return IntPolynomial(std::move(coeffs));
}

}  // namespace intmeas
