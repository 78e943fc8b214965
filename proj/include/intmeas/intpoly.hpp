// Exact integer polynomial arithmetic and the algebraic invariants built on it:
// determinant (product of nonzero roots), discriminant (ordered-pair product of
// root differences), squarefree decomposition, resultants, Sturm counts and the
// composed-difference polynomial. No floating point anywhere in this module.

#pragma once

#include <complex>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace intmeas {

using BigInt = mpz_class;
using Rational = mpq_class;

// Monic or general integer polynomial, coefficients ascending by degree.
// The zero polynomial is not representable; constructors throw instead.
class IntPolynomial {
 public:
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial constant(BigInt c) { return IntPolynomial(std::vector<BigInt>{std::move(c)}); }
  static IntPolynomial variable() { return IntPolynomial({0, 1}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const BigInt& leading() const { return c_.back(); }
  bool monic() const { return c_.back() == 1; }
  // Coefficient of t^k, zero beyond the degree.
  const BigInt& coeff(int k) const;
  const std::vector<BigInt>& coeffs() const { return c_; }

  BigInt eval(const BigInt& x) const;
  Rational eval(const Rational& x) const;
  std::complex<double> eval(const std::complex<double>& z) const;

  bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }

 private:
  std::vector<BigInt> c_;
};

struct AlgebraicInvariant {
  enum class Kind { determinant, discriminant };
  BigInt value;
  Kind kind;
};

// Ring operations. add/sub throw if the result would be the zero polynomial.
IntPolynomial add(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial sub(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial mul(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial pow(const IntPolynomial& p, unsigned k);  // k >= 1
IntPolynomial compose(const IntPolynomial& p, const IntPolynomial& q);  // p(q(t))
IntPolynomial derivative(const IntPolynomial& p);  // degree >= 1
IntPolynomial taylor_shift(const IntPolynomial& p, const BigInt& e);  // p(t + e)

BigInt content(const IntPolynomial& p);
IntPolynomial primitive_part(const IntPolynomial& p);  // positive leading coefficient

// Exact division over Z; nullopt if q does not divide p.
std::optional<IntPolynomial> divide_exact(const IntPolynomial& p, const IntPolynomial& q);

// gcd over Z, primitive with positive leading coefficient, times the content gcd.
IntPolynomial poly_gcd(const IntPolynomial& p, const IntPolynomial& q);

// Res(p, q) by the subresultant PRS, exact.
BigInt resultant(const IntPolynomial& p, const IntPolynomial& q);

// p / gcd(p, p'), content-normalized. Monic input gives a monic result.
IntPolynomial squarefree_part(const IntPolynomial& p);

// Yun decomposition p = lc * prod f_i^i with the f_i squarefree and pairwise
// coprime; returns (f_i, i) for the nonconstant factors, ascending i.
std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p);

// Product of the nonzero roots: strip the exact t^k factor, then
// (-1)^(remaining degree) * constant term. Requires monic input.
AlgebraicInvariant det_poly(const IntPolynomial& p);

// Ordered-pair product prod_{a_i != a_j} (a_i - a_j) over the distinct roots,
// i.e. the roots of the squarefree part q; equals Res(q, q') for monic q.
// Degree-<2 squarefree part gives the empty product 1. Requires monic input.
AlgebraicInvariant disc_poly(const IntPolynomial& p);

// Monic polynomial of degree deg p * deg q whose roots are the pairwise
// differences {alpha - beta}. Requires both inputs monic.
IntPolynomial composed_difference(const IntPolynomial& p, const IntPolynomial& q);

// Number of distinct real roots of the squarefree polynomial q in [a, b].
int sturm_count_closed(const IntPolynomial& q, const Rational& a, const Rational& b);

std::string to_string(const IntPolynomial& p);  // human form, e.g. "t^2-2"

}  // namespace intmeas
