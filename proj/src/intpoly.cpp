#include "intmeas/intpoly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace intmeas {

namespace {

using Coeffs = std::vector<BigInt>;  // ascending; empty = zero polynomial

void trim(Coeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

int deg(const Coeffs& c) { return static_cast<int>(c.size()) - 1; }

Coeffs raw(const IntPolynomial& p) { return p.coeffs(); }

Coeffs add_raw(const Coeffs& a, const Coeffs& b) {
  Coeffs r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] += b[i];
  }
  trim(r);
  return r;
}

Coeffs neg_raw(Coeffs a) {
  for (auto& x : a) x = -x;
  return a;
}

Coeffs mul_raw(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Coeffs scale_raw(Coeffs a, const BigInt& s) {
  if (s == 0) return {};
  for (auto& x : a) x *= s;
  return a;
}

Coeffs deriv_raw(const Coeffs& a) {
  if (a.size() <= 1) return {};
  Coeffs r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * BigInt(static_cast<long>(i));
  return r;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r with deg r < deg b.
// Callers guarantee deg a >= deg b.
Coeffs prem_raw(Coeffs a, const Coeffs& b) {
  assert(!b.empty());
  const int db = deg(b);
  const BigInt& lb = b.back();
  int da = deg(a);
  assert(da >= db);
  int steps = da - db + 1;
  while (deg(a) >= db && !a.empty()) {
    const BigInt top = a.back();
    for (auto& x : a) x *= lb;
    int shift = deg(a) - db;
    for (int i = 0; i <= db; ++i) a[i + shift] -= top * b[i];
    trim(a);
    --steps;
  }
  // Scale the remainder so the full power lc(b)^(da-db+1) is applied.
  if (steps > 0 && !a.empty()) {
    BigInt f;
    mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(steps));
    a = scale_raw(std::move(a), f);
  }
  return a;
}

BigInt content_raw(const Coeffs& a) {
  BigInt g = 0;
  for (const auto& x : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;  // zero for the zero polynomial
}

Coeffs primitive_raw(Coeffs a) {
  if (a.empty()) return a;
  BigInt g = content_raw(a);
  if (a.back() < 0) g = -g;
  for (auto& x : a) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    x = q;
  }
  return a;
}

// Exact division over Z; nullopt when it does not come out even.
std::optional<Coeffs> div_exact_raw(const Coeffs& a, const Coeffs& b) {
  assert(!b.empty());
  if (a.empty()) return Coeffs{};
  if (deg(a) < deg(b)) return std::nullopt;
  Coeffs rem = a;
  Coeffs quot(deg(a) - deg(b) + 1);
  const BigInt& lb = b.back();
  for (int k = deg(a) - deg(b); k >= 0; --k) {
    if (deg(rem) != k + deg(b)) {
      quot[k] = 0;
      continue;
    }
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem.back().get_mpz_t(), lb.get_mpz_t());
    if (r != 0) return std::nullopt;
    quot[k] = q;
    for (int i = 0; i <= deg(b); ++i) rem[i + k] -= q * b[i];
    trim(rem);
  }
  if (!rem.empty()) return std::nullopt;
  return quot;
}

Coeffs gcd_raw(Coeffs a, Coeffs b) {
  if (a.empty()) return primitive_raw(std::move(b));
  if (b.empty()) return primitive_raw(std::move(a));
  BigInt ca = content_raw(a), cb = content_raw(b);
  BigInt cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  a = primitive_raw(std::move(a));
  b = primitive_raw(std::move(b));
  if (deg(a) < deg(b)) std::swap(a, b);
  while (!b.empty()) {
    Coeffs r = prem_raw(a, b);
    a = std::move(b);
    b = primitive_raw(std::move(r));
  }
  a = primitive_raw(std::move(a));
  return scale_raw(std::move(a), cg);
}

IntPolynomial wrap(Coeffs c, const char* what) {
  if (c.empty()) throw std::invalid_argument(std::string(what) + ": zero polynomial");
  return IntPolynomial(std::move(c));
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw std::invalid_argument("IntPolynomial: empty coefficient list");
  trim(c_);
  if (c_.empty()) throw std::invalid_argument("IntPolynomial: zero polynomial");
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  if (c_.empty()) throw std::invalid_argument("IntPolynomial: empty coefficient list");
  trim(c_);
  if (c_.empty()) throw std::invalid_argument("IntPolynomial: zero polynomial");
}

const BigInt& IntPolynomial::coeff(int k) const {
  static const BigInt zero = 0;
  if (k < 0 || k > degree()) return zero;
  return c_[static_cast<size_t>(k)];
}

BigInt IntPolynomial::eval(const BigInt& x) const {
  BigInt r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

Rational IntPolynomial::eval(const Rational& x) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + Rational(*it);
  return r;
}

std::complex<double> IntPolynomial::eval(const std::complex<double>& z) const {
  std::complex<double> r = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * z + it->get_d();
  return r;
}

IntPolynomial add(const IntPolynomial& p, const IntPolynomial& q) {
  return wrap(add_raw(raw(p), raw(q)), "add");
}

IntPolynomial sub(const IntPolynomial& p, const IntPolynomial& q) {
  return wrap(add_raw(raw(p), neg_raw(raw(q))), "sub");
}

IntPolynomial mul(const IntPolynomial& p, const IntPolynomial& q) {
  return wrap(mul_raw(raw(p), raw(q)), "mul");
}

IntPolynomial pow(const IntPolynomial& p, unsigned k) {
  if (k < 1) throw std::invalid_argument("pow: exponent must be >= 1");
  Coeffs base = raw(p), acc{1};
  while (k > 0) {
    if (k & 1u) acc = mul_raw(acc, base);
    k >>= 1u;
    if (k > 0) base = mul_raw(base, base);
  }
  return wrap(std::move(acc), "pow");
}

IntPolynomial compose(const IntPolynomial& p, const IntPolynomial& q) {
  Coeffs acc{p.coeff(p.degree())};
  const Coeffs qc = raw(q);
  for (int k = p.degree() - 1; k >= 0; --k) {
    acc = mul_raw(acc, qc);
    acc = add_raw(acc, Coeffs{p.coeff(k)});
  }
  return wrap(std::move(acc), "compose");
}

IntPolynomial derivative(const IntPolynomial& p) {
  if (p.degree() < 1) throw std::invalid_argument("derivative: degree must be >= 1");
  return wrap(deriv_raw(raw(p)), "derivative");
}

IntPolynomial taylor_shift(const IntPolynomial& p, const BigInt& e) {
  return compose(p, IntPolynomial(std::vector<BigInt>{e, 1}));
}

BigInt content(const IntPolynomial& p) { return content_raw(raw(p)); }

IntPolynomial primitive_part(const IntPolynomial& p) {
  return IntPolynomial(primitive_raw(raw(p)));
}

std::optional<IntPolynomial> divide_exact(const IntPolynomial& p, const IntPolynomial& q) {
  auto r = div_exact_raw(raw(p), raw(q));
  if (!r || r->empty()) return std::nullopt;
  return IntPolynomial(std::move(*r));
}

IntPolynomial poly_gcd(const IntPolynomial& p, const IntPolynomial& q) {
  return IntPolynomial(gcd_raw(raw(p), raw(q)));
}

// Subresultant PRS resultant, exact over Z.
BigInt resultant(const IntPolynomial& P, const IntPolynomial& Q) {
  Coeffs A = raw(P), B = raw(Q);
  if (deg(A) == 0 && deg(B) == 0) return 1;
  BigInt ca = content_raw(A), cb = content_raw(B);
  A = primitive_raw(std::move(A));
  B = primitive_raw(std::move(B));
  // primitive_raw divides by the signed content (forcing a positive leading
  // coefficient); dividing A by a constant c scales Res by c^{-deg B}, so fold
  // those constants back into the result.
  auto pow_big = [](const BigInt& b, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
  };
  BigInt scale = pow_big(P.leading() < 0 ? BigInt(-ca) : ca, static_cast<unsigned long>(deg(B))) *
                 pow_big(Q.leading() < 0 ? BigInt(-cb) : cb, static_cast<unsigned long>(deg(A)));
  int s = 1;
  if (deg(A) < deg(B)) {
    if ((deg(A) & 1) && (deg(B) & 1)) s = -s;
    std::swap(A, B);
  }
  BigInt g = 1, h = 1;
  while (true) {
    const int da = deg(A), db = deg(B);
    if (db < 0) return 0;  // B vanished: common factor
    if (db == 0) {
      // Res(A, b) = b^{deg A}; undo the accumulated h normalization.
      if (da == 0) return scale * s;
      BigInt num = pow_big(B.back(), static_cast<unsigned long>(da));
      BigInt den = pow_big(h, static_cast<unsigned long>(da - 1));
      BigInt out;
      mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      return scale * s * out;
    }
    const int delta = da - db;
    if ((da & 1) && (db & 1)) s = -s;
    Coeffs R = prem_raw(A, B);
    A = std::move(B);
    BigInt divisor = g * pow_big(h, static_cast<unsigned long>(delta));
    for (auto& x : R) {
      BigInt q;
      mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), divisor.get_mpz_t());
      x = q;
    }
    trim(R);
    B = std::move(R);
    g = A.back();
    if (delta == 0) {
      // h unchanged
    } else {
      BigInt num = pow_big(g, static_cast<unsigned long>(delta));
      BigInt den = pow_big(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.degree() < 1) throw std::invalid_argument("squarefree_part: degree must be >= 1");
  IntPolynomial g = poly_gcd(p, derivative(p));
  if (g.degree() == 0) return primitive_part(p);
  auto q = divide_exact(primitive_part(p), g);
  if (!q) {
    // gcd divides the primitive part by Gauss's lemma; reaching here is a bug.
    throw std::logic_error("squarefree_part: gcd does not divide input");
  }
  return primitive_part(*q);
}

std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p) {
  if (p.degree() < 1) return {};
  IntPolynomial f = primitive_part(p);
  std::vector<std::pair<IntPolynomial, int>> out;
  IntPolynomial fp = derivative(f);
  IntPolynomial g = poly_gcd(f, fp);
  if (g.degree() == 0) {
    out.emplace_back(f, 1);
    return out;
  }
  // Yun: c1 = f/g, d1 = f'/g - c1'
  Coeffs c = *div_exact_raw(raw(f), raw(g));
  Coeffs d = add_raw(*div_exact_raw(raw(fp), raw(g)), neg_raw(deriv_raw(c)));
  int i = 1;
  while (deg(c) > 0) {
    Coeffs y = gcd_raw(c, d);
    if (deg(y) > 0) out.emplace_back(IntPolynomial(y), i);
    Coeffs c2 = *div_exact_raw(c, y);
    Coeffs d2;
    if (d.empty()) {
      d2 = neg_raw(deriv_raw(c2));
    } else {
      d2 = add_raw(*div_exact_raw(d, y), neg_raw(deriv_raw(c2)));
    }
    c = std::move(c2);
    d = std::move(d2);
    ++i;
  }
  return out;
}

AlgebraicInvariant det_poly(const IntPolynomial& p) {
  if (!p.monic()) throw std::invalid_argument("det_poly: input must be monic");
  int k = 0;
  while (p.coeff(k) == 0) ++k;  // exact t^k factor
  const int m = p.degree() - k;
  BigInt v = p.coeff(k);
  if (m & 1) v = -v;
  return {std::move(v), AlgebraicInvariant::Kind::determinant};
}

AlgebraicInvariant disc_poly(const IntPolynomial& p) {
  if (!p.monic()) throw std::invalid_argument("disc_poly: input must be monic");
  if (p.degree() < 1) return {BigInt(1), AlgebraicInvariant::Kind::discriminant};
  IntPolynomial q = squarefree_part(p);
  if (q.degree() < 2) return {BigInt(1), AlgebraicInvariant::Kind::discriminant};
  return {resultant(q, derivative(q)), AlgebraicInvariant::Kind::discriminant};
}

// roots(r) = {alpha - beta}: r(x) = (-1)^(nm) Res_y(p(x+y), q(y)), computed by
// evaluating x at nm+1 integers and interpolating the exact integer result.
IntPolynomial composed_difference(const IntPolynomial& p, const IntPolynomial& q) {
  if (!p.monic() || !q.monic())
    throw std::invalid_argument("composed_difference: inputs must be monic");
  const int n = p.degree(), m = q.degree();
  if (n == 0 || m == 0) throw std::invalid_argument("composed_difference: degree must be >= 1");
  const int N = n * m;
  std::vector<BigInt> nodes;
  nodes.reserve(N + 1);
  for (int k = 0; nodes.size() < static_cast<size_t>(N + 1); ++k) {
    nodes.emplace_back(k + 1);
    if (nodes.size() < static_cast<size_t>(N + 1)) nodes.emplace_back(-(k + 1));
  }
  std::vector<BigInt> values(N + 1);
  for (int i = 0; i <= N; ++i) {
    BigInt r = resultant(taylor_shift(p, nodes[i]), q);
    if ((N & 1)) r = -r;
    values[i] = std::move(r);
  }
  // Newton interpolation over Q; the result is known to be in Z[x].
  std::vector<Rational> divided(N + 1);
  for (int i = 0; i <= N; ++i) divided[i] = Rational(values[i]);
  for (int level = 1; level <= N; ++level)
    for (int i = N; i >= level; --i)
      divided[i] = (divided[i] - divided[i - 1]) / Rational(nodes[i] - nodes[i - level]);
  std::vector<Rational> acc{divided[N]};
  for (int i = N - 1; i >= 0; --i) {
    // acc = acc * (x - node_i) + divided[i]
    std::vector<Rational> next(acc.size() + 1);
    for (size_t j = 0; j < acc.size(); ++j) {
      next[j + 1] += acc[j];
      next[j] -= acc[j] * Rational(nodes[i]);
    }
    next[0] += divided[i];
    acc = std::move(next);
  }
  std::vector<BigInt> out(acc.size());
  for (size_t j = 0; j < acc.size(); ++j) {
    if (acc[j].get_den() != 1)
      throw std::logic_error("composed_difference: interpolation did not return integers");
    out[j] = acc[j].get_num();
  }
  IntPolynomial r{std::move(out)};
  if (r.degree() != N || !r.monic())
    throw std::logic_error("composed_difference: expected a monic degree n*m result");
  return r;
}

namespace {

int sign_of(const Rational& x) { return sgn(x); }

// Signed remainder chain with primitive integer scaling (positive factors only).
std::vector<Coeffs> sturm_chain(const IntPolynomial& q) {
  std::vector<Coeffs> chain;
  chain.push_back(raw(q));
  if (q.degree() == 0) return chain;
  chain.push_back(deriv_raw(raw(q)));
  while (deg(chain.back()) > 0) {
    const Coeffs& a = chain[chain.size() - 2];
    const Coeffs& b = chain.back();
    Coeffs r = prem_raw(a, b);
    if (r.empty()) break;
    // prem scales by lc(b)^k which may be negative for odd k; renormalize so
    // the scaling factor applied to the true remainder is positive.
    int k = deg(a) - deg(b) + 1;
    if (b.back() < 0 && (k & 1)) r = neg_raw(std::move(r));
    r = neg_raw(std::move(r));
    // strip the (positive) content to keep the numbers small
    BigInt g = content_raw(r);
    for (auto& x : r) {
      BigInt d;
      mpz_divexact(d.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
      x = d;
    }
    chain.push_back(std::move(r));
  }
  return chain;
}

int sign_variations(const std::vector<Coeffs>& chain, const Rational& x) {
  int count = 0, prev = 0;
  for (const auto& c : chain) {
    Rational v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + Rational(*it);
    int s = sign_of(v);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace

int sturm_count_closed(const IntPolynomial& q, const Rational& a, const Rational& b) {
  if (a > b) throw std::invalid_argument("sturm_count_closed: a > b");
  auto chain = sturm_chain(q);
  int open_half = sign_variations(chain, a) - sign_variations(chain, b);  // roots in (a, b]
  int at_a = (q.eval(a) == 0) ? 1 : 0;
  return open_half + at_a;
}

std::string to_string(const IntPolynomial& p) {
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const BigInt& c = p.coeff(k);
    if (c == 0) continue;
    BigInt a = c > 0 ? c : BigInt(-c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c > 0 ? "+" : "-");
    }
    if (k == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str();
      os << "t";
      if (k > 1) os << "^" << k;
    }
  }
  if (first) os << "0";  // unreachable for valid polynomials
  return os.str();
}

}  // namespace intmeas
