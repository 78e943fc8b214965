#include "intmeas/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "intmeas/kernels.hpp"

namespace intmeas {

namespace {

// ---- exact evaluation at dyadic points -------------------------------------
//
// Every float location is a dyadic rational, so |f(z)| and |f'(z)| can be
// bounded rigorously by integer-only Horner: write z = (zr + i zi) / 2^s with
// integer zr, zi and track the scale explicitly. The certificates below are
// therefore exact statements about the integer polynomial, not about a
// rounded float copy of it.

struct DyadicPoint {
  BigInt zr, zi;  // numerators
  BigInt den;     // common power-of-two denominator
  long bits;      // den = 2^bits
};

void accumulate_dyadic(const double v, Rational& out) { out = Rational(v); }

void accumulate_dyadic(const long double v, Rational& out) {
  // exact split into two doubles (64-bit mantissa = 53 + 11)
  const double hi = static_cast<double>(v);
  const double lo = static_cast<double>(v - static_cast<long double>(hi));
  out = Rational(hi) + Rational(lo);
}

template <typename T>
DyadicPoint make_dyadic(const std::complex<T>& z) {
  Rational qr, qi;
  accumulate_dyadic(z.real(), qr);
  accumulate_dyadic(z.imag(), qi);
  DyadicPoint p;
  mpz_lcm(p.den.get_mpz_t(), qr.get_den().get_mpz_t(), qi.get_den().get_mpz_t());
  p.zr = qr.get_num() * (p.den / qr.get_den());
  p.zi = qi.get_num() * (p.den / qi.get_den());
  p.bits = static_cast<long>(mpz_sizeinbase(p.den.get_mpz_t(), 2)) - 1;
  return p;
}

// sqrt(X) / 2^scale_bits with a directed margin; X >= 0.
double sqrt_scaled(const BigInt& X, long scale_bits, bool upper) {
  if (X == 0) return 0.0;
  signed long e = 0;
  double m = mpz_get_d_2exp(&e, X.get_mpz_t());  // X = m 2^e, 0.5 <= m < 1
  const long q = (e >= 0) ? e / 2 : -((-e + 1) / 2);
  const int r = static_cast<int>(e - 2 * q);  // 0 or 1
  double v = std::sqrt(m) * (r ? std::sqrt(2.0) : 1.0);
  v = std::ldexp(v, static_cast<int>(q - scale_bits));
  if (upper) {
    v *= 1.0 + 1e-12;
    if (!(v > 0)) v = 1e-305;  // underflow: still a valid upper bound
    if (!std::isfinite(v)) v = std::numeric_limits<double>::max();
  } else {
    v *= 1.0 - 1e-12;
    if (!std::isfinite(v)) v = std::numeric_limits<double>::max() / 4;
    if (!(v > 0)) v = 0.0;  // underflow: no useful lower bound
  }
  return v;
}

// Exact |f(z)| (upper bound) and |f'(z)| (lower bound) at a dyadic point.
void exact_abs_bounds(const IntPolynomial& f, const DyadicPoint& z, double& abs_f_upper,
                      double& abs_fp_lower) {
  const int n = f.degree();
  BigInt Fr = 0, Fi = 0, Gr = 0, Gi = 0;
  BigInt den_pow = 1;  // den^{j+1} at step j
  for (int k = n; k >= 0; --k) {
    den_pow *= z.den;
    BigInt gr = Gr * z.zr - Gi * z.zi + Fr * z.den;
    BigInt gi = Gr * z.zi + Gi * z.zr + Fi * z.den;
    BigInt fr = Fr * z.zr - Fi * z.zi + f.coeff(k) * den_pow;
    BigInt fi = Fr * z.zi + Fi * z.zr;
    Gr = std::move(gr);
    Gi = std::move(gi);
    Fr = std::move(fr);
    Fi = std::move(fi);
  }
  const long scale = z.bits * static_cast<long>(n + 1);
  abs_f_upper = sqrt_scaled(Fr * Fr + Fi * Fi, scale, true);
  abs_fp_lower = sqrt_scaled(Gr * Gr + Gi * Gi, scale, false);
}

// ---- certification ----------------------------------------------------------

template <typename T>
struct Certified {
  std::vector<std::complex<T>> locations;
  std::vector<double> radii;
  bool ok = false;
};

// Exact conjugate pairing: every root either snaps to the real axis or gets a
// partner set to its exact conjugate (positive-imaginary member canonical).
template <typename T>
void symmetrize_conjugates(std::vector<std::complex<T>>& z) {
  const std::size_t n = z.size();
  std::vector<bool> done(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (done[i]) continue;
    const std::complex<T> target = std::conj(z[i]);
    std::size_t best = i;
    T best_d = std::abs(target - z[i]);
    for (std::size_t j = 0; j < n; ++j) {
      if (done[j] || j == i) continue;
      T d = std::abs(target - z[j]);
      if (d < best_d) {
        best_d = d;
        best = j;
      }
    }
    if (best == i) {
      z[i] = std::complex<T>(z[i].real(), 0);
      done[i] = true;
    } else {
      if (z[i].imag() < 0) z[i] = std::conj(z[best]);
      z[best] = std::conj(z[i]);
      done[i] = done[best] = true;
    }
  }
}

// Inclusion disks around the approximate simple roots of the squarefree
// factor f. Stage one: the classical bound min_root |z - root| <= m |f/f'|
// gives disks with at least one root each; pairwise disjointness then pins
// exactly one per disk. Stage two tightens through the interference bound
// |f| / (|f'| - |f| * sum_j 1/(d_ij - r_j)); a nonpositive denominator keeps
// the stage-one radius.
template <typename T>
Certified<T> certify(const IntPolynomial& f, std::vector<std::complex<T>> z) {
  const std::size_t m = z.size();
  Certified<T> out;
  out.locations = std::move(z);
  out.radii.assign(m, std::numeric_limits<double>::infinity());
  std::vector<double> fabs(m), fpabs(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!std::isfinite(static_cast<double>(out.locations[i].real())) ||
        !std::isfinite(static_cast<double>(out.locations[i].imag())))
      return out;  // iteration diverged
    exact_abs_bounds(f, make_dyadic(out.locations[i]), fabs[i], fpabs[i]);
    if (!(fpabs[i] > 0)) return out;  // derivative unresolved: no certificate
    out.radii[i] = static_cast<double>(m) * fabs[i] / fpabs[i];
  }
  auto dist = [&](std::size_t i, std::size_t j) {
    return static_cast<double>(std::abs(out.locations[i] - out.locations[j])) * (1.0 - 1e-14);
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (dist(i, j) <= out.radii[i] + out.radii[j]) return out;  // not disjoint
  for (int pass = 0; pass < 2; ++pass) {
    std::vector<double> next = out.radii;
    for (std::size_t i = 0; i < m; ++i) {
      double interference = 0;
      bool valid = true;
      for (std::size_t j = 0; j < m && valid; ++j) {
        if (j == i) continue;
        const double gap = dist(i, j) - out.radii[j];
        if (!(gap > 0))
          valid = false;
        else
          interference += 1.0 / gap;
      }
      if (!valid) continue;
      const double denom = fpabs[i] - fabs[i] * interference;
      if (denom > 0) next[i] = std::min(next[i], fabs[i] / denom * (1.0 + 1e-12));
    }
    out.radii = std::move(next);
  }
  out.ok = true;
  return out;
}

// ---- software-float stage ----------------------------------------------------
//
// Monomial-basis polynomials with large alternating coefficients (the path
// characteristic polynomials, say) cancel catastrophically in hardware
// precision once the degree passes ~60. The iteration then runs on GMP
// software floats; certification still happens exactly at the downcast double
// locations, which is enough because the mpf iteration lands within an ulp.

struct CMpf {
  mpf_class re, im;
};

CMpf cmul(const CMpf& a, const CMpf& b) {
  return {mpf_class(a.re * b.re - a.im * b.im), mpf_class(a.re * b.im + a.im * b.re)};
}

CMpf cdiv(const CMpf& a, const CMpf& b) {
  mpf_class d = b.re * b.re + b.im * b.im;
  return {mpf_class((a.re * b.re + a.im * b.im) / d), mpf_class((a.im * b.re - a.re * b.im) / d)};
}

mpf_class cabs(const CMpf& a) {
  mpf_class s = a.re * a.re + a.im * a.im;
  mpf_class r(0, mpf_get_prec(s.get_mpf_t()));
  mpf_sqrt(r.get_mpf_t(), s.get_mpf_t());
  return r;
}

std::vector<std::complex<double>> aberth_softfloat(const IntPolynomial& f, unsigned prec,
                                                   int max_sweeps,
                                                   const std::vector<std::complex<double>>* warm) {
  const int m = f.degree();
  std::vector<CMpf> c(static_cast<std::size_t>(m) + 1);
  for (int k = 0; k <= m; ++k)
    c[static_cast<std::size_t>(k)] = {mpf_class(f.coeff(k), prec), mpf_class(0, prec)};
  // Newton-polygon initial moduli from the exact coefficient magnitudes
  std::vector<double> lg(static_cast<std::size_t>(m) + 1, -1e300);
  for (int k = 0; k <= m; ++k) {
    if (f.coeff(k) == 0) continue;
    signed long e = 0;
    const double mant = mpz_get_d_2exp(&e, f.coeff(k).get_mpz_t());
    lg[static_cast<std::size_t>(k)] = std::log(std::abs(mant)) + e * std::log(2.0);
  }
  std::vector<int> hull;
  for (int k = 0; k <= m; ++k) {
    if (lg[static_cast<std::size_t>(k)] <= -1e299 && k != 0 && k != m) continue;
    while (hull.size() >= 2) {
      const int a = hull[hull.size() - 2], b = hull.back();
      const double cross = (lg[static_cast<std::size_t>(b)] - lg[static_cast<std::size_t>(a)]) *
                               (k - a) -
                           (lg[static_cast<std::size_t>(k)] - lg[static_cast<std::size_t>(a)]) *
                               (b - a);
      if (cross <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(k);
  }
  std::vector<CMpf> z(static_cast<std::size_t>(m));
  if (warm && warm->size() == static_cast<std::size_t>(m)) {
    for (std::size_t i = 0; i < z.size(); ++i)
      z[i] = {mpf_class((*warm)[i].real(), prec), mpf_class((*warm)[i].imag(), prec)};
  } else {
    std::size_t idx = 0;
    for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
      const int k1 = hull[s], k2 = hull[s + 1];
      double u = std::exp((lg[static_cast<std::size_t>(k1)] - lg[static_cast<std::size_t>(k2)]) /
                          (k2 - k1));
      if (!std::isfinite(u) || u <= 0) u = 1.0;
      for (int j = k1; j < k2 && idx < z.size(); ++j, ++idx) {
        const double ang = 2.0 * M_PI * (double(idx) / m) + 0.7 + 0.27 * double(s);
        z[idx] = {mpf_class(u * std::cos(ang), prec), mpf_class(u * std::sin(ang), prec)};
      }
    }
    while (idx < z.size()) {
      const double ang = 2.0 * M_PI * (double(idx) / m) + 0.7;
      z[idx] = {mpf_class(std::cos(ang), prec), mpf_class(std::sin(ang), prec)};
      ++idx;
    }
  }

  std::vector<CMpf> z2(static_cast<std::size_t>(m),
                       CMpf{mpf_class(0, prec), mpf_class(0, prec)});
  // double-accurate locations are all that is needed downstream
  const double stop = std::max(1e-25, std::ldexp(1.0, -static_cast<int>(prec) + 8));
  double best_worst = 1e300;
  int best_sweep = 0;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    std::vector<double> corr(static_cast<std::size_t>(m), 0.0);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t ii = 0; ii < m; ++ii) {
      const std::size_t i = static_cast<std::size_t>(ii);
      CMpf fz{mpf_class(0, prec), mpf_class(0, prec)};
      CMpf fpz{mpf_class(0, prec), mpf_class(0, prec)};
      for (int k = m; k >= 0; --k) {
        fpz = cmul(fpz, z[i]);
        fpz.re += fz.re;
        fpz.im += fz.im;
        fz = cmul(fz, z[i]);
        fz.re += c[static_cast<std::size_t>(k)].re;
        fz.im += c[static_cast<std::size_t>(k)].im;
      }
      if (cabs(fz) == 0) {
        z2[i] = z[i];
        corr[i] = 0.0;
        continue;
      }
      const CMpf w = cdiv(fz, fpz);
      CMpf interference{mpf_class(0, prec), mpf_class(0, prec)};
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j == i) continue;
        CMpf d{mpf_class(z[i].re - z[j].re), mpf_class(z[i].im - z[j].im)};
        if (d.re == 0 && d.im == 0) d.re = std::ldexp(1.0, -static_cast<int>(prec));
        const CMpf inv = cdiv(CMpf{mpf_class(1, prec), mpf_class(0, prec)}, d);
        interference.re += inv.re;
        interference.im += inv.im;
      }
      CMpf denom = cmul(w, interference);
      denom.re = 1 - denom.re;
      denom.im = -denom.im;
      const CMpf step = (denom.re == 0 && denom.im == 0) ? w : cdiv(w, denom);
      z2[i] = {mpf_class(z[i].re - step.re), mpf_class(z[i].im - step.im)};
      corr[i] = cabs(step).get_d() / (1.0 + cabs(z[i]).get_d());
    }
    z.swap(z2);
    double worst = 0.0;
    for (double v : corr) worst = std::max(worst, v);
    if (worst < stop) break;
    // plateau: at the precision's noise floor the corrections stop improving;
    // hand the (partially organized) configuration to the next rung
    if (worst < 0.5 * best_worst) {
      best_worst = worst;
      best_sweep = sweep;
    } else if (sweep - best_sweep > 40) {
      break;
    }
  }
  std::vector<std::complex<double>> out(static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = {z[i].re.get_d(), z[i].im.get_d()};
  return out;
}

Certified<double> solve_softfloat(const IntPolynomial& f, double target) {
  long coeff_bits = 64;
  for (int k = 0; k <= f.degree(); ++k)
    coeff_bits = std::max(coeff_bits,
                          static_cast<long>(mpz_sizeinbase(f.coeff(k).get_mpz_t(), 2)));
  Certified<double> cert;
  // The evaluation scale grows like |a_k| |z|^k, so the later rungs budget
  // bits per degree on top of the coefficient width. Each rung warm-starts
  // from the previous one: the cheap rung does the global organization, the
  // expensive rungs only polish.
  const long deg = f.degree();
  std::vector<std::complex<double>> warm;
  for (const unsigned prec : {static_cast<unsigned>(coeff_bits + 128),
                              static_cast<unsigned>(coeff_bits + 2 * deg + 192),
                              static_cast<unsigned>(2 * (coeff_bits + 2 * deg) + 320)}) {
    auto z = aberth_softfloat(f, prec, 500, warm.empty() ? nullptr : &warm);
    warm = z;
    symmetrize_conjugates(z);
    cert = certify(f, std::move(z));
    if (cert.ok) {
      double worst_r = 0.0;
      for (double r : cert.radii) worst_r = std::max(worst_r, r);
      cert.ok = worst_r <= target;
    }
    if (cert.ok) return cert;
  }
  return cert;
}

template <typename T>
Certified<T> solve_squarefree(const IntPolynomial& f, double target,
                              const std::vector<std::complex<double>>* warm) {
  const int m = f.degree();
  std::vector<std::complex<T>> coeffs(static_cast<std::size_t>(m) + 1);
  for (int k = 0; k <= m; ++k) {
    const BigInt& a = f.coeff(k);
    const double hi = a.get_d();
    if (!std::isfinite(hi))
      throw std::invalid_argument("find_roots: coefficient exceeds the floating range");
    if constexpr (std::is_same_v<T, double>) {
      coeffs[static_cast<std::size_t>(k)] = {hi, 0.0};
    } else {
      const BigInt rem = a - BigInt(hi);
      coeffs[static_cast<std::size_t>(k)] = {static_cast<T>(hi) + static_cast<T>(rem.get_d()), 0};
    }
  }
  for (auto& c : coeffs) c /= coeffs.back();

  std::vector<std::complex<T>> z(static_cast<std::size_t>(m)), z2(static_cast<std::size_t>(m));
  if (warm && warm->size() == static_cast<std::size_t>(m)) {
    for (int i = 0; i < m; ++i)
      z[static_cast<std::size_t>(i)] =
          std::complex<T>(static_cast<T>((*warm)[static_cast<std::size_t>(i)].real()),
                          static_cast<T>((*warm)[static_cast<std::size_t>(i)].imag()));
  } else {
    std::vector<kernels::Cplx> dc(coeffs.size());
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      dc[k] = {static_cast<double>(coeffs[k].real()), static_cast<double>(coeffs[k].imag())};
    auto seed = kernels::aberth_roots(dc, 1e-2, 40);
    for (int i = 0; i < m; ++i)
      z[static_cast<std::size_t>(i)] =
          std::complex<T>(static_cast<T>(seed[static_cast<std::size_t>(i)].real()),
                          static_cast<T>(seed[static_cast<std::size_t>(i)].imag()));
  }
  const double stop = 8.0 * static_cast<double>(std::numeric_limits<T>::epsilon());
  for (int sweep = 0; sweep < 200; ++sweep) {
    double worst = kernels::aberth_sweep(std::span<const std::complex<T>>(coeffs),
                                         std::span<const std::complex<T>>(z),
                                         std::span<std::complex<T>>(z2));
    z.swap(z2);
    if (worst < stop) break;
  }
  symmetrize_conjugates(z);
  Certified<T> cert = certify(f, std::move(z));
  if (cert.ok) {
    double worst_r = 0.0;
    for (double r : cert.radii) worst_r = std::max(worst_r, r);
    cert.ok = worst_r <= target;
  }
  return cert;
}

}  // namespace

double root_bound(const IntPolynomial& p) {
  if (!p.monic()) throw std::invalid_argument("root_bound: input must be monic");
  double mx = 0.0;
  for (int k = 0; k < p.degree(); ++k) {
    BigInt a = abs(p.coeff(k));
    mx = std::max(mx, a.get_d() * (1.0 + 4e-16));
  }
  return 1.0 + mx;
}

RootSet find_roots(const IntPolynomial& p, double target_radius) {
  if (p.degree() < 1) throw std::invalid_argument("find_roots: degree must be >= 1");
  if (!(target_radius > 0)) throw std::invalid_argument("find_roots: target_radius must be > 0");

  RootSet rs;
  rs.degree = p.degree();
  const IntPolynomial t = IntPolynomial::variable();

  for (const auto& [factor, mult] : squarefree_decomposition(p)) {
    IntPolynomial f = factor;
    if (f.coeff(0) == 0) {
      // squarefree, so t divides exactly once: an exact root at the origin
      rs.entries.push_back({{0.0, 0.0}, mult, 0.0});
      if (f.degree() == 1) continue;
      f = *divide_exact(f, t);
    }
    if (f.degree() < 1) continue;

    auto cert_d = solve_squarefree<double>(f, target_radius, nullptr);
    if (cert_d.ok) {
      for (std::size_t i = 0; i < cert_d.locations.size(); ++i)
        rs.entries.push_back({cert_d.locations[i], mult, cert_d.radii[i]});
      continue;
    }
    // Escalate to extended precision, warm-started from the double pass.
    // Coefficients beyond the 64-bit mantissa cannot even be evaluated there,
    // so jump straight to software floats in that case.
    long coeff_bits = 0;
    for (int k = 0; k <= f.degree(); ++k)
      coeff_bits =
          std::max(coeff_bits, static_cast<long>(mpz_sizeinbase(f.coeff(k).get_mpz_t(), 2)));
    Certified<long double> cert_l;
    if (coeff_bits <= 72)
      cert_l = solve_squarefree<long double>(f, target_radius, &cert_d.locations);
    if (cert_l.ok) {
      for (std::size_t i = 0; i < cert_l.locations.size(); ++i) {
        const auto& zl = cert_l.locations[i];
        std::complex<double> zd{static_cast<double>(zl.real()), static_cast<double>(zl.imag())};
        // growing the radius by the double-cast slop keeps the certificate valid
        double slop = std::abs(zd) * 1.2e-16 + 1e-300;
        rs.entries.push_back({zd, mult, cert_l.radii[i] + slop});
      }
      continue;
    }
    // last resort for cancellation-heavy coefficients: software floats
    auto cert_s = solve_softfloat(f, target_radius);
    if (!cert_s.ok) {
      std::vector<double> best = cert_s.radii.empty() ? cert_d.radii : cert_s.radii;
      throw RootSolveError("find_roots: could not certify roots of " + to_string(f) +
                               " to the target radius",
                           std::move(best));
    }
    for (std::size_t i = 0; i < cert_s.locations.size(); ++i)
      rs.entries.push_back({cert_s.locations[i], mult, cert_s.radii[i]});
  }

  // Global disjointness across factors: with every disk holding exactly one
  // distinct root, disjointness makes each certificate exact for p itself.
  for (std::size_t i = 0; i < rs.entries.size(); ++i)
    for (std::size_t j = i + 1; j < rs.entries.size(); ++j) {
      const auto& a = rs.entries[i];
      const auto& b = rs.entries[j];
      if (std::abs(a.location - b.location) <= a.radius + b.radius) {
        std::vector<double> radii;
        for (const auto& e : rs.entries) radii.push_back(e.radius);
        throw RootSolveError("find_roots: certified disks of distinct factors overlap",
                             std::move(radii));
      }
    }

  std::sort(rs.entries.begin(), rs.entries.end(), [](const RootEntry& a, const RootEntry& b) {
    if (a.location.real() != b.location.real()) return a.location.real() < b.location.real();
    return a.location.imag() < b.location.imag();
  });
  return rs;
}

}  // namespace intmeas
