#include "intmeas/families.hpp"

#include <algorithm>
#include <cmath>

#include "intmeas/roots.hpp"
#include "intmeas/transport.hpp"

namespace intmeas {

namespace {

constexpr double kSlack = 1e-12;  // float-noise slack for trend verdicts

BigInt big_pow(const BigInt& b, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

double log_of_bigint(const BigInt& v) {
  signed long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  return std::log(std::abs(mant)) + static_cast<double>(exp2) * std::log(2.0);
}

}  // namespace

FamilySpec FamilySpec::lemniscate_power(IntPolynomial q, long m, long k) {
  if (!q.monic() || q.degree() < 1)
    throw std::invalid_argument("lemniscate_power: q must be monic of degree >= 1");
  if (m < 1 || k < 1) throw std::invalid_argument("lemniscate_power: m, k must be >= 1");
  FamilySpec f;
  f.kind = Kind::lemniscate_power;
  f.q = std::move(q);
  f.m = m;
  f.k = k;
  return f;
}

FamilySpec FamilySpec::ramsay(long lambda) {
  if (lambda < 2 || lambda % 2 != 0)
    throw std::invalid_argument("ramsay: lambda must be even and >= 2");
  FamilySpec f;
  f.kind = Kind::ramsay;
  f.lambda = lambda;
  return f;
}

FamilySpec FamilySpec::roots_of_unity() {
  FamilySpec f;
  f.kind = Kind::roots_of_unity;
  return f;
}

FamilySpec FamilySpec::chebyshev_path() {
  FamilySpec f;
  f.kind = Kind::chebyshev_path;
  return f;
}

IntPolynomial family_member(const FamilySpec& f, int idx) {
  switch (f.kind) {
    case FamilySpec::Kind::lemniscate_power: {
      if (idx < 1) throw std::invalid_argument("family_member: index must be >= 1");
      const unsigned long l = static_cast<unsigned long>(idx);
      IntPolynomial qp = pow(*f.q, static_cast<unsigned>(f.k * idx));
      BigInt c = big_pow(BigInt(f.m), l * static_cast<unsigned long>(f.q->degree()));
      return sub(qp, IntPolynomial::constant(c));
    }
    case FamilySpec::Kind::ramsay: {
      if (idx < 2) throw std::invalid_argument("family_member: ramsay index must be >= 2");
      BigInt c1 = big_pow(BigInt(f.lambda), static_cast<unsigned long>(idx - 1)) / 2;
      std::vector<BigInt> c(static_cast<std::size_t>(idx) + 1, BigInt(0));
      c[0] = 2;
      c[1] = c1;
      c[static_cast<std::size_t>(idx)] = 1;
      return IntPolynomial(std::move(c));
    }
    case FamilySpec::Kind::roots_of_unity: {
      if (idx < 1) throw std::invalid_argument("family_member: index must be >= 1");
      std::vector<BigInt> c(static_cast<std::size_t>(idx) + 1, BigInt(0));
      c[0] = -1;
      c[static_cast<std::size_t>(idx)] = 1;
      return IntPolynomial(std::move(c));
    }
    case FamilySpec::Kind::chebyshev_path: {
      if (idx < 1) throw std::invalid_argument("family_member: index must be >= 1");
      IntPolynomial prev = IntPolynomial::constant(1);
      IntPolynomial cur = IntPolynomial::variable();
      const IntPolynomial t = IntPolynomial::variable();
      for (int i = 2; i <= idx; ++i) {
        IntPolynomial next = sub(mul(t, cur), prev);
        prev = std::move(cur);
        cur = std::move(next);
      }
      return cur;
    }
  }
  throw std::invalid_argument("family_member: unknown family");
}

ConvergenceReport run_convergence(const FamilySpec& f, const std::vector<int>& indices,
                                  const CompactSetSpec& target, double precision) {
  if (indices.empty()) throw std::invalid_argument("run_convergence: no indices");
  for (std::size_t i = 1; i < indices.size(); ++i)
    if (indices[i] <= indices[i - 1])
      throw std::invalid_argument("run_convergence: indices must be strictly increasing");

  constexpr int kMoments = 6;
  ConvergenceReport report;
  for (int idx : indices) {
    ConvergenceRecord rec;
    rec.idx = idx;
    const IntPolynomial p = family_member(f, idx);
    try {
      const RootSet roots = find_roots(p, precision);
      const AtomicMeasure mu = delta_of(roots, root_bound(p));
      int eq_n = p.degree();
      if (target.shape() == CompactSetSpec::Shape::lemniscate)
        eq_n = std::max(1, p.degree() / target.lem_poly().degree());
      const AtomicMeasure nu = equilibrium_discretized(target, eq_n);
      rec.w1_to_target = w1_distance(mu, nu).first;
      const auto ma = moments(mu, kMoments);
      const auto mb = moments(nu, kMoments);
      rec.moment_gaps.resize(kMoments);
      for (int k = 0; k < kMoments; ++k)
        rec.moment_gaps[static_cast<std::size_t>(k)] =
            std::abs(ma[static_cast<std::size_t>(k)] - mb[static_cast<std::size_t>(k)]);
      rec.weil_height = weil_height(target, roots);
      rec.offdiag_energy = energy(mu, EnergyMode::offdiag).value;
      rec.log_det = log_det_measure(mu).value;
    } catch (const RootSolveError&) {
      rec.solved = false;
    }
    report.records.push_back(std::move(rec));
  }

  report.all_solved = true;
  report.w1_decreasing = true;
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    if (!report.records[i].solved) report.all_solved = false;
    if (i > 0 && report.records[i].w1_to_target > report.records[i - 1].w1_to_target + kSlack)
      report.w1_decreasing = false;
  }
  const auto& first = report.records.front();
  const auto& last = report.records.back();
  report.heights_vanishing = last.weil_height <= first.weil_height + kSlack;
  double gap_first = 0, gap_last = 0;
  for (double g : first.moment_gaps) gap_first = std::max(gap_first, g);
  for (double g : last.moment_gaps) gap_last = std::max(gap_last, g);
  report.moments_converging = gap_last <= gap_first + kSlack;
  return report;
}

RamsayReport ramsay_gap_experiment(long lambda, int n_min, int n_max, double precision) {
  if (lambda < 4 || lambda % 2 != 0)
    throw std::invalid_argument("ramsay_gap_experiment: lambda must be even and >= 4");
  if (n_min < 4 || n_max < n_min)
    throw std::invalid_argument("ramsay_gap_experiment: indices must be >= 4");
  const FamilySpec fam = FamilySpec::ramsay(lambda);
  const double half_log_lambda = 0.5 * std::log(static_cast<double>(lambda));
  RamsayReport report;
  report.lambda = lambda;
  for (int n = n_min; n <= n_max; ++n) {
    RamsayRecord rec;
    rec.idx = n;
    const IntPolynomial p = family_member(fam, n);
    try {
      const RootSet roots = find_roots(p, precision);
      rec.certified = true;
      const RootEntry* inside = nullptr;
      for (const auto& e : roots.entries) {
        const double d = std::abs(e.location);
        if (d + e.radius < 1.0) {
          rec.roots_in_unit_disk += e.multiplicity;
          inside = &e;
        } else if (d - e.radius <= 1.0) {
          rec.certified = false;  // straddles the unit circle
        }
      }
      if (inside && rec.roots_in_unit_disk == 1) {
        rec.t0_abs = std::abs(inside->location);
        rec.log_t0_over_n = std::abs(std::log(rec.t0_abs)) / n;
        rec.bound_ok = rec.log_t0_over_n >= half_log_lambda;
      }
      const AtomicMeasure mu = delta_of(roots, root_bound(p));
      double inner = 0.0;
      for (const auto& a : mu.atoms())
        if (std::abs(a.location) < 1.0 && a.location != std::complex<double>(0.0, 0.0))
          inner += a.weight.get_d() * std::log(std::abs(a.location));
      rec.inner_integral = inner;
      rec.log_det = log_det_measure(mu).value;
    } catch (const RootSolveError&) {
      rec.certified = false;
    }
    report.records.push_back(rec);
  }
  return report;
}

namespace {

// DFS state for the complete-set enumeration: monic degree-n candidates with
// power sums bounded by |s_k| <= n lambda^k, plus Cauchy-Schwarz constraints
// when every root is forced real (interval targets).
struct EnumState {
  int n = 0;
  Rational lambda;                // exact modulus bound of E
  bool real_roots = false;        // interval target: all roots real
  std::vector<BigInt> a;          // a[k] = coefficient of t^(n-k), k = 1..n
  std::vector<BigInt> s;          // s[k] = power sum, k = 1..n
  std::vector<BigInt> coeff_bound;  // |a_{n-k}| <= C(n,k) floor(lambda^k)
  std::vector<Rational> sum_bound;  // n lambda^k
  long long leaves = 0;
  std::vector<IntPolynomial> found;
};

bool prune(const EnumState& st, int k) {
  const BigInt& sk = st.s[static_cast<std::size_t>(k)];
  if (Rational(sk) > st.sum_bound[static_cast<std::size_t>(k)] ||
      Rational(-sk) > st.sum_bound[static_cast<std::size_t>(k)])
    return true;
  if (st.real_roots) {
    if (k % 2 == 0) {
      if (sk < 0) return true;
      const BigInt& half = st.s[static_cast<std::size_t>(k / 2)];
      if (BigInt(st.n) * sk < half * half) return true;  // Cauchy-Schwarz
    }
  }
  return false;
}

bool contains_all_roots(const CompactSetSpec& E, const IntPolynomial& p) {
  if (E.shape() == CompactSetSpec::Shape::interval) {
    const IntPolynomial q = squarefree_part(p);
    const Rational a(E.a()), b(E.b());
    return sturm_count_closed(q, a, b) == q.degree();
  }
  // disk: certified inclusion with a small boundary slack
  const RootSet roots = find_roots(p, 1e-10);
  const std::complex<double> c(E.center(), 0.0);
  for (const auto& e : roots.entries)
    if (std::abs(e.location - c) > E.radius() + std::max(e.radius, 1e-9)) return false;
  return true;
}

void enum_dfs(EnumState& st, const CompactSetSpec& E, int k) {
  if (k > st.n) {
    if (++st.leaves > 20'000'000)
      throw EnumerationBudgetError("enumerate_complete_sets: leaf budget exceeded");
    std::vector<BigInt> c(static_cast<std::size_t>(st.n) + 1);
    c[static_cast<std::size_t>(st.n)] = 1;
    for (int i = 1; i <= st.n; ++i) c[static_cast<std::size_t>(st.n - i)] = st.a[static_cast<std::size_t>(i)];
    IntPolynomial p(std::move(c));
    if (contains_all_roots(E, p)) st.found.push_back(std::move(p));
    return;
  }
  const BigInt& bound_big = st.coeff_bound[static_cast<std::size_t>(k)];
  if (!bound_big.fits_slong_p() || bound_big.get_si() > 100'000'000L)
    throw EnumerationBudgetError("enumerate_complete_sets: coefficient bound " +
                                 bound_big.get_str() + " at degree offset " + std::to_string(k) +
                                 " exceeds the budget");
  const long bound = bound_big.get_si();
  for (long v = -bound; v <= bound; ++v) {
    st.a[static_cast<std::size_t>(k)] = v;
    // Newton: s_k = -k a_{n-k} - sum_{i=1}^{k-1} a_{n-i} s_{k-i}
    BigInt sk = BigInt(-k) * BigInt(v);
    for (int i = 1; i < k; ++i) sk -= st.a[static_cast<std::size_t>(i)] * st.s[static_cast<std::size_t>(k - i)];
    st.s[static_cast<std::size_t>(k)] = sk;
    if (prune(st, k)) continue;
    enum_dfs(st, E, k + 1);
  }
}

}  // namespace

std::vector<IntPolynomial> enumerate_complete_sets(const CompactSetSpec& E, int max_degree) {
  if (max_degree < 1) throw std::invalid_argument("enumerate_complete_sets: max_degree must be >= 1");
  if (max_degree > 10)
    throw EnumerationBudgetError(
        "enumerate_complete_sets: max_degree > 10 exceeds the coefficient-space budget");
  const auto shape = E.shape();
  if (shape != CompactSetSpec::Shape::interval && shape != CompactSetSpec::Shape::disk)
    throw UnsupportedShape("enumerate_complete_sets: supported shapes are interval and disk");

  Rational lambda;
  if (shape == CompactSetSpec::Shape::interval)
    lambda = std::max(Rational(std::abs(E.a())), Rational(std::abs(E.b())));
  else
    lambda = Rational(std::abs(E.center())) + Rational(E.radius());

  std::vector<IntPolynomial> all;
  for (int n = 1; n <= max_degree; ++n) {
    EnumState st;
    st.n = n;
    st.lambda = lambda;
    st.real_roots = shape == CompactSetSpec::Shape::interval;
    st.a.assign(static_cast<std::size_t>(n) + 1, BigInt(0));
    st.s.assign(static_cast<std::size_t>(n) + 1, BigInt(0));
    st.coeff_bound.assign(static_cast<std::size_t>(n) + 1, BigInt(0));
    st.sum_bound.assign(static_cast<std::size_t>(n) + 1, Rational(0));
    Rational lam_pow = 1;
    BigInt binom = 1;
    for (int k = 1; k <= n; ++k) {
      lam_pow *= lambda;
      binom = binom * (n - k + 1) / k;  // C(n, k), exact at each step
      Rational cb = Rational(binom) * lam_pow;
      // floor to an integer coefficient bound
      BigInt fl;
      mpz_fdiv_q(fl.get_mpz_t(), cb.get_num().get_mpz_t(), cb.get_den().get_mpz_t());
      st.coeff_bound[static_cast<std::size_t>(k)] = fl;
      st.sum_bound[static_cast<std::size_t>(k)] = Rational(n) * lam_pow;
    }
    enum_dfs(st, E, 1);
    for (auto& p : st.found) all.push_back(std::move(p));
  }

  // keep the minimal members: no lower-degree member divides them
  std::sort(all.begin(), all.end(), [](const IntPolynomial& x, const IntPolynomial& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    for (int k = x.degree(); k >= 0; --k)
      if (x.coeff(k) != y.coeff(k)) return x.coeff(k) < y.coeff(k);
    return false;
  });
  std::vector<IntPolynomial> minimal;
  for (const auto& p : all) {
    bool reducible = false;
    for (const auto& q : minimal) {
      if (q.degree() >= p.degree()) break;
      if (divide_exact(p, q)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) minimal.push_back(p);
  }
  return minimal;
}

RegularityChainReport regularity_chain_check(const IntPolynomial& p, std::complex<double> beta,
                                             double eps, double lambda, double precision) {
  if (!p.monic()) throw std::invalid_argument("regularity_chain_check: input must be monic");
  if (!(eps > 0.0 && eps < 0.5))
    throw std::invalid_argument("regularity_chain_check: eps must be in (0, 1/2)");
  if (!(lambda >= 0.5))
    throw std::invalid_argument("regularity_chain_check: lambda must be >= 1/2");

  const RootSet roots = find_roots(p, precision);
  for (const auto& e : roots.entries)
    if (std::abs(e.location) + e.radius > lambda)
      throw std::invalid_argument("regularity_chain_check: roots are not certified inside B(0, lambda)");

  RegularityChainReport rep;
  rep.degree = p.degree();
  int mass_count = 0;      // multiplicity-weighted, for delta
  int distinct_count = 0;  // distinct roots, for the pair-count exponent
  for (const auto& e : roots.entries) {
    const double d = std::abs(e.location - beta);
    if (d + e.radius < eps) {
      mass_count += e.multiplicity;
      distinct_count += 1;
    } else if (d - e.radius <= eps) {
      rep.indeterminate = true;
    }
  }
  rep.ball_count = mass_count;
  rep.delta = static_cast<double>(mass_count) / p.degree();

  const AlgebraicInvariant disc = disc_poly(p);
  const bool disc_at_least_one = abs(disc.value) >= 1;
  rep.log_disc_abs = log_of_bigint(disc.value);
  const double n = static_cast<double>(p.degree());
  rep.upper_log = static_cast<double>(distinct_count) * (distinct_count - 1) * std::log(2.0 * eps) +
                  n * n * std::log(2.0 * lambda);
  rep.holds = !rep.indeterminate && disc_at_least_one && rep.log_disc_abs <= rep.upper_log + 1e-9;
  return rep;
}

}  // namespace intmeas
