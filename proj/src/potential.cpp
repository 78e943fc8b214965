#include "intmeas/potential.hpp"

#include <algorithm>
#include <cmath>

#include "intmeas/kernels.hpp"

namespace intmeas {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<std::complex<double>> circle_points(double center, double r, int n) {
  std::vector<std::complex<double>> pts(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double th = 2.0 * kPi * k / n;
    pts[static_cast<std::size_t>(k)] = {center + r * std::cos(th), r * std::sin(th)};
  }
  return pts;
}

// All solutions of p(t) = w for each target w, warm-started around the circle
// of targets; each solve's roots are sorted for determinism.
std::vector<std::complex<double>> lemniscate_preimages(const IntPolynomial& p, double R, int n_angles) {
  const int d = p.degree();
  std::vector<std::complex<double>> base(static_cast<std::size_t>(d + 1));
  for (int k = 0; k <= d; ++k) base[static_cast<std::size_t>(k)] = p.coeff(k).get_d();
  std::vector<std::complex<double>> out;
  out.reserve(static_cast<std::size_t>(n_angles) * static_cast<std::size_t>(d));
  std::vector<std::complex<double>> warm;
  for (int k = 0; k < n_angles; ++k) {
    const double th = 2.0 * kPi * k / n_angles;
    auto coeffs = base;
    coeffs[0] -= std::polar(R, th);
    auto roots = kernels::aberth_roots(coeffs, 1e-13, 120, warm.empty() ? nullptr : &warm);
    warm = roots;
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
      if (a.real() != b.real()) return a.real() < b.real();
      return a.imag() < b.imag();
    });
    out.insert(out.end(), roots.begin(), roots.end());
  }
  return out;
}

}  // namespace

CompactSetSpec CompactSetSpec::disk(double center, double r) {
  if (!(r > 0)) throw std::invalid_argument("disk: radius must be > 0");
  CompactSetSpec e;
  e.shape_ = Shape::disk;
  e.center_ = center;
  e.radius_ = r;
  return e;
}

CompactSetSpec CompactSetSpec::circle(double r) {
  if (!(r > 0)) throw std::invalid_argument("circle: radius must be > 0");
  CompactSetSpec e;
  e.shape_ = Shape::circle;
  e.radius_ = r;
  return e;
}

CompactSetSpec CompactSetSpec::interval(double a, double b) {
  if (!(a < b)) throw std::invalid_argument("interval: requires a < b");
  CompactSetSpec e;
  e.shape_ = Shape::interval;
  e.a_ = a;
  e.b_ = b;
  return e;
}

CompactSetSpec CompactSetSpec::lemniscate(IntPolynomial p, double R) {
  if (!(R > 0)) throw std::invalid_argument("lemniscate: level must be > 0");
  if (!p.monic() || p.degree() < 1)
    throw std::invalid_argument("lemniscate: polynomial must be monic of degree >= 1");
  CompactSetSpec e;
  e.shape_ = Shape::lemniscate;
  e.poly_ = std::move(p);
  e.level_ = R;
  return e;
}

CompactSetSpec CompactSetSpec::cloud(std::vector<std::complex<double>> points) {
  if (points.empty()) throw std::invalid_argument("cloud: no points");
  // conjugation symmetry up to float noise
  for (const auto& z : points) {
    const auto zc = std::conj(z);
    bool found = false;
    for (const auto& w : points)
      if (std::abs(w - zc) <= 1e-12 * (1.0 + std::abs(z))) {
        found = true;
        break;
      }
    if (!found) throw std::invalid_argument("cloud: point set is not conjugation-symmetric");
  }
  CompactSetSpec e;
  e.shape_ = Shape::cloud;
  e.cloud_ = std::move(points);
  return e;
}

const IntPolynomial& CompactSetSpec::lem_poly() const {
  if (!poly_) throw UnsupportedShape("lemniscate polynomial requested for a non-lemniscate shape");
  return *poly_;
}

const std::vector<std::complex<double>>& CompactSetSpec::discretization(int grid_size) const {
  if (grid_size < 2) throw std::invalid_argument("discretization: grid size too small");
  if (grid_n_ == grid_size && !grid_.empty()) return grid_;
  grid_n_ = grid_size;
  switch (shape_) {
    case Shape::disk:
      grid_ = circle_points(center_, radius_, grid_size);
      break;
    case Shape::circle:
      grid_ = circle_points(0.0, radius_, grid_size);
      break;
    case Shape::interval: {
      grid_.assign(static_cast<std::size_t>(grid_size), {});
      for (int k = 0; k < grid_size; ++k)
        grid_[static_cast<std::size_t>(k)] = {a_ + (b_ - a_) * k / (grid_size - 1), 0.0};
      break;
    }
    case Shape::lemniscate: {
      const int d = poly_->degree();
      const int angles = std::max(1, grid_size / d);
      grid_ = lemniscate_preimages(*poly_, level_, angles);
      break;
    }
    case Shape::cloud:
      grid_ = cloud_;
      break;
  }
  return grid_;
}

double CompactSetSpec::modulus_bound() const {
  switch (shape_) {
    case Shape::disk:
      return std::abs(center_) + radius_;
    case Shape::circle:
      return radius_;
    case Shape::interval:
      return std::max(std::abs(a_), std::abs(b_));
    case Shape::lemniscate: {
      // |p(z)| = R forces |z| <= root_bound(p - R) style bound; use the Cauchy
      // bound of p with the constant shifted by R.
      double mx = 0.0;
      for (int k = 0; k < poly_->degree(); ++k)
        mx = std::max(mx, std::abs(poly_->coeff(k).get_d()) + (k == 0 ? level_ : 0.0));
      return 1.0 + mx;
    }
    case Shape::cloud: {
      double mx = 0.0;
      for (const auto& z : cloud_) mx = std::max(mx, std::abs(z));
      return mx;
    }
  }
  return 0.0;
}

double green_value(const CompactSetSpec& E, std::complex<double> z) {
  switch (E.shape()) {
    case CompactSetSpec::Shape::disk:
    case CompactSetSpec::Shape::circle: {
      const double c = E.shape() == CompactSetSpec::Shape::circle ? 0.0 : E.center();
      const double d = std::abs(z - std::complex<double>(c, 0.0));
      return d <= E.radius() ? 0.0 : std::log(d / E.radius());
    }
    case CompactSetSpec::Shape::interval: {
      const std::complex<double> w = (2.0 * z - E.a() - E.b()) / (E.b() - E.a());
      // |w + sqrt(w^2-1)| with the branch of modulus >= 1
      const std::complex<double> s = std::sqrt(w * w - 1.0);
      const double mag = std::max(std::abs(w + s), std::abs(w - s));
      return std::max(0.0, std::log(mag));
    }
    case CompactSetSpec::Shape::lemniscate: {
      const double pv = std::abs(E.lem_poly().eval(z));
      if (pv <= E.lem_level()) return 0.0;
      return (std::log(pv) - std::log(E.lem_level())) / E.lem_poly().degree();
    }
    case CompactSetSpec::Shape::cloud:
      throw UnsupportedShape("green_value: no closed form for cloud shapes");
  }
  return 0.0;
}

CapacityEstimate capacity_explicit(const CompactSetSpec& E) {
  CapacityEstimate out;
  out.method = CapacityEstimate::Method::explicit_form;
  switch (E.shape()) {
    case CompactSetSpec::Shape::disk:
    case CompactSetSpec::Shape::circle:
      out.value = E.radius();
      return out;
    case CompactSetSpec::Shape::interval:
      out.value = (E.b() - E.a()) / 4.0;
      return out;
    case CompactSetSpec::Shape::lemniscate:
      out.value = std::pow(E.lem_level(), 1.0 / E.lem_poly().degree());
      return out;
    case CompactSetSpec::Shape::cloud:
      throw UnsupportedShape("capacity_explicit: no closed form for cloud shapes");
  }
  return out;
}

std::vector<std::complex<double>> leja_points(const CompactSetSpec& E, int n, int grid_size) {
  const auto& grid = E.discretization(grid_size);
  if (n < 2) throw std::invalid_argument("leja_points: n must be >= 2");
  if (static_cast<std::size_t>(n) > grid.size())
    throw std::invalid_argument("leja_points: n exceeds the discretization size");
  std::vector<double> acc(grid.size(), 0.0);
  std::vector<std::complex<double>> chosen;
  chosen.reserve(static_cast<std::size_t>(n));
  // empty products tie at 1; the tie rule picks the first candidate
  chosen.push_back(grid[0]);
  while (chosen.size() < static_cast<std::size_t>(n)) {
    const std::size_t idx = kernels::leja_step(grid, acc, chosen.back());
    chosen.push_back(grid[idx]);
  }
  return chosen;
}

CapacityEstimate capacity_leja(const CompactSetSpec& E, int n, int grid_size) {
  if (n < 4) throw std::invalid_argument("capacity_leja: n must be >= 4");
  auto pts = leja_points(E, n, grid_size);
  // degenerate discretization: all points equal
  bool degenerate = true;
  for (const auto& z : pts)
    if (z != pts[0]) {
      degenerate = false;
      break;
    }
  if (degenerate) throw std::invalid_argument("capacity_leja: degenerate discretization");
  auto estimate = [&](int k) {
    const double s =
        kernels::pairwise_log_abs_sum(std::span<const std::complex<double>>(pts.data(), k));
    return std::exp(2.0 * s / (static_cast<double>(k) * (k - 1)));
  };
  CapacityEstimate out;
  out.method = CapacityEstimate::Method::leja;
  out.n_points = n;
  out.value = estimate(n);
  out.trend = out.value - estimate(n / 2);
  return out;
}

AtomicMeasure equilibrium_discretized(const CompactSetSpec& E, int n) {
  if (n < 1) throw std::invalid_argument("equilibrium_discretized: n must be >= 1");
  switch (E.shape()) {
    case CompactSetSpec::Shape::disk:
    case CompactSetSpec::Shape::circle: {
      const double c = E.shape() == CompactSetSpec::Shape::circle ? 0.0 : E.center();
      std::vector<Atom> atoms;
      atoms.reserve(static_cast<std::size_t>(n));
      for (const auto& z : circle_points(c, E.radius(), n)) atoms.push_back({z, Rational(1, n)});
      return AtomicMeasure(std::move(atoms), std::abs(c) + E.radius());
    }
    case CompactSetSpec::Shape::interval: {
      // midpoint rule in the cosine parametrization: arcsine quantiles
      const double mid = 0.5 * (E.a() + E.b()), half = 0.5 * (E.b() - E.a());
      std::vector<Atom> atoms;
      atoms.reserve(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) {
        const double th = kPi * (j + 0.5) / n;
        atoms.push_back({{mid + half * std::cos(th), 0.0}, Rational(1, n)});
      }
      return AtomicMeasure(std::move(atoms), std::max(std::abs(E.a()), std::abs(E.b())));
    }
    case CompactSetSpec::Shape::lemniscate: {
      const auto pts = lemniscate_preimages(E.lem_poly(), E.lem_level(), n);
      std::vector<Atom> atoms;
      atoms.reserve(pts.size());
      double rb = 0.0;
      for (const auto& z : pts) rb = std::max(rb, std::abs(z));
      for (const auto& z : pts)
        atoms.push_back({z, Rational(1, static_cast<unsigned long>(pts.size()))});
      return AtomicMeasure(std::move(atoms), rb);
    }
    case CompactSetSpec::Shape::cloud:
      throw UnsupportedShape("equilibrium_discretized: no closed form for cloud shapes");
  }
  throw UnsupportedShape("equilibrium_discretized: unsupported shape");
}

double weil_height(const CompactSetSpec& E, const RootSet& r) {
  double s = 0.0;
  for (const auto& e : r.entries) s += e.multiplicity * green_value(E, e.location);
  return s / r.degree;
}

}  // namespace intmeas
