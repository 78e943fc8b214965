#include "intmeas/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "intmeas/kernels.hpp"

namespace intmeas {

namespace {

bool loc_less(const std::complex<double>& a, const std::complex<double>& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

AtomicMeasure::AtomicMeasure(std::vector<Atom> atoms, double radius_bound, double merge_tol)
    : radius_bound_(radius_bound) {
  if (atoms.empty()) throw std::invalid_argument("AtomicMeasure: no atoms");
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& a, const Atom& b) { return loc_less(a.location, b.location); });
  for (auto& a : atoms) {
    a.weight.canonicalize();
    if (a.weight <= 0) throw std::invalid_argument("AtomicMeasure: weights must be positive");
  }
  // merge clusters of nearby locations (weights added, locations averaged)
  for (const Atom& a : atoms) {
    if (!atoms_.empty()) {
      Atom& last = atoms_.back();
      if (std::abs(a.location - last.location) <= merge_tol || a.location == last.location) {
        const double wa = last.weight.get_d(), wb = a.weight.get_d();
        last.location = (last.location * wa + a.location * wb) / (wa + wb);
        last.weight += a.weight;
        continue;
      }
    }
    atoms_.push_back(a);
  }
  // weight-averaged merge locations can perturb the order slightly
  std::sort(atoms_.begin(), atoms_.end(),
            [](const Atom& a, const Atom& b) { return loc_less(a.location, b.location); });
  Rational total = 0;
  for (const auto& a : atoms_) {
    total += a.weight;
    if (std::abs(a.location) > radius_bound_ * (1.0 + 1e-12) + 1e-12)
      throw std::invalid_argument("AtomicMeasure: atom outside the radius bound");
  }
  if (total != 1) throw std::invalid_argument("AtomicMeasure: weights must sum to exactly 1");
}

AtomicMeasure AtomicMeasure::dirac(std::complex<double> z) {
  return AtomicMeasure({Atom{z, Rational(1)}}, std::abs(z));
}

std::vector<std::complex<double>> AtomicMeasure::locations() const {
  std::vector<std::complex<double>> out(atoms_.size());
  for (std::size_t i = 0; i < atoms_.size(); ++i) out[i] = atoms_[i].location;
  return out;
}

std::vector<double> AtomicMeasure::weights_as_double() const {
  std::vector<double> out(atoms_.size());
  for (std::size_t i = 0; i < atoms_.size(); ++i) out[i] = atoms_[i].weight.get_d();
  return out;
}

AtomicMeasure delta_of(const RootSet& r, double radius_bound) {
  std::vector<Atom> atoms;
  atoms.reserve(r.entries.size());
  for (const auto& e : r.entries) {
    if (std::abs(e.location) > radius_bound * (1.0 + 1e-12) + 1e-12)
      throw std::invalid_argument("delta_of: radius_bound below a root modulus");
    atoms.push_back({e.location, Rational(e.multiplicity, r.degree)});
  }
  return AtomicMeasure(std::move(atoms), radius_bound);
}

FunctionalValue log_det_measure(const AtomicMeasure& mu) {
  double s = 0.0;
  for (const auto& a : mu.atoms()) {
    if (a.location == std::complex<double>(0.0, 0.0)) continue;
    s += a.weight.get_d() * std::log(std::abs(a.location));
  }
  return {s, Functional::log_det};
}

FunctionalValue log_disc_measure(const AtomicMeasure& mu, const AtomicMeasure& nu) {
  const auto za = mu.locations();
  const auto zb = nu.locations();
  const auto wa = mu.weights_as_double();
  const auto wb = nu.weights_as_double();
  double s = kernels::cross_log_abs_sum(za, wa, zb, wb);
  return {s, Functional::log_disc};
}

double disc_functional(const AtomicMeasure& mu) { return log_disc_measure(mu, mu).value; }

FunctionalValue energy(const AtomicMeasure& mu, EnergyMode mode) {
  if (mode == EnergyMode::total) return {kInf, Functional::energy_total};
  return {-disc_functional(mu), Functional::energy_offdiag};
}

FunctionalValue free_entropy(double energy_value) {
  if (energy_value == kInf) return {-kInf, Functional::free_entropy};
  return {0.75 + 0.5 * std::log(2.0 * M_PI) - energy_value, Functional::free_entropy};
}

std::vector<std::complex<double>> moments(const AtomicMeasure& mu, int kmax) {
  if (kmax < 1) throw std::invalid_argument("moments: kmax must be >= 1");
  std::vector<std::complex<double>> out(static_cast<std::size_t>(kmax), {0.0, 0.0});
  for (const auto& a : mu.atoms()) {
    const double w = a.weight.get_d();
    std::complex<double> zp = 1.0;
    for (int k = 1; k <= kmax; ++k) {
      zp *= a.location;
      out[static_cast<std::size_t>(k - 1)] += w * zp;
    }
  }
  return out;
}

bool is_symmetric(const AtomicMeasure& mu, double tol) {
  const auto& atoms = mu.atoms();
  std::vector<bool> used(atoms.size(), false);
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (used[i]) continue;
    const std::complex<double> target = std::conj(atoms[i].location);
    bool found = false;
    for (std::size_t j = 0; j < atoms.size(); ++j) {
      if (used[j] && j != i) continue;
      if (std::abs(atoms[j].location - target) <= tol && atoms[j].weight == atoms[i].weight) {
        used[i] = used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

Rational ball_mass(const AtomicMeasure& mu, std::complex<double> center, double eps) {
  if (!(eps > 0)) throw std::invalid_argument("ball_mass: eps must be > 0");
  Rational s = 0;
  for (const auto& a : mu.atoms())
    if (std::abs(a.location - center) < eps) s += a.weight;
  return s;
}

AtomicMeasure convolve(const AtomicMeasure& mu, const AtomicMeasure& nu) {
  const double rb = mu.radius_bound() + nu.radius_bound();
  std::vector<Atom> atoms;
  atoms.reserve(mu.size() * nu.size());
  for (const auto& a : mu.atoms())
    for (const auto& b : nu.atoms())
      atoms.push_back({a.location - b.location, a.weight * b.weight});
  return AtomicMeasure(std::move(atoms), rb, 1e-9 * rb);
}

}  // namespace intmeas
