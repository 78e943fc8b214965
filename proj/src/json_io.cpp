#include "intmeas/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "intmeas/polytext.hpp"

namespace intmeas {

namespace {

// fixed shortest-roundtrip formatting keeps CSV output byte-stable
std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

json poly_to_json(const IntPolynomial& p) {
  json arr = json::array();
  for (int k = 0; k <= p.degree(); ++k) arr.push_back(p.coeff(k).get_str());
  return arr;
}

IntPolynomial poly_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    throw PolyParseError("polynomial JSON must be a nonempty array of integer strings");
  std::vector<BigInt> c;
  c.reserve(j.size());
  for (const auto& v : j) {
    if (v.is_string())
      c.emplace_back(v.get<std::string>());
    else if (v.is_number_integer())
      c.emplace_back(static_cast<long>(v.get<long long>()));
    else
      throw PolyParseError("polynomial JSON entries must be integer strings");
  }
  return IntPolynomial(std::move(c));
}

json rootset_to_json(const RootSet& r) {
  json arr = json::array();
  for (const auto& e : r.entries)
    arr.push_back({{"re", e.location.real()},
                   {"im", e.location.imag()},
                   {"mult", e.multiplicity},
                   {"radius", e.radius}});
  return {{"degree", r.degree}, {"roots", arr}};
}

json measure_to_json(const AtomicMeasure& mu) {
  json atoms = json::array();
  for (const auto& a : mu.atoms())
    atoms.push_back({{"re", a.location.real()},
                     {"im", a.location.imag()},
                     {"num", a.weight.get_num().get_str()},
                     {"den", a.weight.get_den().get_str()}});
  return {{"atoms", atoms}, {"radius_bound", mu.radius_bound()}};
}

AtomicMeasure measure_from_json(const json& j) {
  if (!j.contains("atoms") || !j["atoms"].is_array())
    throw std::invalid_argument("measure JSON must contain an atoms array");
  std::vector<Atom> atoms;
  for (const auto& a : j["atoms"]) {
    Rational w(BigInt(a.at("num").get<std::string>()), BigInt(a.at("den").get<std::string>()));
    atoms.push_back({{a.at("re").get<double>(), a.at("im").get<double>()}, w});
  }
  const double rb = j.at("radius_bound").get<double>();
  return AtomicMeasure(std::move(atoms), rb, 1e-9 * rb);
}

std::string measure_to_csv(const AtomicMeasure& mu) {
  std::ostringstream os;
  os << "re,im,weight\n";
  for (const auto& a : mu.atoms())
    os << fmt(a.location.real()) << "," << fmt(a.location.imag()) << "," << fmt(a.weight.get_d())
       << "\n";
  return os.str();
}

json setspec_to_json(const CompactSetSpec& e, int grid_size) {
  json params;
  std::string shape;
  switch (e.shape()) {
    case CompactSetSpec::Shape::disk:
      shape = "disk";
      params = {{"center", e.center()}, {"r", e.radius()}};
      break;
    case CompactSetSpec::Shape::circle:
      shape = "circle";
      params = {{"r", e.radius()}};
      break;
    case CompactSetSpec::Shape::interval:
      shape = "interval";
      params = {{"a", e.a()}, {"b", e.b()}};
      break;
    case CompactSetSpec::Shape::lemniscate:
      shape = "lemniscate";
      params = {{"p", poly_to_json(e.lem_poly())}, {"R", e.lem_level()}};
      break;
    case CompactSetSpec::Shape::cloud: {
      shape = "cloud";
      json pts = json::array();
      for (const auto& z : e.cloud_points()) pts.push_back({{"re", z.real()}, {"im", z.imag()}});
      params = {{"points", pts}};
      break;
    }
  }
  return {{"shape", shape}, {"params", params}, {"grid_size", grid_size}};
}

CompactSetSpec setspec_from_json(const json& j) {
  const std::string shape = j.at("shape").get<std::string>();
  const json& p = j.at("params");
  if (shape == "disk") return CompactSetSpec::disk(p.at("center").get<double>(), p.at("r").get<double>());
  if (shape == "circle") return CompactSetSpec::circle(p.at("r").get<double>());
  if (shape == "interval")
    return CompactSetSpec::interval(p.at("a").get<double>(), p.at("b").get<double>());
  if (shape == "lemniscate")
    return CompactSetSpec::lemniscate(poly_from_json(p.at("p")), p.at("R").get<double>());
  if (shape == "cloud") {
    std::vector<std::complex<double>> pts;
    for (const auto& z : p.at("points"))
      pts.emplace_back(z.at("re").get<double>(), z.at("im").get<double>());
    return CompactSetSpec::cloud(std::move(pts));
  }
  throw std::invalid_argument("setspec_from_json: unknown shape " + shape);
}

json capacity_to_json(const CapacityEstimate& c) {
  return {{"method", c.method == CapacityEstimate::Method::leja ? "leja" : "explicit"},
          {"n", c.n_points},
          {"value", c.value},
          {"trend", c.trend}};
}

json plan_to_json(const TransportPlan& plan) {
  json entries = json::array();
  for (const auto& e : plan.entries)
    entries.push_back({{"source", e.source},
                       {"target", e.target},
                       {"num", e.mass.get_num().get_str()},
                       {"den", e.mass.get_den().get_str()}});
  return {{"entries", entries}, {"cost", plan.cost}};
}

json convergence_to_json(const ConvergenceReport& r) {
  json recs = json::array();
  for (const auto& rec : r.records) {
    json gaps = json::array();
    for (double g : rec.moment_gaps) gaps.push_back(g);
    recs.push_back({{"idx", rec.idx},
                    {"w1_to_target", rec.w1_to_target},
                    {"moment_gaps", gaps},
                    {"weil_height", rec.weil_height},
                    {"offdiag_energy", rec.offdiag_energy},
                    {"log_det", rec.log_det},
                    {"solved", rec.solved}});
  }
  return {{"records", recs},
          {"verdicts",
           {{"w1_decreasing", r.w1_decreasing},
            {"heights_vanishing", r.heights_vanishing},
            {"moments_converging", r.moments_converging},
            {"all_solved", r.all_solved},
            {"pass", r.pass()}}}};
}

std::string convergence_to_csv(const ConvergenceReport& r) {
  std::ostringstream os;
  os << "idx,w1_to_target,weil_height,offdiag_energy,log_det,solved\n";
  for (const auto& rec : r.records)
    os << rec.idx << "," << fmt(rec.w1_to_target) << "," << fmt(rec.weil_height) << ","
       << fmt(rec.offdiag_energy) << "," << fmt(rec.log_det) << "," << (rec.solved ? 1 : 0)
       << "\n";
  return os.str();
}

json ramsay_to_json(const RamsayReport& r) {
  json recs = json::array();
  for (const auto& rec : r.records)
    recs.push_back({{"idx", rec.idx},
                    {"roots_in_unit_disk", rec.roots_in_unit_disk},
                    {"certified", rec.certified},
                    {"t0_abs", rec.t0_abs},
                    {"log_t0_over_n", rec.log_t0_over_n},
                    {"inner_integral", rec.inner_integral},
                    {"log_det", rec.log_det},
                    {"bound_ok", rec.bound_ok}});
  return {{"lambda", r.lambda}, {"records", recs}, {"pass", r.pass()}};
}

std::string ramsay_to_csv(const RamsayReport& r) {
  std::ostringstream os;
  os << "idx,roots_in_unit_disk,certified,t0_abs,log_t0_over_n,inner_integral,log_det,bound_ok\n";
  for (const auto& rec : r.records)
    os << rec.idx << "," << rec.roots_in_unit_disk << "," << (rec.certified ? 1 : 0) << ","
       << fmt(rec.t0_abs) << "," << fmt(rec.log_t0_over_n) << "," << fmt(rec.inner_integral) << ","
       << fmt(rec.log_det) << "," << (rec.bound_ok ? 1 : 0) << "\n";
  return os.str();
}

std::string scatter_svg(const std::vector<std::complex<double>>& a,
                        const std::vector<std::complex<double>>& b) {
  double lo = -1, hi = 1;
  for (const auto& z : a) {
    lo = std::min({lo, z.real(), z.imag()});
    hi = std::max({hi, z.real(), z.imag()});
  }
  for (const auto& z : b) {
    lo = std::min({lo, z.real(), z.imag()});
    hi = std::max({hi, z.real(), z.imag()});
  }
  const double pad = 0.05 * (hi - lo);
  lo -= pad;
  hi += pad;
  const double w = 640.0;
  auto X = [&](double x) { return (x - lo) / (hi - lo) * w; };
  auto Y = [&](double y) { return w - (y - lo) / (hi - lo) * w; };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
        "viewBox=\"0 0 640 640\">\n";
  os << "<rect width=\"640\" height=\"640\" fill=\"white\"/>\n";
  for (const auto& z : b)
    os << "<circle cx=\"" << fmt(X(z.real())) << "\" cy=\"" << fmt(Y(z.imag()))
       << "\" r=\"4\" fill=\"none\" stroke=\"#1f77b4\"/>\n";
  for (const auto& z : a)
    os << "<circle cx=\"" << fmt(X(z.real())) << "\" cy=\"" << fmt(Y(z.imag()))
       << "\" r=\"2\" fill=\"#d62728\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace intmeas
