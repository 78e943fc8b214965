// Command-line front end: analyze, capacity, equilibrium, converge, ramsay,
// enumerate, wasserstein, plus the config-driven `experiment` runner.
// Exit codes: 0 ok/pass, 1 experiment failure, 2 input error, 3 config error.

#include <omp.h>

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "intmeas/families.hpp"
#include "intmeas/json_io.hpp"
#include "intmeas/polytext.hpp"
#include "intmeas/transport.hpp"

namespace fs = std::filesystem;
using namespace intmeas;

namespace {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  double precision = 1e-10;
  int grid = 10000;
  std::string out;
  std::vector<std::string> formats{"json"};
  int threads = 0;
};

void validate_global(const Options& o) {
  if (!(o.precision > 0.0 && o.precision <= 1e-4))
    throw ConfigError("--precision must lie in (0, 1e-4]");
  if (o.grid < 1000 || o.grid > 1000000) throw ConfigError("--grid must lie in [1e3, 1e6]");
  for (const auto& f : o.formats)
    if (f != "json" && f != "csv" && f != "svg")
      throw ConfigError("--format accepts json, csv, svg");
  if (!o.out.empty()) {
    fs::create_directories(o.out);
    if (!fs::is_directory(o.out)) throw ConfigError("--out is not a writable directory");
  }
}

bool wants(const Options& o, const std::string& f) {
  return std::find(o.formats.begin(), o.formats.end(), f) != o.formats.end();
}

void write_file(const Options& o, const std::string& name, const std::string& content) {
  if (o.out.empty()) return;
  std::ofstream out(fs::path(o.out) / name, std::ios::binary);
  out << content;
}

// shapes in compact form: circle(1), disk(0,0.9), interval(-2,2),
// lemniscate(t^2-2,4)
CompactSetSpec parse_set(const std::string& text) {
  const auto open = text.find('(');
  if (open == std::string::npos || text.back() != ')')
    throw std::invalid_argument("set spec must look like shape(args): " + text);
  const std::string shape = text.substr(0, open);
  const std::string args = text.substr(open + 1, text.size() - open - 2);
  std::vector<std::string> parts;
  std::string cur;
  for (char c : args) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  auto num = [](const std::string& s) { return std::stod(s); };
  if (shape == "circle" && parts.size() == 1) return CompactSetSpec::circle(num(parts[0]));
  if (shape == "disk" && parts.size() == 2) return CompactSetSpec::disk(num(parts[0]), num(parts[1]));
  if (shape == "interval" && parts.size() == 2)
    return CompactSetSpec::interval(num(parts[0]), num(parts[1]));
  if (shape == "lemniscate" && parts.size() == 2)
    return CompactSetSpec::lemniscate(parse_poly(parts[0]), num(parts[1]));
  throw std::invalid_argument("unknown set spec: " + text);
}

FamilySpec parse_family(const std::string& text) {
  if (text == "roots_of_unity") return FamilySpec::roots_of_unity();
  if (text == "chebyshev_path") return FamilySpec::chebyshev_path();
  const auto open = text.find('(');
  if (open != std::string::npos && text.back() == ')') {
    const std::string name = text.substr(0, open);
    const std::string args = text.substr(open + 1, text.size() - open - 2);
    std::vector<std::string> parts;
    std::string cur;
    for (char c : args) {
      if (c == ',') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    parts.push_back(cur);
    if (name == "ramsay" && parts.size() == 1) return FamilySpec::ramsay(std::stol(parts[0]));
    if (name == "lemniscate_power" && parts.size() == 3)
      return FamilySpec::lemniscate_power(parse_poly(parts[0]), std::stol(parts[1]),
                                          std::stol(parts[2]));
  }
  throw std::invalid_argument("unknown family spec: " + text);
}

// "8,16,32" | "6:40" (step 1) | "8:256:x2" (geometric) | "4:40:+4"
std::vector<int> parse_indices(const std::string& text) {
  std::vector<int> out;
  if (text.find(':') == std::string::npos) {
    std::string cur;
    for (char c : text + ",") {
      if (c == ',') {
        if (!cur.empty()) out.push_back(std::stoi(cur));
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    return out;
  }
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text + ":") {
    if (c == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  const int lo = std::stoi(parts.at(0)), hi = std::stoi(parts.at(1));
  int add = 1, mulf = 1;
  if (parts.size() > 2) {
    const std::string& step = parts[2];
    if (!step.empty() && step[0] == 'x')
      mulf = std::stoi(step.substr(1));
    else if (!step.empty() && step[0] == '+')
      add = std::stoi(step.substr(1));
    else
      add = std::stoi(step);
  }
  for (int v = lo; v <= hi; v = (mulf > 1 ? v * mulf : v + add)) out.push_back(v);
  return out;
}

json analyze_report(const IntPolynomial& p, const Options& o) {
  if (!p.monic()) throw std::invalid_argument("analyze: polynomial must be monic");
  const RootSet roots = find_roots(p, o.precision);
  const AtomicMeasure mu = delta_of(roots, root_bound(p));
  const auto det = det_poly(p);
  const auto disc = disc_poly(p);
  const CompactSetSpec unit = CompactSetSpec::disk(0.0, 1.0);
  json rep;
  rep["input"] = to_string(p);
  rep["coeffs"] = poly_to_json(p);
  rep["degree"] = p.degree();
  rep["roots"] = rootset_to_json(roots);
  rep["det"] = det.value.get_str();
  rep["disc"] = disc.value.get_str();
  rep["log_det"] = log_det_measure(mu).value;
  rep["disc_functional"] = disc_functional(mu);
  rep["offdiag_energy"] = energy(mu, EnergyMode::offdiag).value;
  rep["mahler_height"] = weil_height(unit, roots);
  rep["symmetric"] = is_symmetric(mu, 1e-9);
  return rep;
}

int emit(const Options& o, const json& rep, bool pass_flag = true) {
  std::cout << rep.dump(2) << "\n";
  if (wants(o, "json")) write_file(o, "report.json", rep.dump(2) + "\n");
  return pass_flag ? 0 : 1;
}

int run_experiment_config(const Options& o, const std::string& path);

int dispatch(const Options& o, const std::string& cmd, CLI::App* sub) {
  if (cmd == "analyze") {
    const auto poly = sub->get_option("poly")->as<std::string>();
    return emit(o, analyze_report(parse_poly(poly), o));
  }
  if (cmd == "capacity") {
    const auto set = parse_set(sub->get_option("--set")->as<std::string>());
    const int n = sub->get_option("-n")->as<int>();
    json rep;
    try {
      rep["explicit"] = capacity_to_json(capacity_explicit(set));
    } catch (const UnsupportedShape&) {
      rep["explicit"] = nullptr;
    }
    rep["leja"] = capacity_to_json(capacity_leja(set, n, o.grid));
    return emit(o, rep);
  }
  if (cmd == "equilibrium") {
    const auto set = parse_set(sub->get_option("--set")->as<std::string>());
    const int n = sub->get_option("-n")->as<int>();
    const AtomicMeasure mu = equilibrium_discretized(set, n);
    json rep = measure_to_json(mu);
    if (wants(o, "csv")) write_file(o, "measure.csv", measure_to_csv(mu));
    return emit(o, rep);
  }
  if (cmd == "converge") {
    const auto fam = parse_family(sub->get_option("--family")->as<std::string>());
    const auto target = parse_set(sub->get_option("--target")->as<std::string>());
    const auto indices = parse_indices(sub->get_option("--indices")->as<std::string>());
    const ConvergenceReport rep = run_convergence(fam, indices, target, o.precision);
    if (wants(o, "csv")) write_file(o, "series.csv", convergence_to_csv(rep));
    if (wants(o, "svg") && !indices.empty()) {
      const IntPolynomial last = family_member(fam, indices.back());
      const RootSet roots = find_roots(last, o.precision);
      std::vector<std::complex<double>> a;
      for (const auto& e : roots.entries) a.push_back(e.location);
      int eq_n = last.degree();
      if (target.shape() == CompactSetSpec::Shape::lemniscate)
        eq_n = std::max(1, last.degree() / target.lem_poly().degree());
      write_file(o, "scatter.svg",
                 scatter_svg(a, equilibrium_discretized(target, eq_n).locations()));
    }
    return emit(o, convergence_to_json(rep), rep.pass());
  }
  if (cmd == "ramsay") {
    const long lambda = sub->get_option("--lambda")->as<long>();
    const int lo = sub->get_option("--min")->as<int>();
    const int hi = sub->get_option("--max")->as<int>();
    const RamsayReport rep = ramsay_gap_experiment(lambda, lo, hi, o.precision);
    if (wants(o, "csv")) write_file(o, "series.csv", ramsay_to_csv(rep));
    return emit(o, ramsay_to_json(rep), rep.pass());
  }
  if (cmd == "enumerate") {
    const auto set = parse_set(sub->get_option("--set")->as<std::string>());
    const int maxdeg = sub->get_option("--max-degree")->as<int>();
    const auto list = enumerate_complete_sets(set, maxdeg);
    json arr = json::array();
    for (const auto& p : list) arr.push_back({{"poly", to_string(p)}, {"coeffs", poly_to_json(p)}});
    json rep = {{"count", list.size()}, {"orbit_sets", arr}};
    return emit(o, rep);
  }
  if (cmd == "wasserstein") {
    std::optional<AtomicMeasure> ma, mb;
    const auto file_a = sub->get_option("--measure-a")->as<std::string>();
    const auto file_b = sub->get_option("--measure-b")->as<std::string>();
    const auto pa = sub->get_option("polys")->as<std::vector<std::string>>();
    if (!file_a.empty() && !file_b.empty()) {
      std::ifstream fa(file_a), fb(file_b);
      if (!fa || !fb) throw std::invalid_argument("wasserstein: cannot open measure file");
      json ja, jb;
      fa >> ja;
      fb >> jb;
      ma = measure_from_json(ja);
      mb = measure_from_json(jb);
    } else if (pa.size() == 2) {
      const IntPolynomial p = parse_poly(pa[0]), q = parse_poly(pa[1]);
      ma = delta_of(find_roots(p, o.precision), root_bound(p));
      mb = delta_of(find_roots(q, o.precision), root_bound(q));
    } else {
      throw std::invalid_argument("wasserstein: give two polynomials or --measure-a/--measure-b");
    }
    auto [dist, plan] = w1_distance(*ma, *mb);
    json rep = {{"distance", dist}, {"plan", plan_to_json(plan)}};
    return emit(o, rep);
  }
  if (cmd == "experiment") {
    return run_experiment_config(o, sub->get_option("config")->as<std::string>());
  }
  throw ConfigError("unknown command " + cmd);
}

int run_experiment_config(const Options& o, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("experiment: cannot open config " + path);
  json cfg;
  try {
    in >> cfg;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("experiment: config is not valid JSON: ") + e.what());
  }
  try {
    const std::string kind = cfg.at("experiment").get<std::string>();
    if (kind == "ramsay") {
      const RamsayReport rep = ramsay_gap_experiment(cfg.at("lambda").get<long>(),
                                                     cfg.at("n_min").get<int>(),
                                                     cfg.at("n_max").get<int>(), o.precision);
      if (wants(o, "csv")) write_file(o, "series.csv", ramsay_to_csv(rep));
      return emit(o, ramsay_to_json(rep), rep.pass());
    }
    if (kind == "converge") {
      const json& f = cfg.at("family");
      FamilySpec fam = FamilySpec::roots_of_unity();
      const std::string fk = f.at("kind").get<std::string>();
      if (fk == "roots_of_unity")
        fam = FamilySpec::roots_of_unity();
      else if (fk == "chebyshev_path")
        fam = FamilySpec::chebyshev_path();
      else if (fk == "ramsay")
        fam = FamilySpec::ramsay(f.at("lambda").get<long>());
      else if (fk == "lemniscate_power")
        fam = FamilySpec::lemniscate_power(poly_from_json(f.at("q")), f.at("m").get<long>(),
                                           f.at("k").get<long>());
      else
        throw ConfigError("experiment: unknown family kind " + fk);
      const CompactSetSpec target = setspec_from_json(cfg.at("target"));
      const std::vector<int> indices = cfg.at("indices").get<std::vector<int>>();
      const ConvergenceReport rep = run_convergence(fam, indices, target, o.precision);
      if (wants(o, "csv")) write_file(o, "series.csv", convergence_to_csv(rep));
      return emit(o, convergence_to_json(rep), rep.pass());
    }
    if (kind == "enumerate") {
      const CompactSetSpec set = setspec_from_json(cfg.at("set"));
      const auto list = enumerate_complete_sets(set, cfg.at("max_degree").get<int>());
      json arr = json::array();
      for (const auto& p : list)
        arr.push_back({{"poly", to_string(p)}, {"coeffs", poly_to_json(p)}});
      json rep = {{"count", list.size()}, {"orbit_sets", arr}};
      bool pass = true;
      if (cfg.contains("expect_count")) pass = cfg["expect_count"].get<std::size_t>() == list.size();
      rep["pass"] = pass;
      return emit(o, rep, pass);
    }
    throw ConfigError("experiment: unknown experiment kind " + kind);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("experiment: config schema violation: ") + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariants of integer polynomials and their root measures"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--precision", o.precision, "root certification radius target, in (0, 1e-4]");
  app.add_option("--grid", o.grid, "boundary discretization size, in [1e3, 1e6]");
  app.add_option("--out", o.out, "output directory for report files");
  app.add_option("--format", o.formats, "output formats: json csv svg")->delimiter(',');
  app.add_option("--threads", o.threads, "OpenMP thread cap (results are thread-count independent)");

  auto* an = app.add_subcommand("analyze", "roots and algebraic invariants of a monic polynomial");
  an->add_option("poly", "polynomial, e.g. \"t^2-2\"")->required();
  auto* cap = app.add_subcommand("capacity", "explicit and Leja capacity of a compact set");
  cap->add_option("--set", "set spec, e.g. circle(1)")->required();
  cap->add_option("-n", "Leja configuration size")->default_val(256);
  auto* eq = app.add_subcommand("equilibrium", "equilibrium-measure discretization");
  eq->add_option("--set", "set spec")->required();
  eq->add_option("-n", "atom count")->default_val(256);
  auto* cv = app.add_subcommand("converge", "equidistribution experiment for a family");
  cv->add_option("--family", "family spec, e.g. roots_of_unity or ramsay(4)")->required();
  cv->add_option("--target", "target set spec")->required();
  cv->add_option("--indices", "e.g. 8,16,32 or 8:256:x2")->required();
  auto* ra = app.add_subcommand("ramsay", "log-det discontinuity experiment");
  ra->add_option("--lambda", "even lambda >= 4")->default_val(4L);
  ra->add_option("--min", "first index")->default_val(6);
  ra->add_option("--max", "last index")->default_val(40);
  auto* en = app.add_subcommand("enumerate", "complete root sets inside a compact set");
  en->add_option("--set", "set spec (interval or disk)")->required();
  en->add_option("--max-degree", "enumeration degree cap (<= 10)")->default_val(6);
  auto* wa = app.add_subcommand("wasserstein", "W1 distance between two root measures");
  wa->add_option("polys", "two polynomials")->expected(2);
  wa->add_option("--measure-a", "measure JSON file")->default_val(std::string{});
  wa->add_option("--measure-b", "measure JSON file")->default_val(std::string{});
  auto* ex = app.add_subcommand("experiment", "run a JSON experiment config");
  ex->add_option("config", "config path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    validate_global(o);
    if (o.threads > 0) omp_set_num_threads(o.threads);
    for (auto* sub : {an, cap, eq, cv, ra, en, wa, ex})
      if (sub->parsed()) return dispatch(o, sub->get_name(), sub);
    throw ConfigError("no subcommand given");
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 3;
  } catch (const EnumerationBudgetError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 3;
  } catch (const RootSolveError& e) {
    std::cerr << "experiment failure: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
