#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <random>
#include <regex>
#include <sstream>

#include <CLI11.hpp>
#include <omp.h>

#include "ihara/errors.hpp"
#include "ihara/io.hpp"
#include "manifest.hpp"

namespace ihara::cli {

namespace fs = std::filesystem;
using json = nlohmann::json;

std::complex<double> parse_complex(const std::string& text) {
  static const std::regex real_only(R"(\s*([-+]?[0-9.]+(?:[eE][-+]?[0-9]+)?)\s*)");
  static const std::regex imag_only(R"(\s*([-+]?[0-9.]*(?:[eE][-+]?[0-9]+)?)i\s*)");
  static const std::regex both(
      R"(\s*([-+]?[0-9.]+(?:[eE][-+]?[0-9]+)?)\s*([-+])\s*([0-9.]*(?:[eE][-+]?[0-9]+)?)i\s*)");
  auto number = [&](const std::string& s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    std::size_t used = 0;
    const double x = std::stod(s, &used);
    if (used != s.size()) throw InputError("cannot parse number '" + s + "'");
    return x;
  };
  std::smatch m;
  try {
    if (std::regex_match(text, m, real_only)) return {number(m[1]), 0.0};
    if (std::regex_match(text, m, imag_only)) return {0.0, number(m[1])};
    if (std::regex_match(text, m, both)) {
      const double im = number(m[3]);
      return {number(m[1]), m[2] == "-" ? -im : im};
    }
  } catch (const std::logic_error&) {
  }
  throw InputError("cannot parse complex number '" + text + "'");
}

GridSpec parse_grid(const std::string& text, int q) {
  static const std::regex disk(R"(disk:([^:]+):([0-9]+):([^:]+))");
  std::smatch m;
  if (!std::regex_match(text, m, disk)) {
    throw InputError("grid must look like disk:<radius>:<resolution>:<margin>, got '" + text + "'");
  }
  try {
    GridSpec g{q, std::stod(m[1]), static_cast<std::size_t>(std::stoul(m[2])), std::stod(m[3])};
    g.validate();
    return g;
  } catch (const std::logic_error&) {
    throw InputError("grid has a non-numeric field: '" + text + "'");
  }
}

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

json complex_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

std::ofstream open_out(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  return out;
}

void write_json(const fs::path& path, const json& j) { open_out(path) << j.dump(2) << "\n"; }

std::size_t size_cap_from_env(std::size_t fallback) {
  if (const char* env = std::getenv("ZETA_SIZE_CAP")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::logic_error&) {
      throw InputError(std::string("ZETA_SIZE_CAP is not a number: ") + env);
    }
  }
  return fallback;
}

int regular_q_or_throw(const MultiGraph& g) {
  const auto reg = regularity(g);
  if (!reg.is_regular || reg.q < 1) throw InputError("graph '" + g.name() + "' is not (q+1)-regular with q >= 1");
  return reg.q;
}

struct Options {
  std::string graph, emit, eval, out, spec, target, grid, voltages, u, projection;
  double zeros_tol = 1e-8, feq_tol = 1e-9, deitmar_tol = 1e-10;
  bool check_c = false;
  std::size_t length = 12, points = 100, normalization = 0, quad_points = 0;
  unsigned seed = 1;
  int jobs = 0;
};

struct Context {
  std::vector<std::string> args; // without argv[0]
  std::ostream& out;
};

int zeta_compute(const Options& o, const Context& ctx) {
  const auto g = io::read_graph(o.graph);
  const auto z = zeta_function(g);
  Manifest manifest("zeta compute", ctx.args);
  manifest.add_input(o.graph);
  if (!o.eval.empty()) manifest.set("eval", o.eval);
  json summary{{"command", "zeta compute"}, {"graph", g.name()}, {"vertices", g.vertex_count()},
               {"edges", g.edge_count()},   {"chi", z.chi},       {"det_poly", io::poly_to_json(z.det_poly)}};
  if (!o.eval.empty()) summary["value"] = complex_json(zeta_eval(z, parse_complex(o.eval)));
  if (!o.emit.empty()) {
    write_json(o.emit, io::poly_to_json(z.det_poly));
    manifest.write_for(o.emit, false);
  }
  summary["inputs_hash"] = manifest.inputs_hash();
  ctx.out << summary.dump() << "\n";
  return 0;
}

int zeta_zeros_cmd(const Options& o, const Context& ctx) {
  const auto g = io::read_graph(o.graph);
  const auto rep = zeta_zeros(g);
  Manifest manifest("zeta zeros", ctx.args);
  manifest.add_input(o.graph);
  manifest.set("tol", o.zeros_tol);
  if (!o.out.empty()) {
    auto csv = open_out(o.out);
    csv << "re,im,multiplicity,dist_to_C\n";
    for (const auto& r : rep.roots) {
      csv << fmt(r.value.real()) << "," << fmt(r.value.imag()) << "," << r.multiplicity << ","
          << fmt(r.dist_to_C) << "\n";
    }
    manifest.write_for(o.out, false);
  }
  const bool on_c = rep.all_on_C(o.zeros_tol);
  json summary{{"command", "zeta zeros"},     {"graph", g.name()},         {"q", rep.q},
               {"roots", rep.roots.size()},   {"total_multiplicity", rep.total_multiplicity()},
               {"max_dist_to_C", rep.max_dist_to_C}, {"all_on_C", on_c},
               {"inputs_hash", manifest.inputs_hash()}};
  ctx.out << summary.dump() << "\n";
  return o.check_c && !on_c ? 2 : 0;
}

int zeta_euler_check(const Options& o, const Context& ctx) {
  const auto g = io::read_graph(o.graph);
  const auto euler = euler_log_coeffs(g, o.length);
  const auto det = det_log_coeffs(zeta_function(g), o.length);
  Manifest manifest("zeta euler-check", ctx.args);
  manifest.add_input(o.graph);
  manifest.set("L", o.length);
  json coeffs = json::array();
  for (const auto& c : euler) coeffs.push_back(c.str());
  const bool match = euler == det;
  ctx.out << json{{"command", "zeta euler-check"}, {"graph", g.name()},  {"L", o.length},
                  {"match", match},                {"coefficients", coeffs},
                  {"inputs_hash", manifest.inputs_hash()}}
                 .dump()
          << "\n";
  return match ? 0 : 2;
}

int zeta_functional_check(const Options& o, const Context& ctx) {
  const auto g = io::read_graph(o.graph);
  const auto z = zeta_function(g);
  Manifest manifest("zeta functional-check", ctx.args);
  manifest.add_input(o.graph);
  manifest.set("tol", o.feq_tol);
  if (!o.u.empty()) {
    manifest.set("u", o.u);
  } else {
    manifest.set("points", o.points);
    manifest.set("seed", o.seed);
  }
  double worst = 0.0;
  std::size_t checked = 0;
  if (!o.u.empty()) {
    worst = functional_equation_residual(z, parse_complex(o.u)).relative();
    checked = 1;
  } else {
    std::mt19937 rng(o.seed);
    std::uniform_real_distribution<double> mod(0.3, 1.2), arg(0.0, 2.0 * std::numbers::pi);
    while (checked < o.points) {
      const auto u = std::polar(mod(rng), arg(rng));
      try {
        worst = std::max(worst, functional_equation_residual(z, u).relative());
        ++checked;
      } catch (const DomainError&) {
      }
    }
  }
  const bool ok = worst < o.feq_tol;
  ctx.out << json{{"command", "zeta functional-check"}, {"graph", g.name()}, {"points", checked},
                  {"max_relative_residual", worst},     {"tol", o.feq_tol},      {"ok", ok},
                  {"inputs_hash", manifest.inputs_hash()}}
                 .dump()
          << "\n";
  return ok ? 0 : 2;
}

int cover_build(const Options& o, const Context& ctx) {
  const auto vf = io::read_voltage_file(o.voltages);
  if (!vf.volt.group.is_finite()) throw InputError("cover build needs a finite \"group\" in the voltage file");
  const auto cover = derived_graph(vf.base, vf.volt);
  Manifest manifest("cover build", ctx.args);
  manifest.add_input(o.voltages);
  write_json(o.out, io::graph_to_json(cover.graph));
  manifest.write_for(o.out, false);
  if (!o.projection.empty()) {
    write_json(o.projection, json(cover.projection));
    manifest.write_for(o.projection, false);
  }
  ctx.out << json{{"command", "cover build"},
                  {"vertices", cover.graph.vertex_count()},
                  {"edges", cover.graph.edge_count()},
                  {"sheets", cover.sheets},
                  {"components", cover.components},
                  {"valid_cover", validate_cover(cover.graph, vf.base, cover.projection)},
                  {"inputs_hash", manifest.inputs_hash()}}
                 .dump()
          << "\n";
  return 0;
}

json tower_levels_json(const Tower& tower) {
  json levels = json::array();
  for (const auto& l : tower.levels) {
    levels.push_back({{"N", l.index},
                      {"vertices", l.graph.vertex_count()},
                      {"edges", l.graph.edge_count()},
                      {"components", l.components},
                      {"chi", l.graph.euler_characteristic()}});
  }
  return levels;
}

Tower load_tower(const Options& o, Manifest& manifest) {
  auto spec = io::read_tower_spec(o.spec);
  manifest.add_input(o.spec);
  spec.size_cap = size_cap_from_env(spec.size_cap);
  manifest.set("size_cap", spec.size_cap);
  return io::build_tower(spec);
}

int tower_build(const Options& o, const Context& ctx) {
  Manifest manifest("tower build", ctx.args);
  const auto tower = load_tower(o, manifest);
  fs::create_directories(o.out);
  for (std::size_t i = 0; i < tower.levels.size(); ++i) {
    write_json(fs::path(o.out) / ("level_" + std::to_string(i + 1) + ".json"),
               io::graph_to_json(tower.levels[i].graph));
  }
  const json summary{{"command", "tower build"},
                     {"provenance", tower.provenance},
                     {"levels", tower_levels_json(tower)},
                     {"inputs_hash", manifest.inputs_hash()}};
  write_json(fs::path(o.out) / "summary.json", summary);
  manifest.write_for(o.out, true);
  ctx.out << summary.dump() << "\n";
  return 0;
}

L2Zeta parse_target(const std::string& text, const Tower& tower, int q, Manifest& manifest) {
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (kind == "constant") {
    if (arg.empty()) throw InputError("target constant:<value> needs a value");
    return constant_l2_target(parse_complex(arg), q, tower.base.euler_characteristic());
  }
  if (kind == "torus") {
    const auto vf = io::read_voltage_file(arg);
    manifest.add_input(arg);
    return torus_l2_target(vf.base, vf.volt);
  }
  throw InputError("target must be constant:<value> or torus:<voltage-file>, got '" + text + "'");
}

int tower_run(const Options& o, const Context& ctx) {
  Manifest manifest("tower run", ctx.args);
  const auto tower = load_tower(o, manifest);
  const int q = regular_q_or_throw(tower.base);
  const auto grid = parse_grid(o.grid, q);
  const auto target = parse_target(o.target, tower, q, manifest);
  manifest.set("target", o.target);
  if (target.q != q) throw InputError("target and tower have different q");
  manifest.set("grid", {{"q", grid.q}, {"radius", grid.radius}, {"resolution", grid.resolution}, {"margin", grid.margin}});
  manifest.set("quadrature_tolerance", QuadratureOptions{}.tolerance);
  const auto report = tower_convergence(tower, target, grid);

  const fs::path dir = o.out;
  fs::create_directories(dir);
  {
    auto csv = open_out(dir / "errors.csv");
    csv << "level,N,re,im,error\n";
    for (std::size_t l = 0; l < report.rows.size(); ++l) {
      for (std::size_t p = 0; p < report.points.size(); ++p) {
        csv << l + 1 << "," << report.rows[l].index << "," << fmt(report.points[p].real()) << ","
            << fmt(report.points[p].imag()) << "," << fmt(report.error_field[l][p]) << "\n";
      }
    }
  }
  {
    auto csv = open_out(dir / "target.csv");
    csv << "re,im,value_re,value_im\n";
    for (std::size_t p = 0; p < report.points.size(); ++p) {
      csv << fmt(report.points[p].real()) << "," << fmt(report.points[p].imag()) << ","
          << fmt(report.target_values[p].real()) << "," << fmt(report.target_values[p].imag()) << "\n";
    }
  }
  {
    auto csv = open_out(dir / "c_overlay.csv");
    csv << "curve,re,im\n";
    const auto lines = c_overlay(q);
    for (std::size_t c = 0; c < lines.size(); ++c) {
      for (const auto& z : lines[c]) csv << c << "," << fmt(z.real()) << "," << fmt(z.imag()) << "\n";
    }
  }
  json rows = json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"N", r.index},
                    {"vertices", r.vertices},
                    {"components", r.components},
                    {"sup_error", r.sup_error},
                    {"argmax", complex_json(r.argmax)}});
  }
  json summary{{"command", "tower run"},
               {"tower", report.tower},
               {"target", report.target},
               {"target_verified", report.target_verified},
               {"grid_points", report.points.size()},
               {"levels", rows},
               {"strictly_decreasing", report.strictly_decreasing()},
               {"inputs_hash", manifest.inputs_hash()}};
  if (!report.target_verified) summary["flag"] = "limit target unverified";
  write_json(dir / "summary.json", summary);
  manifest.write_for(dir, true);
  ctx.out << summary.dump() << "\n";
  return 0;
}

int l2_torus(const Options& o, const Context& ctx) {
  const auto vf = io::read_voltage_file(o.voltages);
  const int q = regular_q_or_throw(vf.base);
  Manifest manifest("l2 torus", ctx.args);
  manifest.add_input(o.voltages);
  QuadratureOptions qopt;
  if (o.quad_points) qopt.initial_points = o.quad_points;
  manifest.set("quadrature_tolerance", qopt.tolerance);
  manifest.set("initial_points", qopt.initial_points);
  if (!o.u.empty()) manifest.set("u", o.u);
  const auto sym = torus_symbol(vf.base, vf.volt);
  json summary{{"command", "l2 torus"}, {"q", q}, {"chi", vf.base.euler_characteristic()}};
  if (!o.u.empty()) {
    const auto u = parse_complex(o.u);
    const auto res = l2_log_det_quadrature(sym, q, u, qopt);
    summary["u"] = complex_json(u);
    summary["log_det"] = complex_json(res.value);
    summary["zeta"] = complex_json(ipow(1.0 - u * u, -vf.base.euler_characteristic()) * std::exp(res.value));
    summary["points_per_dim"] = res.points;
  }
  if (!o.grid.empty()) {
    if (o.out.empty()) throw InputError("--grid needs --out");
    const auto grid = parse_grid(o.grid, q);
    manifest.set("grid", {{"q", grid.q}, {"radius", grid.radius}, {"resolution", grid.resolution}, {"margin", grid.margin}});
    const auto target = torus_l2_target(vf.base, vf.volt, qopt);
    auto csv = open_out(o.out);
    csv << "re,im,value_re,value_im\n";
    std::size_t n = 0;
    for (const auto& u : grid.points()) {
      const auto v = target(u);
      csv << fmt(u.real()) << "," << fmt(u.imag()) << "," << fmt(v.real()) << "," << fmt(v.imag()) << "\n";
      ++n;
    }
    manifest.write_for(o.out, false);
    summary["grid_points"] = n;
  }
  if (o.u.empty() && o.grid.empty()) throw InputError("l2 torus needs --u or --grid");
  summary["inputs_hash"] = manifest.inputs_hash();
  ctx.out << summary.dump() << "\n";
  return 0;
}

int l2_cdf(const Options& o, const Context& ctx) {
  Manifest manifest("l2 cdf", ctx.args);
  SpectralCDF cdf;
  if (!o.graph.empty()) {
    const auto g = io::read_graph(o.graph);
    manifest.add_input(o.graph);
    manifest.set("N", o.normalization ? o.normalization : g.vertex_count());
    cdf = empirical_cdf(g.spectrum(), o.normalization ? o.normalization : g.vertex_count());
  } else if (!o.voltages.empty()) {
    const auto vf = io::read_voltage_file(o.voltages);
    manifest.add_input(o.voltages);
    manifest.set("M", o.quad_points ? o.quad_points : 256);
    cdf = torus_cdf(torus_symbol(vf.base, vf.volt), o.quad_points ? o.quad_points : 256);
  } else {
    throw InputError("l2 cdf needs --graph or --voltages");
  }
  auto csv = open_out(o.out);
  csv << "lambda,F\n";
  for (std::size_t i = 0; i < cdf.jump_points.size(); ++i) {
    csv << fmt(cdf.jump_points[i]) << "," << fmt(cdf.values[i]) << "\n";
  }
  manifest.write_for(o.out, false);
  ctx.out << json{{"command", "l2 cdf"},
                  {"jumps", cdf.jump_points.size()},
                  {"normalization", cdf.normalization},
                  {"mass", cdf.mass()},
                  {"inputs_hash", manifest.inputs_hash()}}
                 .dump()
          << "\n";
  return 0;
}

int deitmar_check(const Options& o, const Context& ctx) {
  const auto g = io::read_graph(o.graph);
  const int q = regular_q_or_throw(g);
  if (!g.is_connected()) throw InputError("deitmar check needs a connected graph");
  Manifest manifest("deitmar check", ctx.args);
  manifest.add_input(o.graph);
  manifest.set("tol", o.deitmar_tol);
  const auto grid = o.grid.empty() ? GridSpec{q, 0.9 / std::sqrt(static_cast<double>(q)), 12, default_margin(q)}
                                   : parse_grid(o.grid, q);
  manifest.set("grid", {{"q", grid.q}, {"radius", grid.radius}, {"resolution", grid.resolution}, {"margin", grid.margin}});
  const auto z = zeta_function(g);
  double worst = 0.0;
  const auto points = grid.points();
  for (const auto& u : points) worst = std::max(worst, deitmar_residual(z, u));
  const bool ok = worst < o.deitmar_tol;
  ctx.out << json{{"command", "deitmar check"}, {"graph", g.name()}, {"grid_points", points.size()},
                  {"max_residual", worst},      {"tol", o.deitmar_tol},      {"ok", ok},
                  {"inputs_hash", manifest.inputs_hash()}}
                 .dump()
          << "\n";
  return ok ? 0 : 2;
}

} // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ihara zeta functions, covering towers, and L2-zeta functions of abelian covers"};
  app.name(argv.empty() ? "ihara" : fs::path(argv[0]).filename().string());
  app.require_subcommand(1);
  Options o;
  app.add_option("--jobs", o.jobs, "Worker threads (default: available cores)")->check(CLI::NonNegativeNumber);

  std::function<int(const Options&, const Context&)> action;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                  std::function<int(const Options&, const Context&)> fn) {
    auto* sub = parent->add_subcommand(name, help);
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };

  auto* zeta = app.add_subcommand("zeta", "Finite zeta functions")->require_subcommand(1);
  auto* compute = leaf(zeta, "compute", "Determinant polynomial and evaluation", zeta_compute);
  compute->add_option("--graph", o.graph, "Graph JSON")->required()->check(CLI::ExistingFile);
  compute->add_option("--emit", o.emit, "Write det_poly coefficients as JSON");
  compute->add_option("--eval", o.eval, "Evaluate Z at a complex u, e.g. 0.25 or 0.1+0.2i");

  auto* zeros = leaf(zeta, "zeros", "Zeros of Z for a regular graph", zeta_zeros_cmd);
  zeros->add_option("--graph", o.graph, "Graph JSON")->required()->check(CLI::ExistingFile);
  zeros->add_flag("--check-C", o.check_c, "Exit 2 unless every zero lies within --tol of C");
  zeros->add_option("--tol", o.zeros_tol, "Distance tolerance to C")->capture_default_str();
  zeros->add_option("--out", o.out, "CSV of re,im,multiplicity,dist_to_C");

  auto* euler = leaf(zeta, "euler-check", "Compare log Z with the non-backtracking trace expansion", zeta_euler_check);
  euler->add_option("--graph", o.graph, "Graph JSON")->required()->check(CLI::ExistingFile);
  euler->add_option("--L", o.length, "Number of Taylor coefficients")->default_val(12);

  auto* feq = leaf(zeta, "functional-check", "Functional equation residuals", zeta_functional_check);
  feq->add_option("--graph", o.graph, "Graph JSON")->required()->check(CLI::ExistingFile);
  feq->add_option("--points", o.points, "Random admissible points")->default_val(100);
  feq->add_option("--seed", o.seed, "RNG seed")->default_val(1);
  feq->add_option("--u", o.u, "Check a single point instead");
  feq->add_option("--tol", o.feq_tol, "Relative residual tolerance")->capture_default_str();

  auto* cover = app.add_subcommand("cover", "Covering graphs")->require_subcommand(1);
  auto* cbuild = leaf(cover, "build", "Derived graph of a finite voltage assignment", cover_build);
  cbuild->add_option("--voltages", o.voltages, "Voltage file with a finite \"group\"")->required()->check(CLI::ExistingFile);
  cbuild->add_option("--out", o.out, "Cover graph JSON")->required();
  cbuild->add_option("--projection", o.projection, "Projection map JSON");

  auto* tower = app.add_subcommand("tower", "Towers of covers")->require_subcommand(1);
  auto* tbuild = leaf(tower, "build", "Build a tower and write each level", tower_build);
  tbuild->add_option("--spec", o.spec, "Tower spec JSON")->required()->check(CLI::ExistingFile);
  tbuild->add_option("--out", o.out, "Output directory")->required();
  auto* trun = leaf(tower, "run", "Normalised zeta convergence along a tower", tower_run);
  trun->add_option("--spec", o.spec, "Tower spec JSON")->required()->check(CLI::ExistingFile);
  trun->add_option("--target", o.target, "constant:<value> | torus:<voltage-file>")->required();
  trun->add_option("--grid", o.grid, "disk:<radius>:<resolution>:<margin>")->required();
  trun->add_option("--out", o.out, "Report directory")->required();

  auto* l2 = app.add_subcommand("l2", "L2-zeta functions of Z^k covers")->require_subcommand(1);
  auto* torus = leaf(l2, "torus", "Quadrature L2-zeta of a Z^k cover", l2_torus);
  torus->add_option("--voltages", o.voltages, "Voltage file over Z^k")->required()->check(CLI::ExistingFile);
  torus->add_option("--u", o.u, "Evaluation point");
  torus->add_option("--grid", o.grid, "disk:<radius>:<resolution>:<margin>");
  torus->add_option("--out", o.out, "CSV of re,im,value_re,value_im over the grid");
  torus->add_option("--M", o.quad_points, "Initial quadrature points per dimension");
  auto* cdf = leaf(l2, "cdf", "Spectral distribution function", l2_cdf);
  cdf->add_option("--graph", o.graph, "Graph JSON (empirical CDF)");
  cdf->add_option("--N", o.normalization, "Normalisation (default: vertex count)");
  cdf->add_option("--voltages", o.voltages, "Voltage file over Z^k (torus CDF)");
  cdf->add_option("--M", o.quad_points, "Torus grid points per dimension (default 256)");
  cdf->add_option("--out", o.out, "CSV of lambda,F")->required();

  auto* deitmar = app.add_subcommand("deitmar", "Tree-cover determinant identity")->require_subcommand(1);
  auto* dcheck = leaf(deitmar, "check", "Residual of Z(B,u) Det_pi = det over a grid", deitmar_check);
  dcheck->add_option("--graph", o.graph, "Graph JSON")->required()->check(CLI::ExistingFile);
  dcheck->add_option("--grid", o.grid, "disk:<radius>:<resolution>:<margin>");
  dcheck->add_option("--tol", o.deitmar_tol, "Residual tolerance")->capture_default_str();

  try {
    std::vector<std::string> rest(argv.rbegin(), argv.rend() - (argv.empty() ? 0 : 1));
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    err << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\nRun with --help for more information.\n";
    return 1;
  }

  if (o.jobs > 0) omp_set_num_threads(o.jobs);
  Context ctx{std::vector<std::string>(argv.begin() + 1, argv.end()), out};
  try {
    return action(o, ctx);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return 1;
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << "\n";
    return 2;
  } catch (const fs::filesystem_error& e) {
    err << "input error: " << e.what() << "\n";
    return 1;
  }
}

} // namespace ihara::cli
