// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "ihara/convergence.hpp"
#include "ihara/covers.hpp"
#include "ihara/l2zeta.hpp"
#include "ihara/zeta.hpp"
#include "oracles.hpp"

using namespace ihara;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Ring of `rings` x `spokes` points strictly inside the disk of radius
// `fraction * q^{-1/2}`, angles offset from the real axis.
std::vector<Complex> polar_grid(int q, double fraction, std::size_t rings, std::size_t spokes) {
  const double r_max = fraction / std::sqrt(static_cast<double>(q));
  std::vector<Complex> pts;
  for (std::size_t i = 0; i < rings; ++i) {
    const double r = r_max * (static_cast<double>(i) + 1.0) / static_cast<double>(rings);
    for (std::size_t j = 0; j < spokes; ++j) {
      const double t = 2.0 * std::numbers::pi * (static_cast<double>(j) + 0.5) / static_cast<double>(spokes);
      pts.push_back(std::polar(r, t));
    }
  }
  return pts;
}

// Closed non-backtracking walks of each length 1..L by depth-first search
// over oriented edges. Loops give two oriented edges that are reverses of
// each other.
std::vector<BigInt> nb_walks_by_search(const MultiGraph& g, std::size_t max_length) {
  struct Arc {
    std::size_t tail, head, reverse;
  };
  std::vector<Arc> arcs;
  for (const auto& [a, b] : g.edges()) {
    const std::size_t k = arcs.size();
    arcs.push_back({a, b, k + 1});
    arcs.push_back({b, a, k});
  }
  std::vector<std::vector<std::size_t>> out(g.vertex_count());
  for (std::size_t k = 0; k < arcs.size(); ++k) out[arcs[k].tail].push_back(k);
  std::vector<BigInt> count(max_length + 1, 0);
  std::function<void(std::size_t, std::size_t, std::size_t)> walk = [&](std::size_t first, std::size_t last,
                                                                        std::size_t len) {
    if (arcs[last].head == arcs[first].tail && arcs[first].reverse != last) ++count[len];
    if (len == max_length) return;
    for (std::size_t next : out[arcs[last].head]) {
      if (next != arcs[last].reverse) walk(first, next, len + 1);
    }
  };
  for (std::size_t k = 0; k < arcs.size(); ++k) walk(k, k, 1);
  return count;
}

double dist_to_c(int q, Complex u) {
  const double r = 1.0 / std::sqrt(static_cast<double>(q));
  double d = std::abs(std::abs(u) - r);
  const double lo = 1.0 / q;
  for (double sign : {-1.0, 1.0}) {
    const double x = std::clamp(sign * u.real(), lo, 1.0);
    d = std::min(d, std::abs(u - Complex(sign * x, 0.0)));
  }
  return d;
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

bool strictly_decreasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i] < v[i - 1])) return false;
  }
  return true;
}

std::string join(const std::vector<double>& v) {
  std::string s;
  for (double x : v) s += (s.empty() ? "" : ",") + sci(x);
  return s;
}

Outcome criterion1() {
  Outcome o;
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto cover = derived_graph(named::bouquet(1), {AbelianGroup{{static_cast<long>(n)}}, {{1}}});
    const auto z = zeta_function(cover.graph);
    const IntPolynomial want(oracle::cycle_det(n));
    if (!validate_cover(cover.graph, named::bouquet(1), cover.projection) || z.chi != 0 || z.det_poly != want) {
      o.ok = false;
      o.detail += "n=" + std::to_string(n) + " got " + z.det_poly.to_string() + "; ";
    }
  }
  if (o.ok) o.detail = "Z(C_n) = (1-u^n)^2 exactly for n = 1..12";
  return o;
}

Outcome criterion2() {
  Outcome o;
  constexpr std::size_t L = 12;
  for (const auto& g : oracle::corpus()) {
    const auto walks = nb_walks_by_search(g, L);
    const auto det = det_log_coeffs(zeta_function(g), L);
    const auto euler = euler_log_coeffs(g, L);
    for (std::size_t m = 1; m <= L; ++m) {
      const Rational want = -Rational(walks[m]) / static_cast<long>(m);
      if (det[m - 1] != want || euler[m - 1] != want) {
        o.ok = false;
        o.detail += g.name() + " m=" + std::to_string(m) + "; ";
      }
    }
  }
  if (o.ok) o.detail = std::to_string(oracle::corpus().size()) + " graphs, 12 coefficients each, exact rational match";
  return o;
}

Outcome criterion3() {
  Outcome o;
  double worst = 0.0, k4_worst = 0.0;
  for (const auto& g : oracle::corpus()) {
    const auto rep = zeta_zeros(g);
    std::size_t mult = 0;
    for (const auto& r : rep.roots) {
      worst = std::max(worst, dist_to_c(rep.q, r.value));
      mult += static_cast<std::size_t>(r.multiplicity);
    }
    const std::size_t degree = static_cast<std::size_t>(zeta_function(g).det_poly.degree()) +
                               2 * static_cast<std::size_t>(std::max(0L, -g.euler_characteristic()));
    if (mult != degree) {
      o.ok = false;
      o.detail += g.name() + " multiplicity " + std::to_string(mult) + " != " + std::to_string(degree) + "; ";
    }
    if (g.name() == "K4") {
      for (const auto& r : rep.roots) {
        if (std::abs(r.value.imag()) > 1e-6) k4_worst = std::max(k4_worst, std::abs(std::abs(r.value) - std::sqrt(0.5)));
      }
    }
  }
  o.ok = o.ok && worst <= 1e-8 && k4_worst <= 1e-10;
  o.detail += "max dist to C " + sci(worst) + ", K4 | |u| - 2^-1/2 | max " + sci(k4_worst);
  return o;
}

Outcome criterion4() {
  Outcome o;
  double worst = 0.0;
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> mod(0.2, 1.2), arg(0.0, 2.0 * std::numbers::pi);
  for (const auto& g : {named::complete(4), named::petersen()}) {
    const auto z = zeta_function(g);
    const double q = 2.0;
    std::size_t done = 0;
    while (done < 100) {
      const auto u = std::polar(mod(rng), arg(rng));
      // Admissible: away from 0 and from the poles u = +-1, +-1/q.
      if (std::min({std::abs(u - 1.0), std::abs(u + 1.0), std::abs(u - 1.0 / q), std::abs(u + 1.0 / q)}) < 1e-3) continue;
      worst = std::max(worst, functional_equation_residual(z, u).relative());
      ++done;
    }
  }
  o.ok = worst < 1e-9;
  o.detail = "K4 and Petersen, 100 points each, max relative residual " + sci(worst);
  return o;
}

Outcome criterion5() {
  Outcome o;
  double worst = 0.0, worst_step = 0.0;
  constexpr std::size_t steps = 1u << 17;
  for (const auto& g : oracle::corpus()) {
    const int q = regularity(g).q;
    const auto poly = zeta_function(g).det_poly;
    const auto grid = polar_grid(q, 0.98, 10, 20);
    for (std::size_t n : {2u, 4u, 8u}) {
      for (const auto& u : grid) {
        const Complex want = poly(u);
        const double err = std::abs(std::pow(nth_root_det(g, n, u), static_cast<double>(n)) - want) /
                           std::max(1.0, std::abs(want));
        worst = std::max(worst, err);
      }
      const double r = 0.99 / q;
      Complex prev = nth_root_det(g, n, r);
      for (std::size_t s = 1; s <= steps; ++s) {
        const Complex u = std::polar(r, 2.0 * std::numbers::pi * static_cast<double>(s) / steps);
        const Complex cur = nth_root_det(g, n, u);
        worst_step = std::max(worst_step, std::abs(cur / prev - 1.0));
        prev = cur;
      }
    }
  }
  o.ok = worst < 1e-9 && worst_step < 0.01;
  o.detail = "max |root^N - det| " + sci(worst) + " on 200 points, max |ratio - 1| on the loop " + sci(worst_step);
  return o;
}

Outcome criterion6() {
  Outcome o;
  const GridSpec grid{1, 0.5, 32, default_margin(1)};
  const auto pts = grid.points();
  std::vector<double> sup;
  for (long n = 1; n <= 16; ++n) {
    const auto cover = derived_graph(named::bouquet(1), {AbelianGroup{{n}}, {{1}}});
    double s = 0.0;
    for (const auto& u : pts) s = std::max(s, std::abs(normalized_zeta(cover.graph, static_cast<std::size_t>(n), 0, u) - 1.0));
    sup.push_back(s);
  }
  const auto tower = cyclic_tower(named::bouquet(1), {{1}}, {1, 2, 4, 8, 16});
  const auto report = tower_convergence(tower, constant_l2_target(1.0, 1, 0), grid);
  o.ok = strictly_decreasing(sup) && sup.back() < 1e-5 && report.target_verified && report.strictly_decreasing() &&
         report.rows.back().sup_error < 1e-5;
  o.detail = std::to_string(pts.size()) + " points, sup error N=1..16: " + join(sup);
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto base = named::bouquet(2);
  const std::vector<GroupElement> volt{{1, 0}, {0, 1}};
  const auto tower = cyclic_tower(base, volt, {2, 4, 8, 16, 32});
  const auto target = torus_l2_target(base, {AbelianGroup{{0, 0}}, volt});
  const GridSpec grid{3, 0.25, 24, 0.05};
  const auto report = tower_convergence(tower, target, grid);
  std::vector<double> sup;
  for (const auto& row : report.rows) {
    if (row.index > 1) sup.push_back(row.sup_error);
  }
  o.ok = report.target_verified && sup.size() == 5 && strictly_decreasing(sup) && sup.back() < 1e-2;
  o.detail = std::to_string(report.points.size()) + " points, sup error n=2..32: " + join(sup);
  return o;
}

Outcome criterion8() {
  Outcome o;
  const auto tower = homology_tower(named::bouquet(2), 2, 2);
  const GridSpec grid{3, 0.3, 24, default_margin(3)};
  const auto report = tower_convergence(tower, tree_l2_reference(3, -1), grid);
  std::vector<std::size_t> sizes;
  for (const auto& l : tower.levels) sizes.push_back(l.graph.vertex_count());
  o.ok = sizes == std::vector<std::size_t>{1, 4, 128} && report.target_verified &&
         report.rows[2].sup_error < report.rows[1].sup_error;
  std::vector<double> sup;
  for (const auto& r : report.rows) sup.push_back(r.sup_error);
  o.detail = "levels 1,4,128 vertices, sup error " + join(sup);
  return o;
}

Outcome criterion9() {
  Outcome o;
  const auto tower = cyclic_tower(named::bouquet(1), {{1}}, {25, 50, 100, 200});
  std::vector<double> lambdas;
  for (int j = 0; j < 50; ++j) lambdas.push_back(-1.98 + 3.96 * j / 49.0);
  const auto dist = cdf_convergence(tower, oracle::arcsine_cdf, lambdas);
  o.ok = dist.back() <= 0.05;
  o.detail = "sup |F_n - arcsine| at n=1,25,50,100,200: " + join(dist);
  return o;
}

Outcome criterion10() {
  Outcome o;
  struct Case {
    MultiGraph base;
    VoltageAssignment volt;
    int q;
  };
  const std::vector<Case> cases{
      {named::bouquet(1), {AbelianGroup{{0}}, {{1}}}, 1},
      {named::bouquet(2), {AbelianGroup{{0, 0}}, {{1, 0}, {0, 1}}}, 3},
  };
  constexpr std::size_t terms = 64;
  double worst = 0.0;
  for (const auto& c : cases) {
    const auto sym = torus_symbol(c.base, c.volt);
    const auto traces = closed_walk_traces(sym, terms);
    // Independent check of the traces themselves.
    for (unsigned m = 0; m <= terms; ++m) {
      const auto want = c.q == 1 ? oracle::line_walks(m) : oracle::square_walks(m);
      if (traces[m] != want) {
        o.ok = false;
        o.detail += "trace m=" + std::to_string(m) + " mismatch; ";
        break;
      }
    }
    const double bound = 1.0 / (2.0 * (c.q + 1));
    for (int k = 0; k < 20; ++k) {
      const Complex u = std::polar(bound * (k + 1) / 20.0, 2.399963229728653 * k);
      const Complex series = l2_series_oracle(traces, c.q, u, terms);
      worst = std::max(worst, std::abs(series - l2_log_det(sym, c.q, u)));
    }
  }
  const auto loop_sym = torus_symbol(named::bouquet(1), {AbelianGroup{{0}}, {{1}}});
  const double loop_value = std::abs(l2_log_det(loop_sym, 1, 0.5));
  o.ok = o.ok && worst < 1e-8 && loop_value < 1e-10;
  o.detail += "Z and Z^2, 20 points each, max |series - quadrature| " + sci(worst) + ", |l2_log_det(loop, 0.5)| " +
              sci(loop_value);
  return o;
}

Outcome criterion11() {
  Outcome o;
  double worst = 0.0;
  for (const auto& g : {named::complete(4), named::petersen()}) {
    const auto z = zeta_function(g);
    for (const auto& u : polar_grid(2, 0.95, 5, 20)) worst = std::max(worst, deitmar_residual(z, u));
  }
  o.ok = worst < 1e-10;
  o.detail = "K4 and Petersen, 100 points each, max residual " + sci(worst);
  return o;
}

Outcome criterion12() {
  Outcome o;
  std::size_t bipartite = 0, covers = 0;
  long seed = 1;
  for (const auto& g : oracle::corpus()) {
    const auto p = zeta_function(g).det_poly;
    if (g.is_connected() && p.evaluate_exact(1) != 0) {
      o.ok = false;
      o.detail += g.name() + " det_poly(1) != 0; ";
    }
    if ((p.evaluate_exact(-1) == 0) != g.is_bipartite()) {
      o.ok = false;
      o.detail += g.name() + " det_poly(-1) vs bipartite; ";
    }
    if (g.is_bipartite()) ++bipartite;
    for (long n : {2L, 3L}) {
      std::vector<GroupElement> volt;
      for (std::size_t e = 0; e < g.edge_count(); ++e) volt.push_back({(seed = seed * 48271 % 2147483647) % n});
      const auto cover = derived_graph(g, {AbelianGroup{{n}}, volt});
      ++covers;
      // Multiset containment of the base spectrum in the cover spectrum.
      auto cover_eigs = cover.graph.spectrum().eigenvalues;
      bool contained = true;
      for (double lambda : g.spectrum().eigenvalues) {
        auto it = std::find_if(cover_eigs.begin(), cover_eigs.end(), [&](double mu) { return std::abs(mu - lambda) < 1e-8; });
        if (it == cover_eigs.end()) {
          contained = false;
          break;
        }
        cover_eigs.erase(it);
      }
      const bool divides = divide_exact(zeta_function(cover.graph).det_poly, p).has_value();
      if (!contained || !divides) {
        o.ok = false;
        o.detail += g.name() + " Z/" + std::to_string(n) + " cover: spectrum " + (contained ? "ok" : "missing") +
                    ", division " + (divides ? "exact" : "inexact") + "; ";
      }
    }
  }
  if (o.ok) {
    o.detail = std::to_string(oracle::corpus().size()) + " graphs (" + std::to_string(bipartite) + " bipartite), " + std::to_string(covers) +
               " covers: spectra contained, det_poly divides exactly";
  }
  return o;
}

} // namespace

int main() {
  struct Criterion {
    int id;
    double limit_seconds; // 0: no runtime limit
    Outcome (*run)();
  };
  const std::vector<Criterion> criteria{
      {1, 1, criterion1},   {2, 10, criterion2},  {3, 5, criterion3},   {4, 5, criterion4},
      {5, 0, criterion5},   {6, 5, criterion6},   {7, 120, criterion7}, {8, 60, criterion8},
      {9, 5, criterion9},   {10, 30, criterion10}, {11, 5, criterion11}, {12, 10, criterion12},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_seconds == 0 || secs < c.limit_seconds;
    const bool pass = o.ok && in_time;
    failures += pass ? 0 : 1;
    std::printf("%s criterion %d: %s [%.2fs%s%s]\n", pass ? "PASS" : "FAIL", c.id, o.detail.c_str(), secs,
                c.limit_seconds > 0 ? (" / limit " + std::to_string(static_cast<int>(c.limit_seconds)) + "s").c_str() : "",
                in_time ? "" : ", too slow");
    std::fflush(stdout);
  }
  return failures;
}
