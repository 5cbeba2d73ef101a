#include "ihara/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ihara/errors.hpp"

namespace ihara {

namespace {

Eigen::MatrixXcd laplacian_at(const MultiGraph& g, Complex u) {
  const Eigen::MatrixXd a = g.adjacency();
  Eigen::MatrixXcd m = -u * a.cast<Complex>();
  for (Eigen::Index x = 0; x < m.rows(); ++x) {
    const double q = g.degree(static_cast<std::size_t>(x)) - 1;
    m(x, x) += 1.0 + q * u * u;
  }
  return m;
}

Complex det_at(const MultiGraph& g, Complex u) {
  return Eigen::PartialPivLU<Eigen::MatrixXcd>(laplacian_at(g, u)).determinant();
}

double coefficient_scale(const IntPolynomial& p, double r) {
  double s = 0.0, rk = 1.0;
  for (auto c : p.coefficients()) {
    s += std::abs(static_cast<double>(c)) * rk;
    rk *= r;
  }
  return std::max(1.0, s);
}

std::optional<IntPolynomial> det_poly_numeric(const MultiGraph& g) {
  const std::size_t v = g.vertex_count();
  const std::size_t m = 2 * v + 1;
  const int q_max = std::max(1, g.max_degree() - 1);
  const double rho = 1.0 / std::sqrt(static_cast<double>(q_max));

  std::vector<Complex> samples(m);
  for (std::size_t j = 0; j < m; ++j) {
    samples[j] = det_at(g, std::polar(rho, 2.0 * std::numbers::pi * j / m));
  }

  constexpr double kLimit = 9007199254740992.0; // 2^53
  std::vector<std::int64_t> coeffs(m);
  double rho_k = 1.0;
  for (std::size_t k = 0; k < m; ++k) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      acc += samples[j] * std::polar(1.0, -2.0 * std::numbers::pi * ((j * k) % m) / m);
    }
    acc /= static_cast<double>(m) * rho_k;
    rho_k *= rho;
    const double r = std::round(acc.real());
    if (!std::isfinite(r) || std::abs(r) >= kLimit) return std::nullopt;
    if (std::abs(acc.real() - r) > 0.25 || std::abs(acc.imag()) > 0.25) return std::nullopt;
    coeffs[k] = static_cast<std::int64_t>(r);
  }
  IntPolynomial p(std::move(coeffs));
  if (p[0] != 1) return std::nullopt;

  const auto reg = regularity(g);
  const std::vector<double>* eigs = reg.is_regular ? &g.spectrum().eigenvalues : nullptr;
  for (int j = 0; j < 9; ++j) {
    const double r = (j < 7 ? 0.9 : 0.5) * rho;
    const Complex u = std::polar(r, 0.37 + 2.0 * std::numbers::pi * j / 7.0);
    const Complex value = p(u);
    const double tol = 1e-6 * coefficient_scale(p, r);
    if (std::abs(value - det_at(g, u)) > tol) return std::nullopt;
    if (eigs) {
      Complex prod = 1.0;
      for (double lambda : *eigs) prod *= 1.0 - lambda * u + static_cast<double>(reg.q) * u * u;
      if (std::abs(value - prod) > tol) return std::nullopt;
    }
  }
  return p;
}

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k] == 0) ++pivot;
      if (pivot == n) return 0;
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

} // namespace

IntPolynomial det_poly_exact(const MultiGraph& g) {
  const std::size_t v = g.vertex_count();
  const std::size_t npts = 2 * v + 1;
  const Eigen::MatrixXd a = g.adjacency();

  std::vector<Rational> values(npts);
  for (std::size_t s = 0; s < npts; ++s) {
    const long u = static_cast<long>(s);
    std::vector<std::vector<BigInt>> m(v, std::vector<BigInt>(v));
    for (std::size_t i = 0; i < v; ++i) {
      for (std::size_t j = 0; j < v; ++j) {
        m[i][j] = -static_cast<long>(a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))) * u;
      }
      m[i][i] += 1 + static_cast<long>(g.degree(i) - 1) * u * u;
    }
    values[s] = Rational(bareiss_determinant(std::move(m)));
  }

  // Newton divided differences on the nodes 0, 1, ..., 2v.
  for (std::size_t level = 1; level < npts; ++level) {
    for (std::size_t i = npts - 1; i >= level; --i) {
      values[i] = (values[i] - values[i - 1]) / static_cast<long>(level);
    }
  }
  std::vector<Rational> poly{values[npts - 1]};
  for (std::size_t i = npts - 1; i-- > 0;) {
    // poly <- poly * (u - i) + values[i]
    std::vector<Rational> next(poly.size() + 1);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k];
      next[k] -= poly[k] * static_cast<long>(i);
    }
    next[0] += values[i];
    poly = std::move(next);
  }
  std::vector<std::int64_t> coeffs;
  coeffs.reserve(poly.size());
  for (const auto& c : poly) {
    if (boost::multiprecision::denominator(c) != 1) {
      throw NumericError("exact interpolation produced a non-integer coefficient");
    }
    coeffs.push_back(to_int64(boost::multiprecision::numerator(c)));
  }
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial det_poly(const MultiGraph& g) {
  if (auto p = det_poly_numeric(g)) return *p;
  if (g.vertex_count() <= 64) return det_poly_exact(g);
  std::ostringstream msg;
  msg << "det_poly: rounded coefficients failed verification for graph '" << g.name() << "' with "
      << g.vertex_count() << " vertices (exact route limited to 64 vertices)";
  throw NumericError(msg.str());
}

ZetaFunction zeta_function(const MultiGraph& g) {
  ZetaFunction z;
  z.chi = g.euler_characteristic();
  z.det_poly = det_poly(g);
  z.q_info = regularity(g);
  z.vertex_count = g.vertex_count();
  z.edge_count = g.edge_count();
  return z;
}

Complex ipow(Complex z, long n) {
  if (n < 0) return 1.0 / ipow(z, -n);
  Complex result = 1.0;
  while (n > 0) {
    if (n & 1) result *= z;
    z *= z;
    n >>= 1;
  }
  return result;
}

Complex zeta_eval(const ZetaFunction& z, Complex u) {
  const Complex base = 1.0 - u * u;
  if (z.chi > 0 && std::abs(base) < 1e-14) {
    throw DomainError("zeta_eval: u = +-1 is a pole when chi > 0");
  }
  return ipow(base, -z.chi) * z.det_poly(u);
}

RegionOmega::RegionOmega(int q) : q_(q) {
  if (q < 1) throw InputError("RegionOmega requires q >= 1");
  radius_ = 1.0 / std::sqrt(static_cast<double>(q));
}

double RegionOmega::distance_to_slits(Complex u) const {
  const double inv_q = 1.0 / q_;
  const double re = std::abs(u.real());
  const double im = std::abs(u.imag());
  if (re >= inv_q) return im;
  return std::hypot(inv_q - re, im);
}

bool RegionOmega::contains(Complex u, double margin) const {
  const double r = std::abs(u);
  const double d = distance_to_slits(u);
  return r <= radius_ - margin && d >= margin && r < radius_ && d > 0.0;
}

double RegionOmega::distance_to_C(Complex u) const {
  const double inv_q = 1.0 / q_;
  double best = std::abs(std::abs(u) - radius_);
  for (double sign : {1.0, -1.0}) {
    const double lo = sign > 0 ? inv_q : -1.0;
    const double hi = sign > 0 ? 1.0 : -inv_q;
    const double x = std::clamp(u.real(), lo, hi);
    best = std::min(best, std::abs(u - Complex(x, 0.0)));
  }
  return best;
}

bool omega_contains(int q, Complex u, double margin) { return RegionOmega(q).contains(u, margin); }

std::size_t ZeroReport::total_multiplicity() const {
  std::size_t n = 0;
  for (const auto& r : roots) n += static_cast<std::size_t>(r.multiplicity);
  return n;
}

ZeroReport zeta_zeros(const MultiGraph& g) {
  const auto reg = regularity(g);
  if (!reg.is_regular || reg.q < 1) {
    throw InputError("zeta_zeros: graph '" + g.name() + "' is not (q+1)-regular with q >= 1");
  }
  const double q = reg.q;
  // Eigenvalues are accurate to ~1e-14 * degree; a discriminant below this
  // threshold is a double root on the circle.
  const double snap = 1e-9 * (q + 1) * (q + 1);

  std::vector<Complex> raw;
  for (double lambda : g.spectrum().eigenvalues) {
    lambda = std::clamp(lambda, -(q + 1), q + 1);
    double disc = lambda * lambda - 4.0 * q;
    if (std::abs(disc) < snap) disc = 0.0;
    const Complex root = std::sqrt(Complex(disc, 0.0));
    raw.push_back((lambda + root) / (2.0 * q));
    raw.push_back((lambda - root) / (2.0 * q));
  }
  for (long k = 0; k < -reg.chi; ++k) {
    raw.emplace_back(1.0, 0.0);
    raw.emplace_back(-1.0, 0.0);
  }

  ZeroReport report;
  report.q = reg.q;
  const RegionOmega omega(reg.q);
  constexpr double kMerge = 1e-6;
  for (const auto& z : raw) {
    auto it = std::find_if(report.roots.begin(), report.roots.end(),
                           [&](const ZetaRoot& r) { return std::abs(r.value - z) < kMerge; });
    if (it != report.roots.end()) {
      ++it->multiplicity;
    } else {
      report.roots.push_back({z, 1, omega.distance_to_C(z)});
    }
  }
  std::sort(report.roots.begin(), report.roots.end(), [](const ZetaRoot& a, const ZetaRoot& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  for (const auto& r : report.roots) report.max_dist_to_C = std::max(report.max_dist_to_C, r.dist_to_C);
  return report;
}

Complex log_det_laplacian(std::span<const double> eigenvalues, int q, Complex u) {
  const Complex shift = 1.0 + static_cast<double>(q) * u * u;
  Complex acc = 0.0;
  for (double lambda : eigenvalues) acc += std::log(shift - lambda * u);
  return acc;
}

namespace {

int require_regular_q(const MultiGraph& g, const char* who) {
  const auto reg = regularity(g);
  if (!reg.is_regular || reg.q < 1) {
    throw InputError(std::string(who) + ": graph '" + g.name() + "' is not (q+1)-regular with q >= 1");
  }
  return reg.q;
}

} // namespace

Complex nth_root_det(const MultiGraph& g, std::size_t n, Complex u) {
  if (n == 0) throw InputError("nth_root_det: N must be >= 1");
  const int q = require_regular_q(g, "nth_root_det");
  if (!omega_contains(q, u, kBranchCutMargin)) {
    std::ostringstream msg;
    msg << "nth_root_det: u = " << u << " is not inside Omega for q = " << q;
    throw DomainError(msg.str());
  }
  return std::exp(log_det_laplacian(g.spectrum().eigenvalues, q, u) / static_cast<double>(n));
}

Complex normalized_zeta(const MultiGraph& level, std::size_t n, long chi_base, Complex u) {
  if (level.euler_characteristic() != static_cast<long>(n) * chi_base) {
    std::ostringstream msg;
    msg << "normalized_zeta: chi(level) = " << level.euler_characteristic() << " but N * chi_base = "
        << static_cast<long>(n) * chi_base;
    throw InputError(msg.str());
  }
  return ipow(1.0 - u * u, -chi_base) * nth_root_det(level, n, u);
}

double FunctionalEquationCheck::relative() const {
  return std::abs(residual()) / std::max({std::abs(lhs), std::abs(rhs), 1.0});
}

FunctionalEquationCheck functional_equation_residual(const ZetaFunction& z, Complex u) {
  if (!z.q_info.is_regular || z.q_info.q < 1) {
    throw InputError("functional_equation_residual: regular graphs only");
  }
  const double q = z.q_info.q;
  if (std::abs(u) < 1e-300) throw DomainError("functional_equation_residual: u = 0");
  const Complex denom = q * q * u * u - 1.0;
  if (std::abs(denom) < 1e-14 || std::abs(1.0 - u * u) < 1e-14) {
    throw DomainError("functional_equation_residual: u is a pole of the prefactor");
  }
  const long v = static_cast<long>(z.vertex_count);
  const long e = static_cast<long>(z.edge_count);
  FunctionalEquationCheck out;
  out.lhs = zeta_eval(z, 1.0 / (q * u));
  out.rhs = ipow((1.0 - u * u) / denom, z.chi) * std::pow(q, static_cast<double>(v - 2 * e)) *
            ipow(u, -2 * e) * zeta_eval(z, u);
  return out;
}

std::vector<BigInt> nonbacktracking_traces(const MultiGraph& g, std::size_t max_length) {
  // Oriented edge 2i runs first -> second, 2i+1 is its reverse.
  const auto& edges = g.edges();
  const std::size_t n = 2 * edges.size();
  auto tail = [&](std::size_t d) { return d % 2 == 0 ? edges[d / 2].first : edges[d / 2].second; };
  auto head = [&](std::size_t d) { return d % 2 == 0 ? edges[d / 2].second : edges[d / 2].first; };

  std::vector<std::vector<std::size_t>> out_of(g.vertex_count());
  for (std::size_t d = 0; d < n; ++d) out_of[tail(d)].push_back(d);
  std::vector<std::vector<std::size_t>> successors(n);
  for (std::size_t d = 0; d < n; ++d) {
    for (auto f : out_of[head(d)]) {
      if (f != (d ^ 1)) successors[d].push_back(f);
    }
  }

  // power[i][j] = (T^m)_{ij}
  std::vector<std::vector<BigInt>> power(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) power[i][i] = 1;
  std::vector<BigInt> traces;
  traces.reserve(max_length);
  for (std::size_t m = 1; m <= max_length; ++m) {
    std::vector<std::vector<BigInt>> next(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        if (power[i][k] == 0) continue;
        for (auto j : successors[k]) next[i][j] += power[i][k];
      }
    }
    power = std::move(next);
    BigInt tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += power[i][i];
    traces.push_back(std::move(tr));
  }
  return traces;
}

std::vector<Rational> euler_log_coeffs(const MultiGraph& g, std::size_t max_length) {
  const auto traces = nonbacktracking_traces(g, max_length);
  std::vector<Rational> out;
  out.reserve(max_length);
  for (std::size_t m = 1; m <= max_length; ++m) {
    out.push_back(Rational(-traces[m - 1], BigInt(m)));
  }
  return out;
}

std::vector<Rational> det_log_coeffs(const ZetaFunction& z, std::size_t max_length) {
  const auto& p = z.det_poly;
  if (p[0] != 1) throw NumericError("det_log_coeffs: constant coefficient is not 1");
  // s_m = m c_m for log det_poly: s_m = m a_m - sum_{k<m} s_k a_{m-k}.
  std::vector<BigInt> s(max_length + 1);
  for (std::size_t m = 1; m <= max_length; ++m) {
    BigInt acc = BigInt(m) * p[m];
    for (std::size_t k = 1; k < m; ++k) acc -= s[k] * p[m - k];
    s[m] = acc;
  }
  std::vector<Rational> out;
  out.reserve(max_length);
  for (std::size_t m = 1; m <= max_length; ++m) {
    BigInt num = s[m];
    if (m % 2 == 0) num += 2 * z.chi; // -chi log(1-u^2) = chi sum u^{2j}/j
    out.push_back(Rational(num, BigInt(m)));
  }
  return out;
}

} // namespace ihara
