#include "ihara/l2zeta.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ihara/errors.hpp"
#include "ihara/zeta.hpp"

namespace ihara {

double SpectralCDF::operator()(double lambda) const {
  // Jump points carry eigensolver noise; treat anything within the tie
  // tolerance of lambda as <= lambda.
  const double slack = 1e-9 * std::max(1.0, std::abs(lambda));
  const auto it = std::upper_bound(jump_points.begin(), jump_points.end(), lambda + slack);
  if (it == jump_points.begin()) return 0.0;
  return values[static_cast<std::size_t>(it - jump_points.begin()) - 1];
}

SpectralCDF empirical_cdf(std::span<const double> eigenvalues, std::size_t n) {
  if (n == 0) throw InputError("empirical_cdf: normalization must be >= 1");
  std::vector<double> sorted(eigenvalues.begin(), eigenvalues.end());
  std::sort(sorted.begin(), sorted.end());
  SpectralCDF cdf;
  cdf.normalization = n;
  std::size_t count = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    ++count;
    const bool last_of_tie =
        i + 1 == sorted.size() ||
        sorted[i + 1] - sorted[i] > 1e-9 * std::max(1.0, std::abs(sorted[i]));
    if (last_of_tie) {
      cdf.jump_points.push_back(sorted[i]);
      cdf.values.push_back(static_cast<double>(count) / static_cast<double>(n));
    }
  }
  return cdf;
}

SpectralCDF empirical_cdf(const SpectrumData& s, std::size_t n) { return empirical_cdf(s.eigenvalues, n); }

SpectralCDF torus_cdf(const TorusSymbol& sym, std::size_t m, Backend backend) {
  const auto eigs = kernels::torus_eigenvalues(sym, m, backend);
  std::size_t nodes = 1;
  for (std::size_t d = 0; d < sym.rank(); ++d) nodes *= m;
  return empirical_cdf(eigs, nodes);
}

QuadratureResult l2_log_det_quadrature(const TorusSymbol& sym, int q, Complex u,
                                       const QuadratureOptions& options) {
  if (options.initial_points < 4) throw InputError("l2_log_det: need at least 4 points per dimension");
  if (!omega_contains(q, u, kBranchCutMargin)) {
    std::ostringstream msg;
    msg << "l2_log_det: u = " << u << " is not inside Omega for q = " << q;
    throw DomainError(msg.str());
  }
  auto average = [&](std::size_t m) {
    double nodes = 1.0;
    for (std::size_t d = 0; d < sym.rank(); ++d) nodes *= static_cast<double>(m);
    return kernels::torus_log_det_sum(sym, q, u, m, options.backend) / nodes;
  };
  std::size_t m = options.initial_points;
  Complex previous = average(m);
  if (sym.rank() == 0) return {previous, m, 0.0};
  while (2 * m <= options.max_points) {
    m *= 2;
    const Complex current = average(m);
    const double change = std::abs(current - previous);
    if (change < options.tolerance) return {current, m, change};
    previous = current;
  }
  std::ostringstream msg;
  msg << "l2_log_det: quadrature at u = " << u << " did not converge by M = " << options.max_points;
  throw NumericError(msg.str());
}

Complex l2_log_det(const TorusSymbol& sym, int q, Complex u, std::size_t initial_points) {
  QuadratureOptions options;
  options.initial_points = initial_points;
  return l2_log_det_quadrature(sym, q, u, options).value;
}

namespace {

int regular_q(const MultiGraph& base) {
  const auto reg = regularity(base);
  if (!reg.is_regular || reg.q < 1) {
    throw InputError("graph '" + base.name() + "' is not (q+1)-regular with q >= 1");
  }
  return reg.q;
}

} // namespace

Complex l2_zeta_abelian(const MultiGraph& base, const VoltageAssignment& volt, Complex u,
                        const QuadratureOptions& options) {
  const int q = regular_q(base);
  const auto sym = torus_symbol(base, volt);
  return ipow(1.0 - u * u, -base.euler_characteristic()) *
         std::exp(l2_log_det_quadrature(sym, q, u, options).value);
}

std::vector<BigInt> closed_walk_traces(const TorusSymbol& sym, std::size_t max_length) {
  const std::size_t n = sym.base_vertex_count();
  const std::size_t k = sym.rank();
  long reach = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (const auto& t : sym.entry(x, y))
        for (long f : t.frequency) reach = std::max(reach, std::abs(f));
  const long radius = reach * static_cast<long>(max_length);
  const std::size_t side = static_cast<std::size_t>(2 * radius + 1);
  std::size_t cells = 1;
  for (std::size_t d = 0; d < k; ++d) cells *= side;

  struct Move {
    std::size_t to;
    long coefficient;
    std::ptrdiff_t shift; // linear offset of the frequency in the box
  };
  std::vector<std::vector<Move>> moves(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (const auto& t : sym.entry(x, y)) {
        if (t.coefficient == 0) continue;
        std::ptrdiff_t shift = 0;
        for (std::size_t d = 0; d < k; ++d) shift = shift * static_cast<std::ptrdiff_t>(side) + t.frequency[d];
        moves[x].push_back({y, t.coefficient, shift});
      }
    }
  }
  std::ptrdiff_t origin = 0;
  for (std::size_t d = 0; d < k; ++d) origin = origin * static_cast<std::ptrdiff_t>(side) + radius;

  // Positions within `radius` of the origin never leave the box, so linear
  // offsets never wrap.
  std::vector<BigInt> traces(max_length + 1, BigInt(0));
  for (std::size_t start = 0; start < n; ++start) {
    std::vector<BigInt> walks(n * cells, BigInt(0));
    walks[start * cells + static_cast<std::size_t>(origin)] = 1;
    traces[0] += 1;
    for (std::size_t m = 1; m <= max_length; ++m) {
      std::vector<BigInt> next(n * cells, BigInt(0));
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t c = 0; c < cells; ++c) {
          const BigInt& w = walks[x * cells + c];
          if (w == 0) continue;
          for (const auto& mv : moves[x]) {
            const auto target = static_cast<std::ptrdiff_t>(c) + mv.shift;
            next[mv.to * cells + static_cast<std::size_t>(target)] += w * mv.coefficient;
          }
        }
      }
      walks = std::move(next);
      traces[m] += walks[start * cells + static_cast<std::size_t>(origin)];
    }
  }
  return traces;
}

Complex l2_series_oracle(std::span<const BigInt> traces, int q, Complex u, std::size_t terms) {
  if (std::abs(u) > 1.0 / (2.0 * (q + 1)) * (1.0 + 1e-12)) {
    std::ostringstream msg;
    msg << "l2_series_oracle: |u| = " << std::abs(u) << " exceeds 1/(2(q+1))";
    throw DomainError(msg.str());
  }
  if (traces.size() < terms + 1) throw InputError("l2_series_oracle: not enough walk traces");
  const Complex shift = -static_cast<double>(q) * u * u;
  Complex total = 0.0;
  for (std::size_t m = 1; m <= terms; ++m) {
    // Tr (A u + shift)^m = sum_j C(m,j) u^j shift^{m-j} Tr A^j
    Complex acc = 0.0;
    double binom = 1.0;
    for (std::size_t j = 0; j <= m; ++j) {
      acc += binom * ipow(u, static_cast<long>(j)) * ipow(shift, static_cast<long>(m - j)) *
             static_cast<double>(traces[j]);
      binom = binom * static_cast<double>(m - j) / static_cast<double>(j + 1);
    }
    total -= acc / static_cast<double>(m);
  }
  return total;
}

Complex l2_series_oracle(const TorusSymbol& sym, int q, Complex u, std::size_t terms) {
  if (std::abs(u) > 1.0 / (2.0 * (q + 1)) * (1.0 + 1e-12)) {
    throw DomainError("l2_series_oracle: |u| exceeds 1/(2(q+1))");
  }
  const auto traces = closed_walk_traces(sym, terms);
  return l2_series_oracle(traces, q, u, terms);
}

L2Zeta constant_l2_target(Complex value, int q, long chi_base) {
  std::ostringstream desc;
  desc << "constant:" << value.real();
  if (value.imag() != 0.0) desc << (value.imag() > 0 ? "+" : "") << value.imag() << "i";
  return L2Zeta{chi_base, q, [value](Complex) { return value; }, desc.str(),
                value == Complex(1.0, 0.0) ? "tree" : ""};
}

L2Zeta tree_l2_reference(int q, long chi_base) {
  auto z = constant_l2_target(1.0, q, chi_base);
  z.description = "tree:constant:1";
  return z;
}

Complex tree_l2_determinant(long chi_base, Complex u) { return ipow(1.0 - u * u, chi_base); }

L2Zeta torus_l2_target(const MultiGraph& base, const VoltageAssignment& volt,
                       const QuadratureOptions& options) {
  const int q = regular_q(base);
  const long chi = base.euler_characteristic();
  auto sym = std::make_shared<TorusSymbol>(torus_symbol(base, volt));
  std::ostringstream desc;
  desc << "torus:Z^" << volt.group.rank() << " cover of " << base.name();
  return L2Zeta{chi, q,
                [sym, q, chi, options](Complex u) {
                  return ipow(1.0 - u * u, -chi) * std::exp(l2_log_det_quadrature(*sym, q, u, options).value);
                },
                desc.str(), torus_limit_key(base, volt.voltages)};
}

std::string torus_limit_key(const MultiGraph& base, const std::vector<GroupElement>& voltages) {
  std::ostringstream key;
  key << "torus:" << base.vertex_count() << ":";
  for (std::size_t i = 0; i < base.edge_count(); ++i) {
    key << "(" << base.edges()[i].first << "," << base.edges()[i].second << ";";
    for (std::size_t d = 0; d < voltages[i].size(); ++d) key << (d ? "," : "") << voltages[i][d];
    key << ")";
  }
  return key.str();
}

} // namespace ihara
