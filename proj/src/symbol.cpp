#include "ihara/symbol.hpp"

#include <algorithm>
#include <cmath>

#include "ihara/errors.hpp"

namespace ihara {

TorusSymbol::TorusSymbol(std::size_t base_vertex_count, std::size_t rank)
    : n_(base_vertex_count), rank_(rank), entries_(base_vertex_count * base_vertex_count) {}

void TorusSymbol::add_term(std::size_t x, std::size_t y, long coefficient, std::vector<long> frequency) {
  if (x >= n_ || y >= n_) throw InputError("symbol entry out of range");
  if (frequency.size() != rank_) throw InputError("symbol frequency has the wrong rank");
  auto& terms = entries_[x * n_ + y];
  for (auto& t : terms) {
    if (t.frequency == frequency) {
      t.coefficient += coefficient;
      return;
    }
  }
  terms.push_back({coefficient, std::move(frequency)});
}

Eigen::MatrixXcd TorusSymbol::evaluate(std::span<const double> theta) const {
  const auto n = static_cast<Eigen::Index>(n_);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t x = 0; x < n_; ++x) {
    for (std::size_t y = 0; y < n_; ++y) {
      std::complex<double> acc = 0.0;
      for (const auto& t : entries_[x * n_ + y]) {
        double phase = 0.0;
        for (std::size_t d = 0; d < rank_; ++d) phase += theta[d] * static_cast<double>(t.frequency[d]);
        acc += static_cast<double>(t.coefficient) * std::polar(1.0, phase);
      }
      m(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) = acc;
    }
  }
  return m;
}

void TorusSymbol::eigenvalues(std::span<const double> theta, std::vector<double>& out) const {
  if (n_ == 1) {
    double acc = 0.0;
    for (const auto& t : entries_[0]) {
      double phase = 0.0;
      for (std::size_t d = 0; d < rank_; ++d) phase += theta[d] * static_cast<double>(t.frequency[d]);
      acc += static_cast<double>(t.coefficient) * std::cos(phase);
    }
    out.push_back(acc);
    return;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(evaluate(theta), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericError("symbol eigensolver did not converge");
  const auto& ev = solver.eigenvalues();
  out.insert(out.end(), ev.data(), ev.data() + ev.size());
}

TorusSymbol torus_symbol(const MultiGraph& base, const VoltageAssignment& volt) {
  volt.validate(base);
  if (std::any_of(volt.group.orders.begin(), volt.group.orders.end(), [](long n) { return n != 0; })) {
    throw InputError("torus_symbol: voltages must live in a free group Z^k");
  }
  TorusSymbol sym(base.vertex_count(), volt.group.rank());
  for (std::size_t i = 0; i < base.edge_count(); ++i) {
    const auto [x, y] = base.edges()[i];
    const auto& s = volt.voltages[i];
    std::vector<long> neg(s.size());
    std::transform(s.begin(), s.end(), neg.begin(), [](long a) { return -a; });
    sym.add_term(x, y, 1, s);
    sym.add_term(y, x, 1, std::move(neg));
  }
  return sym;
}

} // namespace ihara
