// Serial reference vs OpenMP kernels: wall time and max deviation.
//   bench_kernels [repeats]

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <omp.h>

#include "ihara/covers.hpp"
#include "ihara/kernels.hpp"
#include "ihara/symbol.hpp"

using namespace ihara;

namespace {

template <class F>
double best_of(int repeats, F&& f) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

} // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 5;
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-34s %12s %12s %8s %10s\n", "kernel", "serial [s]", "parallel [s]", "speedup", "max diff");

  const auto sym = torus_symbol(named::bouquet(2), {AbelianGroup{{0, 0}}, {{1, 0}, {0, 1}}});
  const Complex u(0.2, 0.1);
  for (std::size_t m : {256u, 1024u, 2048u}) {
    std::complex<double> a, b;
    const double ts = best_of(repeats, [&] { a = kernels::torus_log_det_sum_serial(sym, 3, u, m); });
    const double tp = best_of(repeats, [&] { b = kernels::torus_log_det_sum_parallel(sym, 3, u, m); });
    char name[64];
    std::snprintf(name, sizeof name, "torus_log_det_sum Z^2, M=%zu", m);
    std::printf("%-34s %12.4f %12.4f %8.2f %10.2e\n", name, ts, tp, ts / tp, std::abs(a - b) / std::abs(a));
  }

  const auto eigs = kernels::torus_eigenvalues(sym, 64, Backend::serial);
  std::vector<Complex> points;
  for (int i = 0; i < 400; ++i) points.push_back(std::polar(0.5, 0.0157 * i + 0.01));
  std::vector<Complex> a, b;
  const double ts = best_of(repeats, [&] { a = kernels::log_det_grid_serial(eigs, 3, points); });
  const double tp = best_of(repeats, [&] { b = kernels::log_det_grid_parallel(eigs, 3, points); });
  double diff = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) diff = std::max(diff, std::abs(a[i] - b[i]) / std::abs(a[i]));
  std::printf("%-34s %12.4f %12.4f %8.2f %10.2e\n", "log_det_grid 4096 eigs x 400 pts", ts, tp, ts / tp, diff);
  return 0;
}
