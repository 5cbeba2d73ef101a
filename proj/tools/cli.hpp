#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "ihara/convergence.hpp"

namespace ihara::cli {

/// Runs one command line (argv[0] is the program name). Exit codes: 0 on
/// success, 1 for input errors (bad flags, files, or evaluation points),
/// 2 for numeric or resource failures and failed checks. A one-line JSON
/// summary goes to `out`; diagnostics and usage go to `err`.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

/// "0.25", "-0.1+0.3i", "0.5i", "1e-2-2e-1i".
std::complex<double> parse_complex(const std::string& text);

/// disk:<radius>:<resolution>:<margin>
GridSpec parse_grid(const std::string& text, int q);

} // namespace ihara::cli
