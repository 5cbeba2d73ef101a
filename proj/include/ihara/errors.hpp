#pragma once

#include <stdexcept>

namespace ihara {

// Malformed graphs, voltages, tower specs, flags.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Evaluation point outside the admissible region (poles, branch cuts, Omega).
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Eigensolver failure, rounding residual too large, quadrature not converged.
class NumericError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Size caps exceeded.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace ihara
