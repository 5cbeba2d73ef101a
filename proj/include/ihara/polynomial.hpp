#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ihara {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Polynomial in u with exact integer coefficients, index = power of u.
/// Trailing zero coefficients are trimmed; the zero polynomial is empty.
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<std::int64_t> coefficients);

  const std::vector<std::int64_t>& coefficients() const { return coeffs_; }
  std::int64_t operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  std::complex<double> operator()(std::complex<double> u) const;
  BigInt evaluate_exact(const BigInt& u) const;

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

  std::string to_string() const;

private:
  std::vector<std::int64_t> coeffs_;
};

struct DivisionResult {
  std::vector<Rational> quotient;
  std::vector<Rational> remainder; // trimmed; empty means exact
};

/// Polynomial long division over the rationals.
DivisionResult divide(const IntPolynomial& numerator, const IntPolynomial& denominator);

/// Quotient when `denominator` divides `numerator` in Z[u], otherwise nullopt.
std::optional<IntPolynomial> divide_exact(const IntPolynomial& numerator,
                                          const IntPolynomial& denominator);

/// Converts a big integer to int64, throwing NumericError if it does not fit.
std::int64_t to_int64(const BigInt& x);

} // namespace ihara
