#include "ihara/polynomial.hpp"

#include <limits>
#include <sstream>

#include "ihara/errors.hpp"

namespace ihara {

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coefficients) : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::complex<double> IntPolynomial::operator()(std::complex<double> u) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * u + static_cast<double>(*it);
  }
  return acc;
}

BigInt IntPolynomial::evaluate_exact(const BigInt& u) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * u + BigInt(*it);
  }
  return acc;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> prod(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      prod[i + j] += BigInt(a.coeffs_[i]) * b.coeffs_[j];
  std::vector<std::int64_t> out;
  out.reserve(prod.size());
  for (const auto& c : prod) out.push_back(to_int64(c));
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t k = 0; k < coeffs_.size(); ++k) os << (k ? ", " : "") << coeffs_[k];
  os << "]";
  return os.str();
}

DivisionResult divide(const IntPolynomial& numerator, const IntPolynomial& denominator) {
  if (denominator.is_zero()) throw InputError("polynomial division by zero");
  std::vector<Rational> rem(numerator.coefficients().begin(), numerator.coefficients().end());
  const auto& den = denominator.coefficients();
  const std::size_t dd = den.size() - 1;
  DivisionResult out;
  if (rem.size() > dd) {
    out.quotient.assign(rem.size() - dd, Rational(0));
    for (std::size_t k = rem.size(); k-- > dd;) {
      const Rational c = rem[k] / den[dd];
      out.quotient[k - dd] = c;
      for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= c * den[j];
    }
  }
  while (!rem.empty() && rem.back() == 0) rem.pop_back();
  out.remainder = std::move(rem);
  return out;
}

std::optional<IntPolynomial> divide_exact(const IntPolynomial& numerator,
                                          const IntPolynomial& denominator) {
  auto res = divide(numerator, denominator);
  if (!res.remainder.empty()) return std::nullopt;
  std::vector<std::int64_t> q;
  q.reserve(res.quotient.size());
  for (const auto& c : res.quotient) {
    if (boost::multiprecision::denominator(c) != 1) return std::nullopt;
    q.push_back(to_int64(boost::multiprecision::numerator(c)));
  }
  return IntPolynomial(std::move(q));
}

std::int64_t to_int64(const BigInt& x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min()) {
    throw NumericError("integer coefficient " + x.str() + " does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(x);
}

} // namespace ihara
