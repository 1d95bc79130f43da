#include "menage/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace menage {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1, Rational(0)) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("a truncated series needs at least the constant term");
}

TruncatedSeries TruncatedSeries::constant(const Rational& value, std::size_t order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = value;
  return s;
}

TruncatedSeries TruncatedSeries::variable(std::size_t order) {
  TruncatedSeries s(order);
  if (order >= 1) s.coeffs_[1] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::polynomial(std::span<const Rational> coeffs, std::size_t order) {
  TruncatedSeries s(order);
  for (std::size_t k = 0; k < coeffs.size() && k <= order; ++k) s.coeffs_[k] = coeffs[k];
  return s;
}

TruncatedSeries TruncatedSeries::from_integers(std::span<const BigInt> coeffs, std::size_t order) {
  TruncatedSeries s(order);
  for (std::size_t k = 0; k < coeffs.size() && k <= order; ++k) s.coeffs_[k] = Rational(coeffs[k]);
  return s;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  if (order > this->order()) {
    throw std::invalid_argument("cannot extend a series of order " + std::to_string(this->order()) + " to order " +
                                std::to_string(order));
  }
  return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& other) {
  const std::size_t len = std::min(coeffs_.size(), other.coeffs_.size());
  std::vector<Rational> product(len, Rational(0));
  for (std::size_t i = 0; i < len; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < len; ++j) product[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = std::move(product);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries s = *this;
  for (auto& c : s.coeffs_) c = -c;
  return s;
}

TruncatedSeries TruncatedSeries::power(std::size_t exponent) const {
  TruncatedSeries result = one(order());
  TruncatedSeries base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

TruncatedSeries TruncatedSeries::shifted(std::size_t k) const {
  TruncatedSeries s(order());
  for (std::size_t i = 0; i + k <= order(); ++i) s.coeffs_[i + k] = coeffs_[i];
  return s;
}

TruncatedSeries TruncatedSeries::derivative() const {
  if (order() == 0) throw std::domain_error("derivative of an order-0 series carries no known terms");
  TruncatedSeries s(order() - 1);
  for (std::size_t k = 0; k + 1 <= order(); ++k) s.coeffs_[k] = coeffs_[k + 1] * static_cast<unsigned long long>(k + 1);
  return s;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
  if (coeffs_[0] == 0) throw std::domain_error("reciprocal of a series with zero constant term");
  TruncatedSeries s(order());
  const Rational inv0 = 1 / coeffs_[0];
  s.coeffs_[0] = inv0;
  for (std::size_t k = 1; k <= order(); ++k) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += coeffs_[j] * s.coeffs_[k - j];
    s.coeffs_[k] = -acc * inv0;
  }
  return s;
}

TruncatedSeries TruncatedSeries::compose(const TruncatedSeries& inner) const {
  if (inner[0] != 0) throw std::domain_error("compose requires the inner series to have zero constant term");
  const std::size_t n = std::min(order(), inner.order());
  const TruncatedSeries g = inner.truncated(n);
  TruncatedSeries result = constant(coeffs_[n], n);
  for (std::size_t k = n; k-- > 0;) {
    result *= g;
    result.coeffs_[0] += coeffs_[k];
  }
  return result;
}

std::string TruncatedSeries::to_string() const {
  std::ostringstream out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k > 0) out << " + ";
    out << menage::to_string(coeffs_[k]);
    if (k == 1) out << "*x";
    if (k > 1) out << "*x^" << k;
  }
  out << " [truncated]";
  return out.str();
}

std::string TruncatedSeries::to_json() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k > 0) out << ',';
    out << '"' << menage::to_string(coeffs_[k]) << '"';
  }
  out << ']';
  return out.str();
}

TruncatedSeries catalan_series(std::size_t order) {
  TruncatedSeries s(order);
  for (std::size_t k = 0; k <= order; ++k) s[k] = Rational(catalan_number(k));
  return s;
}

TruncatedSeries factorial_series(std::size_t order) {
  TruncatedSeries s(order);
  BigInt f = 1;
  for (std::size_t k = 0; k <= order; ++k) {
    if (k > 0) f *= k;
    s[k] = Rational(f);
  }
  return s;
}

TruncatedSeries inverse_binomial_power(const Rational& a, std::size_t k, std::size_t order) {
  // (1 - a x)^(-k) = sum_j C(k+j-1, j) a^j x^j.
  TruncatedSeries s(order);
  if (k == 0) {
    s[0] = 1;
    return s;
  }
  Rational a_pow = 1;
  for (std::size_t j = 0; j <= order; ++j) {
    s[j] = Rational(binomial(k + j - 1, j)) * a_pow;
    a_pow *= a;
  }
  return s;
}

}  // namespace menage
