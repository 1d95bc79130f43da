#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "menage/numeric.hpp"

namespace menage {

/// A formal power series known exactly through x^order.
///
/// Binary operations on series of different orders truncate to the smaller
/// order. Multiplying by x^k keeps the order (the product is known further,
/// but nothing downstream needs the extra terms).
class TruncatedSeries {
 public:
  /// The zero series of the given order.
  explicit TruncatedSeries(std::size_t order = 0);
  /// Coefficients of x^0 .. x^N; must be nonempty.
  explicit TruncatedSeries(std::vector<Rational> coeffs);

  static TruncatedSeries constant(const Rational& value, std::size_t order);
  static TruncatedSeries one(std::size_t order) { return constant(1, order); }
  /// The series x.
  static TruncatedSeries variable(std::size_t order);
  /// A polynomial given low-degree first; terms above `order` are dropped.
  static TruncatedSeries polynomial(std::span<const Rational> coeffs, std::size_t order);
  static TruncatedSeries from_integers(std::span<const BigInt> coeffs, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
  Rational& operator[](std::size_t k) { return coeffs_[k]; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  TruncatedSeries truncated(std::size_t order) const;

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const Rational& scalar);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) { return a *= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& s) { return a *= s; }
  friend TruncatedSeries operator*(const Rational& s, TruncatedSeries a) { return a *= s; }
  TruncatedSeries operator-() const;

  bool operator==(const TruncatedSeries& other) const = default;

  TruncatedSeries power(std::size_t exponent) const;
  /// Multiplies by x^k, order unchanged.
  TruncatedSeries shifted(std::size_t k) const;
  /// Maps a_{k+1} to (k+1) a_{k+1} at index k; the result has order one less.
  /// Throws std::domain_error for an order-0 series.
  TruncatedSeries derivative() const;
  /// Throws std::domain_error when the constant term is zero.
  TruncatedSeries reciprocal() const;
  /// this(inner(x)); throws std::domain_error unless inner has zero constant term.
  TruncatedSeries compose(const TruncatedSeries& inner) const;

  /// "a0 + a1*x + ... + aN*x^N [truncated]".
  std::string to_string() const;
  /// JSON array of exact decimal strings, e.g. ["1","1","2"].
  std::string to_json() const;

 private:
  std::vector<Rational> coeffs_;
};

/// Coefficient k equals the Catalan number C_k.
TruncatedSeries catalan_series(std::size_t order);
/// Coefficient n equals n!.
TruncatedSeries factorial_series(std::size_t order);
/// (1 - a x)^(-k) by the negative binomial expansion.
TruncatedSeries inverse_binomial_power(const Rational& a, std::size_t k, std::size_t order);

}  // namespace menage
