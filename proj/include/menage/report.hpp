#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "menage/numeric.hpp"

namespace menage {

class TruncatedSeries;

struct Discrepancy {
  std::string check;
  /// Set when the failing check is a series coefficient.
  std::optional<std::size_t> coefficient;
  std::string expected;
  std::string actual;
};

/// Outcome of an identity check. Failures are data, not exceptions.
struct VerificationReport {
  VerificationReport() = default;
  VerificationReport(std::string name, std::size_t order) : name(std::move(name)), order(order) {}

  std::string name;
  std::size_t order = 0;
  bool passed = true;
  std::size_t checks = 0;
  std::optional<Discrepancy> first_failure;

  /// Counts one check; keeps only the first failure.
  void record(bool ok, const std::string& check, const std::string& expected, const std::string& actual,
              std::optional<std::size_t> coefficient = std::nullopt);
  void record_equal(const std::string& check, const Rational& expected, const Rational& actual);
  /// Coefficient-wise comparison through the smaller of the two orders.
  void record_series(const std::string& check, const TruncatedSeries& expected, const TruncatedSeries& actual);
  void merge(const VerificationReport& other);

  /// "PASS name order=N" or "FAIL name order=N: <first failure>".
  std::string summary() const;
};

}  // namespace menage
