#include "menage/report.hpp"

#include <algorithm>

#include "menage/series.hpp"

namespace menage {

void VerificationReport::record(bool ok, const std::string& check, const std::string& expected,
                                const std::string& actual, std::optional<std::size_t> coefficient) {
  ++checks;
  if (ok) return;
  if (passed) first_failure = Discrepancy{check, coefficient, expected, actual};
  passed = false;
}

void VerificationReport::record_equal(const std::string& check, const Rational& expected, const Rational& actual) {
  record(expected == actual, check, to_string(expected), to_string(actual));
}

void VerificationReport::record_series(const std::string& check, const TruncatedSeries& expected,
                                       const TruncatedSeries& actual) {
  const std::size_t n = std::min(expected.order(), actual.order());
  for (std::size_t k = 0; k <= n; ++k) {
    record(expected[k] == actual[k], check, to_string(expected[k]), to_string(actual[k]), k);
  }
}

void VerificationReport::merge(const VerificationReport& other) {
  checks += other.checks;
  if (passed && !other.passed) first_failure = other.first_failure;
  passed = passed && other.passed;
}

std::string VerificationReport::summary() const {
  std::string line = (passed ? "PASS " : "FAIL ") + name + " order=" + std::to_string(order);
  if (!passed && first_failure) {
    line += ": " + first_failure->check;
    if (first_failure->coefficient) line += " at coefficient " + std::to_string(*first_failure->coefficient);
    line += " expected " + first_failure->expected + " got " + first_failure->actual;
  }
  return line;
}

}  // namespace menage
