#include "menage/identities.hpp"

#include <stdexcept>
#include <string>

namespace menage {

namespace {

void require_length(std::span<const BigInt> values, std::size_t order, const char* what) {
  if (values.size() < order + 1) {
    throw std::invalid_argument(std::string(what) + " needs values for n = 0.." + std::to_string(order));
  }
}

// sum_{n=0}^{order} n! x^n (1 + x)^(-(2n + extra)).
TruncatedSeries factorial_over_one_plus_x(std::size_t order, std::size_t extra) {
  TruncatedSeries total(order);
  BigInt f = 1;
  for (std::size_t n = 0; n <= order; ++n) {
    if (n > 0) f *= n;
    total += inverse_binomial_power(-1, 2 * n + extra, order).shifted(n) * Rational(f);
  }
  return total;
}

}  // namespace

BigInt menage_V(std::size_t n) {
  BigInt total = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    const BigInt term = binomial(2 * n - k, k) * factorial(n - k);
    total += (k % 2 == 0) ? term : BigInt(-term);
  }
  return total;
}

BigInt menage_U(std::size_t n) {
  if (n == 0) return 1;
  if (n == 1) return 0;
  Rational total = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    const Rational factor(BigInt(2 * n), BigInt(2 * n - k));
    const Rational term = factor * Rational(binomial(2 * n - k, k) * factorial(n - k));
    total += (k % 2 == 0) ? term : Rational(-term);
  }
  if (denominator(total) != 1) {
    throw std::logic_error("U_" + std::to_string(n) + " evaluated to the non-integer " + to_string(total));
  }
  return numerator(total);
}

BigInt menage_U_split(std::size_t n) {
  if (n == 0) return 1;
  if (n == 1) return 0;
  BigInt total = menage_V(n);
  for (std::size_t k = 1; k <= n; ++k) {
    const BigInt term = binomial(2 * n - k - 1, k - 1) * factorial(n - k);
    total += (k % 2 == 0) ? term : BigInt(-term);
  }
  return total;
}

std::vector<BigInt> menage_V_sequence(std::size_t max_n) {
  std::vector<BigInt> out;
  for (std::size_t n = 0; n <= max_n; ++n) out.push_back(menage_V(n));
  return out;
}

std::vector<BigInt> menage_U_sequence(std::size_t max_n) {
  std::vector<BigInt> out;
  for (std::size_t n = 0; n <= max_n; ++n) out.push_back(menage_U(n));
  return out;
}

std::vector<BigInt> nice_counts(std::size_t max_n) {
  std::vector<BigInt> a(max_n + 1, 0);
  if (max_n >= 1) a[1] = 1;
  for (std::size_t n = 2; n <= max_n; ++n) {
    for (std::size_t k = 2; k <= n; ++k) a[n] += catalan_number(k - 2) * a[n - k + 1];
  }
  return a;
}

VerificationReport verify_straight_factorial_identity(std::size_t order) {
  const auto v = menage_V_sequence(order);
  return verify_straight_factorial_identity(order, v);
}

VerificationReport verify_straight_factorial_identity(std::size_t order, std::span<const BigInt> v_values) {
  require_length(v_values, order, "verify_straight_factorial_identity");
  VerificationReport report{"eq3", order};
  const TruncatedSeries c = catalan_series(order);
  TruncatedSeries rhs(order);
  for (std::size_t n = 0; n <= order; ++n) {
    rhs += c.power(2 * n + 1).shifted(n) * Rational(v_values[n]);
  }
  report.record_series("sum n! x^n = sum V_n x^n c^(2n+1)", factorial_series(order), rhs);
  return report;
}

VerificationReport verify_ordinary_factorial_identity(std::size_t order) {
  const auto u = menage_U_sequence(order);
  return verify_ordinary_factorial_identity(order, u);
}

VerificationReport verify_ordinary_factorial_identity(std::size_t order, std::span<const BigInt> u_values) {
  require_length(u_values, order, "verify_ordinary_factorial_identity");
  VerificationReport report{"eq4", order};
  const TruncatedSeries c = catalan_series(order + 1);
  const TruncatedSeries dc = c.derivative();
  const TruncatedSeries c_n = c.truncated(order);
  TruncatedSeries tail(order);
  for (std::size_t n = 1; n <= order; ++n) {
    tail += c_n.power(2 * n - 2).shifted(n) * Rational(u_values[n]);
  }
  report.record_series("sum n! x^n = c + c' sum U_n x^n c^(2n-2)", factorial_series(order), c_n + dc * tail);
  return report;
}

VerificationReport verify_catalan_relations(std::size_t order) { return verify_catalan_relations(order, catalan_series(order + 1)); }

VerificationReport verify_catalan_relations(std::size_t order, const TruncatedSeries& c_in) {
  if (c_in.order() < order + 1) {
    throw std::invalid_argument("verify_catalan_relations needs c known through x^" + std::to_string(order + 1));
  }
  VerificationReport report{"lemma3", order};
  const TruncatedSeries dc = c_in.truncated(order + 1).derivative();
  const TruncatedSeries c = c_in.truncated(order);
  const TruncatedSeries x = TruncatedSeries::variable(order);
  const TruncatedSeries one = TruncatedSeries::one(order);

  report.record_series("c = 1/(1 - x c)", c, (one - x * c).reciprocal());
  report.record_series("c = 1 + x c^2", c, one + x * c * c);
  report.record_series("c' = c^2 + 2 x c c'", dc, c * c + Rational(2) * x * c * dc);
  report.record_series("c' = c^3 / (1 - x c^2)", dc, c.power(3) * (one - x * c * c).reciprocal());
  return report;
}

VerificationReport verify_eta(std::size_t order) {
  VerificationReport report{"eta", order};
  const auto a = nice_counts(order + 1);
  const TruncatedSeries c1 = catalan_series(order + 1);
  const TruncatedSeries c = c1.truncated(order);

  TruncatedSeries eta(order);
  TruncatedSeries eta_scaled(order);
  for (std::size_t k = 0; k <= order; ++k) {
    BigInt sum = 0;
    for (std::size_t r = 0; r <= k; ++r) sum += a[r + 1] * catalan_number(k - r);
    eta[k] = Rational(sum * (k + 1));
    eta_scaled[k] = Rational(sum);
  }
  report.record_series("sum eta_k x^k = c'", c1.derivative(), eta);
  report.record_series("sum eta_k/(k+1) x^k = c^2", c * c, eta_scaled);
  report.record_series("sum a_n x^n = x c", c1.shifted(1), TruncatedSeries::from_integers(a, order + 1));
  return report;
}

VerificationReport verify_analytic_forms(std::size_t order) {
  const auto v = menage_V_sequence(order);
  const auto u = menage_U_sequence(order);
  return verify_analytic_forms(order, v, u);
}

VerificationReport verify_analytic_forms(std::size_t order, std::span<const BigInt> v_values,
                                   std::span<const BigInt> u_values) {
  require_length(v_values, order, "verify_analytic_forms");
  require_length(u_values, order, "verify_analytic_forms");
  VerificationReport report{"appendix", order};
  const TruncatedSeries x = TruncatedSeries::variable(order);
  const TruncatedSeries one = TruncatedSeries::one(order);
  const TruncatedSeries one_plus_x = one + x;

  report.record_series("sum V_n x^n = sum n! x^n/(1+x)^(2n+1)", TruncatedSeries::from_integers(v_values, order),
                       factorial_over_one_plus_x(order, 1));

  TruncatedSeries u_tail(order);
  for (std::size_t n = 1; n <= order; ++n) u_tail[n] = Rational(u_values[n]);
  const TruncatedSeries lhs = one_plus_x + one_plus_x * inverse_binomial_power(1, 1, order) * u_tail;
  report.record_series("1 + x + (1+x)/(1-x) sum U_n x^n = sum n! x^n/(1+x)^(2n)", lhs,
                       factorial_over_one_plus_x(order, 0));

  const TruncatedSeries c = catalan_series(order);
  const TruncatedSeries substitution = (c * c).shifted(1);
  report.record_series("1 + x = c(z) at x = z c(z)^2", c, one_plus_x.compose(substitution));
  const TruncatedSeries x_over = x * inverse_binomial_power(-1, 2, order);
  report.record_series("x/(1+x)^2 = z at x = z c(z)^2", x, x_over.compose(substitution));
  return report;
}

}  // namespace menage
