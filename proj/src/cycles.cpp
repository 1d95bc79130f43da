#include "menage/cycles.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace menage {

namespace {

// How many permutations of [n] share each (f, g, h, r).
std::map<PermStats, BigInt> stat_histogram(std::size_t n, std::size_t limit) {
  std::map<PermStats, BigInt> histogram;
  for (const auto& perm : SymmetricGroup(n, limit)) ++histogram[stats(perm)];
  return histogram;
}

std::vector<BigInt> menage_by_cycles(std::size_t n, std::size_t limit, Mode mode) {
  std::vector<BigInt> table(n + 1, 0);
  for (const auto& [s, count] : stat_histogram(n, limit)) {
    const std::size_t forbidden = mode == Mode::straight ? s.successions : s.generalized_successions;
    if (s.fixed_points == 0 && forbidden == 0) table[s.cycles] += count;
  }
  return table;
}

Rational evaluate_table(std::span<const BigInt> table, const Rational& alpha) {
  Rational total = 0;
  for (std::size_t j = 0; j < table.size(); ++j) total += Rational(table[j]) * ipow(alpha, j);
  return total;
}

std::string point_text(const WeightPoint& p) {
  return "(alpha,t,u)=(" + to_string(p.alpha) + "," + to_string(p.t) + "," + to_string(p.u) + ")";
}

// Sum over S_k of alpha^f, by enumeration.
Rational cycle_weight_sum(std::size_t k, const Rational& alpha) {
  Rational total = 0;
  for (const auto& [s, count] : stat_histogram(k, kCycleTableLimit)) total += Rational(count) * ipow(alpha, s.cycles);
  return total;
}

// u x / (1 - u x) style helper: the series sum_{m>=1} (u x)^m.
TruncatedSeries geometric_tail(const Rational& u, std::size_t order) {
  TruncatedSeries s = inverse_binomial_power(u, 1, order);
  s[0] = 0;
  return s;
}

// sum_{n>=1} x^n (alpha)_n (1 - alpha t x)^(-n) (1 - u x)^(-(n+1)) u x + alpha u t x + alpha u x/(1 - u x).
TruncatedSeries colored_a_series(const WeightPoint& p, std::size_t order) {
  TruncatedSeries total(order);
  for (std::size_t n = 1; n + 1 <= order; ++n) {
    total += (inverse_binomial_power(p.alpha * p.t, n, order) * inverse_binomial_power(p.u, n + 1, order))
                 .shifted(n + 1) *
             (rising_factorial(p.alpha, n) * p.u);
  }
  if (order >= 1) total[1] += p.alpha * p.u * p.t;
  total += geometric_tail(p.u, order) * p.alpha;
  return total;
}

// sum_n x^n (alpha)_n / ((1 - alpha t x)^(n+1) (1 - u x)^n).
TruncatedSeries colored_b_series(const WeightPoint& p, std::size_t order) {
  TruncatedSeries total(order);
  for (std::size_t n = 0; n <= order; ++n) {
    total += (inverse_binomial_power(p.alpha * p.t, n + 1, order) * inverse_binomial_power(p.u, n, order)).shifted(n) *
             rising_factorial(p.alpha, n);
  }
  return total;
}

}  // namespace

std::vector<BigInt> straight_by_cycles(std::size_t n, std::size_t limit) {
  return menage_by_cycles(n, limit, Mode::straight);
}

std::vector<BigInt> ordinary_by_cycles(std::size_t n, std::size_t limit) {
  return menage_by_cycles(n, limit, Mode::ordinary);
}

std::string cycle_table_json(std::size_t n, Mode kind, std::span<const BigInt> table) {
  std::ostringstream out;
  BigInt total = 0;
  for (const auto& v : table) total += v;
  out << "{\"n\":" << n << ",\"kind\":\"" << to_string(kind) << "\",\"counts\":{";
  for (std::size_t j = 1; j < table.size(); ++j) {
    if (j > 1) out << ',';
    out << '"' << j << "\":" << table[j];
  }
  out << "},\"total\":" << total << '}';
  return out.str();
}

Rational rising_factorial(const Rational& alpha, std::size_t n) {
  Rational result = 1;
  for (std::size_t k = 0; k < n; ++k) result *= alpha + Rational(static_cast<unsigned long long>(k));
  return result;
}

Rational poly_M(std::size_t n, const Rational& alpha, const Rational& t, const Rational& u, std::size_t limit) {
  Rational total = 0;
  for (const auto& [s, count] : stat_histogram(n, limit)) {
    total += Rational(count) * ipow(alpha, s.cycles) * ipow(t, s.fixed_points) * ipow(u, s.successions);
  }
  return total;
}

Rational poly_L(std::size_t n, const Rational& alpha, const Rational& t, const Rational& u, std::size_t limit) {
  Rational total = 0;
  for (const auto& [s, count] : stat_histogram(n, limit)) {
    total += Rational(count) * ipow(alpha, s.cycles) * ipow(t, s.fixed_points) * ipow(u, s.generalized_successions);
  }
  return total;
}

bool ColoredPermutation::in_A() const {
  const auto n = static_cast<int>(base.size());
  return n >= 1 && std::binary_search(yellow.begin(), yellow.end(), n);
}

std::size_t ColoredPermutation::colored_successions() const {
  return static_cast<std::size_t>(
      std::count_if(yellow.begin(), yellow.end(), [&](int i) { return base.is_succession(i); }));
}

Rational weight_w1(const ColoredPermutation& colored, const WeightPoint& at) {
  return ipow(at.alpha, colored.base.cycles().size()) * ipow(at.t, colored.red.size()) *
         ipow(at.u, colored.colored_successions());
}

Rational weight_w2(const ColoredPermutation& colored, const WeightPoint& at) {
  return ipow(at.alpha, colored.base.cycles().size()) * ipow(at.t, colored.red.size()) *
         ipow(at.u, colored.yellow.size());
}

void for_each_colored(std::size_t n, const std::function<void(const ColoredPermutation&)>& visit, std::size_t limit) {
  if (n > limit) {
    throw LimitExceeded("colored permutations of [" + std::to_string(n) + "] exceed the limit " + std::to_string(limit));
  }
  for (const auto& perm : SymmetricGroup(n, limit)) {
    std::vector<int> fixed;
    std::vector<int> generalized;
    for (int i = 1; static_cast<std::size_t>(i) <= n; ++i) {
      if (perm.is_fixed_point(i)) fixed.push_back(i);
      if (perm.is_generalized_succession(i)) generalized.push_back(i);
    }
    for (std::size_t red_mask = 0; red_mask < (std::size_t{1} << fixed.size()); ++red_mask) {
      for (std::size_t yellow_mask = 0; yellow_mask < (std::size_t{1} << generalized.size()); ++yellow_mask) {
        ColoredPermutation colored{perm, {}, {}};
        for (std::size_t k = 0; k < fixed.size(); ++k) {
          if (red_mask >> k & 1U) colored.red.push_back(fixed[k]);
        }
        for (std::size_t k = 0; k < generalized.size(); ++k) {
          if (yellow_mask >> k & 1U) colored.yellow.push_back(generalized[k]);
        }
        visit(colored);
      }
    }
  }
}

std::vector<ColoredPermutation> enumerate_colored(std::size_t n, std::size_t limit) {
  std::vector<ColoredPermutation> out;
  for_each_colored(n, [&](const ColoredPermutation& c) { out.push_back(c); }, limit);
  return out;
}

Permutation strip_colors(const ColoredPermutation& colored) {
  Permutation perm = colored.base;
  std::vector<int> red = colored.red;
  std::vector<int> yellow = colored.yellow;
  auto drop_and_shift = [](std::vector<int>& sites, int removed, bool shift) {
    std::erase(sites, removed);
    if (!shift) return;
    for (int& s : sites) {
      if (s > removed) --s;
    }
  };
  while (!red.empty() || !yellow.empty()) {
    const auto n = static_cast<int>(perm.size());
    if (!red.empty()) {
      const int i = red.front();
      perm = reduce_type1(perm, i);
      drop_and_shift(red, i, true);
      drop_and_shift(yellow, i, true);
    } else {
      const int i = yellow.front();
      perm = reduce_type3(perm, i);
      // Gluing at i < n merges i and i+1 into the new point i; at i = n the
      // point n disappears and every other site keeps its number.
      drop_and_shift(yellow, i, i < n);
      drop_and_shift(red, i, i < n);
    }
    for (int s : red) {
      if (!perm.is_fixed_point(s)) throw std::logic_error("a red site stopped being a fixed point");
    }
    for (int s : yellow) {
      if (!perm.is_generalized_succession(s)) {
        throw std::logic_error("a yellow site stopped being a generalized succession");
      }
    }
  }
  return perm;
}

std::vector<WeightPoint> default_weight_grid() {
  return {
      {1, 0, 0},
      {2, 1, 1},
      {3, -1, 2},
      {1, -1, -1},
      {Rational(1, 2), Rational(-2, 3), Rational(5, 4)},
      {-2, 3, Rational(-1, 3)},
  };
}

VerificationReport verify_weight_sums(std::size_t n, std::span<const WeightPoint> samples) {
  VerificationReport report{"weights", n};
  const auto colored = enumerate_colored(n);
  for (const auto& p : samples) {
    Rational b_w1 = 0;
    Rational b_w2 = 0;
    Rational all_w2 = 0;
    for (const auto& c : colored) {
      const Rational w2 = weight_w2(c, p);
      all_w2 += w2;
      if (!c.in_A()) {
        b_w1 += weight_w1(c, p);
        b_w2 += w2;
      }
    }
    const std::string at = " n=" + std::to_string(n) + " " + point_text(p);
    const Rational m_value = poly_M(n, p.alpha, 1 + p.t, 1 + p.u);
    report.record_equal("sum_B W1 = M_n(1+t,1+u)" + at, m_value, b_w1);
    report.record_equal("sum_B W2 = M_n(1+t,1+u)" + at, m_value, b_w2);
    report.record_equal("sum_S W2 = L_n(1+t,1+u)" + at, poly_L(n, p.alpha, 1 + p.t, 1 + p.u), all_w2);

    // Each pi in S_k contributes x^k alpha^f / ((1 - alpha t x)^(k+1) (1 - u x)^k).
    Rational closed = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      const TruncatedSeries per_perm =
          (inverse_binomial_power(p.alpha * p.t, k + 1, n) * inverse_binomial_power(p.u, k, n)).shifted(k);
      closed += cycle_weight_sum(k, p.alpha) * per_perm[n];
    }
    report.record_equal("sum_B W1 = per-permutation closed form" + at, closed, b_w1);
  }
  return report;
}

VerificationReport verify_straight_weight_series(std::size_t order, std::span<const WeightPoint> samples) {
  VerificationReport report{"straight-weights", order};
  for (const auto& p : samples) {
    TruncatedSeries lhs(order);
    for (std::size_t n = 0; n <= order; ++n) lhs[n] = poly_M(n, p.alpha, 1 + p.t, 1 + p.u);
    report.record_series("sum M_n(1+t,1+u) x^n " + point_text(p), colored_b_series(p, order), lhs);
  }
  return report;
}

VerificationReport verify_colored_ordinary(std::size_t order, std::span<const WeightPoint> samples) {
  VerificationReport report{"colored-ordinary", order};
  const std::size_t colored_order = std::min(order, kColoredLimit);
  for (const auto& p : samples) {
    const TruncatedSeries a_series = colored_a_series(p, order);
    for (std::size_t n = 0; n <= colored_order; ++n) {
      Rational a_sum = 0;
      for_each_colored(n, [&](const ColoredPermutation& c) {
        if (c.in_A()) a_sum += weight_w2(c, p);
      });
      report.record_equal("sum_A W2 at n=" + std::to_string(n) + " " + point_text(p), a_series[n], a_sum);
    }

    TruncatedSeries lhs(order);
    for (std::size_t n = 0; n <= order; ++n) lhs[n] = poly_L(n, p.alpha, 1 + p.t, 1 + p.u);
    report.record_series("sum L_n x^n = B part + A part " + point_text(p), colored_b_series(p, order) + a_series, lhs);

    TruncatedSeries combined(order);
    const TruncatedSeries x = TruncatedSeries::variable(order);
    const TruncatedSeries one = TruncatedSeries::one(order);
    const TruncatedSeries correction = one - x * x * (p.alpha * p.t * p.u);
    for (std::size_t n = 0; n <= order; ++n) {
      combined += (inverse_binomial_power(p.alpha * p.t, n + 1, order) * inverse_binomial_power(p.u, n + 1, order))
                      .shifted(n) *
                  rising_factorial(p.alpha, n);
    }
    combined *= correction;
    if (order >= 1) combined[1] += p.alpha * p.u * p.t;
    combined += geometric_tail(p.u, order) * (p.alpha - 1);
    report.record_series("sum L_n x^n = combined form " + point_text(p), combined, lhs);
  }
  return report;
}

VerificationReport verify_a_base_cases(std::size_t max_m) {
  VerificationReport report{"a-base-cases", max_m};
  const auto empty_colorings = enumerate_colored(0);
  report.record(empty_colorings.size() == 1 && !empty_colorings.front().in_A(), "A_0 is empty", "0",
                std::to_string(std::count_if(empty_colorings.begin(), empty_colorings.end(),
                                             [](const auto& c) { return c.in_A(); })));
  const Permutation nothing;
  for (std::size_t m = 1; m <= max_m; ++m) {
    std::vector<ColoredPermutation> a_of_empty;
    std::size_t a_size = 0;
    for_each_colored(m, [&](const ColoredPermutation& c) {
      if (!c.in_A()) return;
      ++a_size;
      if (strip_colors(c) == nothing) a_of_empty.push_back(c);
    });
    if (m == 1) {
      report.record(a_size == 2, "|A_1| = 2", "2", std::to_string(a_size));
      report.record(a_of_empty.size() == 2, "both elements of A_1 strip to the empty permutation", "2",
                    std::to_string(a_of_empty.size()));
      continue;
    }
    std::vector<int> cyclic(m);
    std::vector<int> all_sites(m);
    for (std::size_t i = 0; i < m; ++i) {
      cyclic[i] = static_cast<int>((i + 1) % m + 1);
      all_sites[i] = static_cast<int>(i + 1);
    }
    const ColoredPermutation expected{Permutation(cyclic), {}, all_sites};
    const bool ok = a_of_empty.size() == 1 && a_of_empty.front() == expected;
    report.record(ok, "A_" + std::to_string(m) + "(empty) is the fully colored cycle", "1 element",
                  std::to_string(a_of_empty.size()) + " elements");
  }
  return report;
}

TruncatedSeries straight_cycle_series(const Rational& alpha, std::size_t order) {
  TruncatedSeries total(order);
  for (std::size_t k = 0; k <= order; ++k) {
    total += (inverse_binomial_power(-1, k, order) * inverse_binomial_power(-alpha, k + 1, order)).shifted(k) *
             rising_factorial(alpha, k);
  }
  return total;
}

TruncatedSeries ordinary_cycle_series(const Rational& alpha, std::size_t order) {
  const TruncatedSeries x = TruncatedSeries::variable(order);
  const TruncatedSeries one = TruncatedSeries::one(order);
  TruncatedSeries sum(order);
  for (std::size_t k = 0; k <= order; ++k) {
    sum += (inverse_binomial_power(-1, k + 1, order) * inverse_binomial_power(-alpha, k + 1, order)).shifted(k) *
           rising_factorial(alpha, k);
  }
  const TruncatedSeries head = (x + x * x * alpha) * inverse_binomial_power(-1, 1, order);
  return head + (one - x * x * alpha) * sum;
}

namespace {

VerificationReport verify_cycle_identity(const char* name, std::size_t order,
                                         std::vector<BigInt> (*table_of)(std::size_t, std::size_t),
                                         TruncatedSeries (*series_at)(const Rational&, std::size_t)) {
  VerificationReport report{name, order};
  std::vector<TruncatedSeries> rhs_by_alpha;
  for (std::size_t a = 1; a <= order + 1; ++a) rhs_by_alpha.push_back(series_at(Rational(a), order));
  for (std::size_t n = 0; n <= order; ++n) {
    const auto table = table_of(n, kCycleTableLimit);
    for (std::size_t a = 1; a <= n + 1; ++a) {
      report.record_equal("x^" + std::to_string(n) + " coefficient at alpha=" + std::to_string(a),
                          rhs_by_alpha[a - 1][n], evaluate_table(table, Rational(a)));
    }
  }
  return report;
}

}  // namespace

VerificationReport verify_straight_cycle_identity(std::size_t order) {
  return verify_cycle_identity("eq5", order, straight_by_cycles, straight_cycle_series);
}

VerificationReport verify_ordinary_cycle_identity(std::size_t order) {
  auto report = verify_cycle_identity("eq6", order, ordinary_by_cycles, ordinary_cycle_series);
  const auto grid = default_weight_grid();
  report.merge(verify_colored_ordinary(std::min(order, kColoredLimit), grid));
  return report;
}

}  // namespace menage
