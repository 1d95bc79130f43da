#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "menage/numeric.hpp"
#include "menage/permutation.hpp"
#include "menage/reduce.hpp"
#include "menage/report.hpp"
#include "menage/series.hpp"

namespace menage {

inline constexpr std::size_t kCycleTableLimit = 8;
inline constexpr std::size_t kColoredLimit = 6;

/// Entry j counts straight menage permutations of [n] with j cycles (j = 0..n).
std::vector<BigInt> straight_by_cycles(std::size_t n, std::size_t limit = kCycleTableLimit);
/// Entry j counts ordinary menage permutations of [n] with j cycles (j = 0..n).
std::vector<BigInt> ordinary_by_cycles(std::size_t n, std::size_t limit = kCycleTableLimit);

/// JSON {"n":..,"kind":..,"counts":{"1":..},"total":..}; counts lists j >= 1 only.
std::string cycle_table_json(std::size_t n, Mode kind, std::span<const BigInt> table);

/// alpha (alpha+1) ... (alpha+n-1), with (alpha)_0 = 1.
Rational rising_factorial(const Rational& alpha, std::size_t n);

/// Sum over S_n of alpha^f t^g u^h.
Rational poly_M(std::size_t n, const Rational& alpha, const Rational& t, const Rational& u,
                std::size_t limit = kCycleTableLimit);
/// Sum over S_n of alpha^f t^g u^r.
Rational poly_L(std::size_t n, const Rational& alpha, const Rational& t, const Rational& u,
                std::size_t limit = kCycleTableLimit);

/// A permutation with some fixed points colored red and some generalized
/// successions colored yellow. Both color sets hold sites i (sorted); yellow site
/// i stands for the generalized succession {i, pi(i)}.
struct ColoredPermutation {
  Permutation base;
  std::vector<int> red;
  std::vector<int> yellow;

  /// Whether the wrap-around generalized succession {n, 1} is colored.
  bool in_A() const;
  std::size_t colored_successions() const;

  bool operator==(const ColoredPermutation&) const = default;
};

/// A sample point (alpha, t, u) for evaluating weights.
struct WeightPoint {
  Rational alpha;
  Rational t;
  Rational u;
};

/// alpha^f t^{#red} u^{#colored successions} (the x^n factor is left out).
Rational weight_w1(const ColoredPermutation& colored, const WeightPoint& at);
/// alpha^f t^{#red} u^{#yellow}.
Rational weight_w2(const ColoredPermutation& colored, const WeightPoint& at);

/// Every coloring of every permutation of [n], permutations in lexicographic
/// order, then red subsets, then yellow subsets (as bitmasks, ascending).
void for_each_colored(std::size_t n, const std::function<void(const ColoredPermutation&)>& visit,
                      std::size_t limit = kColoredLimit);
std::vector<ColoredPermutation> enumerate_colored(std::size_t n, std::size_t limit = kColoredLimit);

/// Removes red fixed points (type 1) and glues yellow generalized successions
/// (type 3) until no color remains; throws std::logic_error if a colored site
/// stops being reducible.
Permutation strip_colors(const ColoredPermutation& colored);

/// The fixed evaluation grid used by the weight checks.
std::vector<WeightPoint> default_weight_grid();

/// Sum over B_n of W1 and of W2 equal M_n(1+t, 1+u); sum over all colorings of W2
/// equals L_n(1+t, 1+u); sum over B_n of W1 equals the per-permutation closed
/// form coefficient of x^n.
VerificationReport verify_weight_sums(std::size_t n, std::span<const WeightPoint> samples);

/// sum_n M_n(1+t,1+u) x^n = sum_n (alpha)_n x^n / ((1 - alpha t x)^(n+1) (1 - u x)^n).
VerificationReport verify_straight_weight_series(std::size_t order, std::span<const WeightPoint> samples);

/// Sum over A_n of W2 against its closed form, and the identity for
/// sum_n L_n(1+t,1+u) x^n in both its two-part and combined forms.
VerificationReport verify_colored_ordinary(std::size_t order, std::span<const WeightPoint> samples);

/// A_0 is empty, |A_1| = 2, and for 2 <= m <= max_m the only element of A_m
/// that strips to the empty permutation is the fully colored cycle i -> i+1.
VerificationReport verify_a_base_cases(std::size_t max_m);

/// Polynomial identity in alpha for the straight cycle table, certified at
/// alpha = 1..n+1 for each n <= order.
VerificationReport verify_straight_cycle_identity(std::size_t order);
/// Same for the ordinary table.
VerificationReport verify_ordinary_cycle_identity(std::size_t order);

/// Right side of the straight cycle-count identity at a fixed alpha, through x^order.
TruncatedSeries straight_cycle_series(const Rational& alpha, std::size_t order);
/// Right side of the ordinary cycle-count identity at a fixed alpha, through x^order.
TruncatedSeries ordinary_cycle_series(const Rational& alpha, std::size_t order);

}  // namespace menage
