#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "menage/nice_bijection.hpp"
#include "menage/noncrossing.hpp"
#include "menage/numeric.hpp"
#include "menage/permutation.hpp"
#include "menage/reduce.hpp"
#include "menage/report.hpp"

namespace menage {

/// How to grow a straight menage permutation of [m] on a horizontal line.
///
/// gap_partitions[p] is placed in the gap before point p+1 (the last entry
/// goes after point m); point_bijections[q] replaces point q+1, with nullopt
/// meaning the point is left as it is.
struct ExpansionPlanStraight {
  std::vector<NoncrossingPartition> gap_partitions;
  std::vector<std::optional<NiceBijection>> point_bijections;

  std::size_t added_points() const;
};

/// How to grow an ordinary menage permutation of [m], m >= 1, on a circle.
///
/// gap_partitions[i] sits between point i+1 and point i+2 (mod m), so the last
/// gap is the one between point m and point 1. `anchor` selects which point of
/// P_1 (the block replacing point 1) or of the last gap becomes 1 in the result:
/// 0..t_1 walk through P_1 in circular order, then t_1+1 .. t_1+d_m walk
/// through the last gap.
struct ExpansionPlanOrdinary {
  std::vector<NoncrossingPartition> gap_partitions;
  std::vector<std::optional<NiceBijection>> point_bijections;
  std::size_t anchor = 0;

  std::size_t added_points() const;
  /// d_m + t_1 + 1.
  std::size_t anchor_choices() const;
};

/// Throws std::invalid_argument if `perm` is not straight menage or the plan shape
/// does not match.
Permutation apply_plan_straight(const Permutation& perm, const ExpansionPlanStraight& plan);

/// Throws std::invalid_argument if `perm` is empty or not ordinary menage, or
/// the plan shape / anchor does not match.
Permutation apply_plan_ordinary(const Permutation& perm, const ExpansionPlanOrdinary& plan);

/// Every plan adding exactly n points to a permutation of [m], in lexicographic
/// order of (sizes, partition indices, bijection indices).
void for_each_plan_straight(std::size_t m, std::size_t n,
                            const std::function<void(const ExpansionPlanStraight&)>& visit);
/// As above with anchors innermost; requires m >= 1.
void for_each_plan_ordinary(std::size_t m, std::size_t n,
                            const std::function<void(const ExpansionPlanOrdinary&)>& visit);

struct ExpansionSet {
  std::set<Permutation> permutations;
  /// Number of plans (and anchors) that were applied. Equal to
  /// permutations.size() exactly when no two constructions collide.
  std::size_t constructions = 0;
};

/// All tau in S_{m+n} whose normal form in `mode` is `perm`, built constructively.
/// For m = 0 these are the permutations induced by noncrossing partitions of [n].
ExpansionSet enumerate_expansions(const Permutation& perm, std::size_t n, Mode mode,
                                  std::size_t limit = kDefaultEnumerationLimit);

inline constexpr std::size_t kDefaultBruteForceLimit = 8;

/// Filters S_{m+n} by normal form.
std::set<Permutation> brute_force_expansions(const Permutation& perm, std::size_t n, Mode mode,
                                             std::size_t limit = kDefaultBruteForceLimit);

/// Coefficient of x^n in c(x)^(2m+1).
BigInt w_count(std::size_t m, std::size_t n);
/// Coefficient of x^n in c'(x) c(x)^(2m-2) for m > 0, in c(x) for m = 0.
BigInt r_count(std::size_t m, std::size_t n);

/// n! = sum_i w_i^{n-i} V_i for every n <= order.
VerificationReport verify_w_convolution(std::size_t order);
/// n! = sum_i r_i^{n-i} U_i for every n <= order.
VerificationReport verify_r_convolution(std::size_t order);

/// For every menage perm of [m] with m + n <= max_total: constructive set equals
/// the brute-force set and its size equals w_count / r_count.
VerificationReport verify_expansion_oracle(Mode mode, std::size_t max_total, std::size_t max_m = 4);

}  // namespace menage
