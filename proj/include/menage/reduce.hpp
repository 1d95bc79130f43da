#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "menage/permutation.hpp"

namespace menage {

/// Which reductions are allowed: {1, 2} for straight, {1, 3} for ordinary.
enum class Mode { straight, ordinary };

enum class ReductionKind { type1, type2, type3 };

struct ReductionStep {
  ReductionKind kind;
  int site;
  std::size_t before_n;

  bool operator==(const ReductionStep&) const = default;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  Permutation result;
};

std::string to_string(Mode mode);
std::string to_string(ReductionKind kind);
Mode parse_mode(std::string_view text);

/// Removes the fixed point i. Throws std::invalid_argument unless pi(i) = i.
Permutation reduce_type1(const Permutation& perm, int i);

/// Glues the succession {i, i+1}. Throws std::invalid_argument unless i < n and pi(i) = i+1.
Permutation reduce_type2(const Permutation& perm, int i);

/// Glues the generalized succession {i, pi(i)} with pi(i) = i+1 (mod n).
/// For i < n this is reduce_type2; for i = n > 1 the arc n -> 1 is removed
/// and pi^{-1}(n) is sent to 1; for n = 1 the result is empty.
Permutation reduce_type3(const Permutation& perm, int i);

Permutation apply_step(const Permutation& perm, const ReductionStep& step);
Permutation replay(const Permutation& input, std::span<const ReductionStep> steps);

/// All reductions allowed in `mode`, ordered by site with type1 first at equal sites.
std::vector<ReductionStep> applicable_reductions(const Permutation& perm, Mode mode);

/// Picks one of the applicable steps (never called with an empty list).
using ReductionPolicy = std::function<std::size_t(std::span<const ReductionStep>)>;

/// Smallest site, type1 preferred on ties.
ReductionPolicy smallest_site_policy();
/// Uniformly random choice, seeded for reproducibility.
ReductionPolicy random_policy(std::uint64_t seed);

ReductionTrace normal_form(const Permutation& perm, Mode mode,
                           const ReductionPolicy& policy = smallest_site_policy());

/// One "<kind> <site> <n>" line per step, then the result in cycle notation.
std::string format_trace(const ReductionTrace& trace);

namespace detail {

// Drops the entry at 1-based `position` whose image is `value`, then closes the
// gap in both domain and codomain. Shared by permutations and nice bijections.
std::vector<int> glue_arc(const std::vector<int>& images, int position, int value);

}  // namespace detail

}  // namespace menage
