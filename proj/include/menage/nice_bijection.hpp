#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "menage/permutation.hpp"
#include "menage/reduce.hpp"

namespace menage {

/// A bijection [n] -> {2, ..., n+1} (n >= 1) that reduces to 1 -> 2.
///
/// Fixed points and successions of such a bijection are reduced exactly as for
/// permutations; "nice" means the reductions can continue until one point is left.
class NiceBijection {
 public:
  /// Throws std::invalid_argument if `images` is not a nice bijection.
  explicit NiceBijection(std::vector<int> images);

  /// The simplest bijection 1 -> 2.
  static NiceBijection simplest() { return NiceBijection(std::vector<int>{2}); }

  std::size_t size() const { return images_.size(); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x - 1)]; }
  const std::vector<int>& images() const { return images_; }

  auto operator<=>(const NiceBijection&) const = default;
  bool operator==(const NiceBijection&) const = default;

 private:
  std::vector<int> images_;
};

/// True iff `images` is a bijection [n] -> {2, ..., n+1} for n = images.size() >= 1.
bool is_shifted_bijection(std::span<const int> images);

/// Throws std::invalid_argument unless `images` is a bijection onto {2, ..., n+1}.
bool is_nice(std::span<const int> images);

/// Fixed points and successions of a bijection, as reduction steps (type1 / type2).
std::vector<ReductionStep> bijection_reductions(std::span<const int> images);

/// Applies one type1 or type2 step to a bijection [n] -> {2, ..., n+1}.
std::vector<int> reduce_bijection(std::span<const int> images, const ReductionStep& step);

/// Reduces while more than one point remains and some step applies.
std::vector<int> reduce_bijection_fully(std::span<const int> images,
                                        const ReductionPolicy& policy = smallest_site_policy());

/// Every nice bijection [n] -> {2, ..., n+1} in lexicographic order; empty for n = 0.
std::vector<NiceBijection> enumerate_nice(std::size_t n, std::size_t limit = kDefaultEnumerationLimit);

/// Inserts a fixed point at w1 (1 < w1 <= n+1 for f on [n]).
NiceBijection b1(const NiceBijection& f, int w1);

/// Inserts the succession w2 -> w2+1 (1 <= w2 <= n+1 for f on [n]).
NiceBijection b2(const NiceBijection& f, int w2);

std::string format_bijection(const NiceBijection& f);
/// Parses "[3,2,4]" and validates niceness.
NiceBijection parse_bijection(std::string_view text);

}  // namespace menage
