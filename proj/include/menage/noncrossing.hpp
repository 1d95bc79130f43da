#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "menage/permutation.hpp"

namespace menage {

/// A set partition of [n] whose blocks never interleave as p < q < p' < q'.
///
/// Blocks are kept sorted ascending and ordered by their smallest element, so
/// two partitions compare equal exactly when they have the same blocks.
class NoncrossingPartition {
 public:
  NoncrossingPartition() = default;

  /// Throws std::invalid_argument if the blocks are empty, overlap, miss an
  /// element of [n], or cross.
  NoncrossingPartition(std::size_t n, std::vector<std::vector<int>> blocks);

  std::size_t size() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }

  /// Index into blocks() of the block holding `element`.
  std::size_t block_of(int element) const;

  auto operator<=>(const NoncrossingPartition&) const = default;
  bool operator==(const NoncrossingPartition&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<int>> blocks_;
};

/// Checks disjoint cover of [n] plus the noncrossing condition.
bool is_noncrossing(std::size_t n, const std::vector<std::vector<int>>& blocks);

/// All noncrossing partitions of [n]; there are C_n of them.
std::vector<NoncrossingPartition> enumerate_ncp(std::size_t n, std::size_t limit = kDefaultEnumerationLimit);

/// Each block {a1 < ... < aj} becomes the cycle a1 -> a2 -> ... -> aj -> a1.
Permutation induced_permutation(const NoncrossingPartition& partition);

/// The partition inducing `perm`, if any.
std::optional<NoncrossingPartition> ncp_preimage(const Permutation& perm);

/// Partition of [n] from one of [n-1]: elements >= i move up and {i} is added.
/// Requires 1 <= i <= n.
NoncrossingPartition pi1(const NoncrossingPartition& phi, int i);

/// Partition of [n] from one of [n-1]: elements > i move up and i+1 joins the
/// block containing i. Requires 1 <= i <= n-1.
NoncrossingPartition pi2(const NoncrossingPartition& phi, int i);

/// "{{1,2},{3}}"; the empty partition is "{}".
std::string format_partition(const NoncrossingPartition& partition);
NoncrossingPartition parse_partition(std::string_view text);

}  // namespace menage
