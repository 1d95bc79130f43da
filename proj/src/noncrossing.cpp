#include "menage/noncrossing.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace menage {

namespace {

// Block label per element (index 0 unused), or nullopt if not a disjoint cover.
std::optional<std::vector<std::size_t>> labels_of(std::size_t n, const std::vector<std::vector<int>>& blocks) {
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(n + 1, kUnset);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) return std::nullopt;
    for (int e : blocks[b]) {
      if (e < 1 || static_cast<std::size_t>(e) > n || label[static_cast<std::size_t>(e)] != kUnset) {
        return std::nullopt;
      }
      label[static_cast<std::size_t>(e)] = b;
    }
  }
  for (std::size_t e = 1; e <= n; ++e) {
    if (label[e] == kUnset) return std::nullopt;
  }
  return label;
}

bool labels_noncrossing(const std::vector<std::size_t>& label) {
  const std::size_t n = label.size() - 1;
  for (std::size_t p = 1; p <= n; ++p) {
    for (std::size_t q = p + 1; q <= n; ++q) {
      if (label[q] == label[p]) continue;
      for (std::size_t p2 = q + 1; p2 <= n; ++p2) {
        if (label[p2] != label[p]) continue;
        for (std::size_t q2 = p2 + 1; q2 <= n; ++q2) {
          if (label[q2] == label[q]) return false;
        }
      }
    }
  }
  return true;
}

std::vector<std::vector<int>> shift_blocks(const NoncrossingPartition& phi, int threshold_inclusive) {
  std::vector<std::vector<int>> blocks = phi.blocks();
  for (auto& block : blocks) {
    for (int& e : block) {
      if (e >= threshold_inclusive) ++e;
    }
  }
  return blocks;
}

}  // namespace

NoncrossingPartition::NoncrossingPartition(std::size_t n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  for (auto& block : blocks_) std::sort(block.begin(), block.end());
  std::sort(blocks_.begin(), blocks_.end());
  if (!is_noncrossing(n_, blocks_)) {
    throw std::invalid_argument("blocks do not form a noncrossing partition of [" + std::to_string(n_) + "]: " +
                                format_partition(*this));
  }
}

std::size_t NoncrossingPartition::block_of(int element) const {
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (std::binary_search(blocks_[b].begin(), blocks_[b].end(), element)) return b;
  }
  throw std::out_of_range("element " + std::to_string(element) + " is not in [" + std::to_string(n_) + "]");
}

bool is_noncrossing(std::size_t n, const std::vector<std::vector<int>>& blocks) {
  const auto label = labels_of(n, blocks);
  return label && labels_noncrossing(*label);
}

std::vector<NoncrossingPartition> enumerate_ncp(std::size_t n, std::size_t limit) {
  if (n > limit) {
    throw LimitExceeded("noncrossing partitions of [" + std::to_string(n) + "] exceed the limit " +
                        std::to_string(limit));
  }
  std::vector<NoncrossingPartition> result;
  // Restricted growth strings: growth[k] <= 1 + max(growth[0..k-1]).
  std::vector<std::size_t> growth(n, 0);
  std::vector<std::size_t> label(n + 1, 0);
  while (true) {
    std::size_t block_count = 0;
    for (std::size_t k = 0; k < n; ++k) {
      label[k + 1] = growth[k];
      block_count = std::max(block_count, growth[k] + 1);
    }
    if (labels_noncrossing(label)) {
      std::vector<std::vector<int>> blocks(block_count);
      for (std::size_t k = 0; k < n; ++k) blocks[growth[k]].push_back(static_cast<int>(k + 1));
      result.emplace_back(n, std::move(blocks));
    }
    // Advance to the next restricted growth string.
    bool advanced = false;
    for (std::size_t k = n; k > 1 && !advanced;) {
      --k;
      const auto prefix_max = *std::max_element(growth.begin(), growth.begin() + static_cast<std::ptrdiff_t>(k));
      if (growth[k] <= prefix_max) {
        ++growth[k];
        std::fill(growth.begin() + static_cast<std::ptrdiff_t>(k) + 1, growth.end(), 0);
        advanced = true;
      }
    }
    if (!advanced) break;
  }
  return result;
}

Permutation induced_permutation(const NoncrossingPartition& partition) {
  std::vector<int> images(partition.size());
  for (const auto& block : partition.blocks()) {
    for (std::size_t k = 0; k < block.size(); ++k) {
      images[static_cast<std::size_t>(block[k] - 1)] = block[(k + 1) % block.size()];
    }
  }
  return Permutation(std::move(images));
}

std::optional<NoncrossingPartition> ncp_preimage(const Permutation& perm) {
  auto blocks = perm.cycles();
  for (const auto& cycle : blocks) {
    if (!std::is_sorted(cycle.begin(), cycle.end())) return std::nullopt;
  }
  if (!is_noncrossing(perm.size(), blocks)) return std::nullopt;
  return NoncrossingPartition(perm.size(), std::move(blocks));
}

NoncrossingPartition pi1(const NoncrossingPartition& phi, int i) {
  const auto n = static_cast<int>(phi.size()) + 1;
  if (i < 1 || i > n) {
    throw std::invalid_argument("pi1 site " + std::to_string(i) + " outside [" + std::to_string(n) + "]");
  }
  auto blocks = shift_blocks(phi, i);
  blocks.push_back({i});
  return NoncrossingPartition(static_cast<std::size_t>(n), std::move(blocks));
}

NoncrossingPartition pi2(const NoncrossingPartition& phi, int i) {
  const auto n = static_cast<int>(phi.size()) + 1;
  if (i < 1 || i > n - 1) {
    throw std::invalid_argument("pi2 site " + std::to_string(i) + " outside [" + std::to_string(n - 1) + "]");
  }
  const std::size_t home = phi.block_of(i);
  auto blocks = shift_blocks(phi, i + 1);
  blocks[home].push_back(i + 1);
  return NoncrossingPartition(static_cast<std::size_t>(n), std::move(blocks));
}

std::string format_partition(const NoncrossingPartition& partition) {
  std::ostringstream out;
  out << '{';
  for (std::size_t b = 0; b < partition.blocks().size(); ++b) {
    if (b > 0) out << ',';
    out << '{';
    const auto& block = partition.blocks()[b];
    for (std::size_t k = 0; k < block.size(); ++k) {
      if (k > 0) out << ',';
      out << block[k];
    }
    out << '}';
  }
  out << '}';
  return out.str();
}

NoncrossingPartition parse_partition(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  if (compact.size() < 2 || compact.front() != '{' || compact.back() != '}') {
    throw ParseError("partition must look like {{1,2},{3}}: \"" + std::string(text) + "\"");
  }
  std::vector<std::vector<int>> blocks;
  std::size_t pos = 1;
  const std::size_t end = compact.size() - 1;
  int largest = 0;
  while (pos < end) {
    if (compact[pos] != '{') throw ParseError("expected '{' in partition \"" + std::string(text) + "\"");
    const auto close = compact.find('}', pos);
    if (close == std::string::npos || close >= end + 1) {
      throw ParseError("unterminated block in partition \"" + std::string(text) + "\"");
    }
    std::vector<int> block;
    std::stringstream items(compact.substr(pos + 1, close - pos - 1));
    std::string item;
    while (std::getline(items, item, ',')) {
      if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw ParseError("bad element '" + item + "' in partition \"" + std::string(text) + "\"");
      }
      block.push_back(std::stoi(item));
      largest = std::max(largest, block.back());
    }
    if (block.empty()) throw ParseError("empty block in partition \"" + std::string(text) + "\"");
    blocks.push_back(std::move(block));
    pos = close + 1;
    if (pos < end) {
      if (compact[pos] != ',') throw ParseError("expected ',' between blocks in \"" + std::string(text) + "\"");
      ++pos;
    }
  }
  const auto n = static_cast<std::size_t>(largest);
  if (!labels_of(n, blocks)) throw ParseError("blocks must cover [n] disjointly: \"" + std::string(text) + "\"");
  try {
    return NoncrossingPartition(n, std::move(blocks));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace menage
