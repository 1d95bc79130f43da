#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace menage {

/// Raised when permutation (or partition / bijection) text cannot be parsed.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a brute-force enumeration is asked for a size above its cap.
class LimitExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

inline constexpr std::size_t kDefaultEnumerationLimit = 10;

/// Cycle count f, fixed points g, successions h and generalized successions r.
struct PermStats {
  std::size_t cycles = 0;
  std::size_t fixed_points = 0;
  std::size_t successions = 0;
  std::size_t generalized_successions = 0;

  auto operator<=>(const PermStats&) const = default;
};

/// A bijection of [n] = {1, ..., n}, stored in one-line form.
///
/// Points and images use 1-based values as in the usual notation; the
/// empty permutation (n = 0) is a valid value.
class Permutation {
 public:
  Permutation() = default;

  /// Validates that `images` is a bijection of [n]; throws std::invalid_argument.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(std::size_t n);

  std::size_t size() const { return images_.size(); }
  bool empty() const { return images_.empty(); }

  /// pi(i) for 1 <= i <= n.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  int at(int i) const;

  const std::vector<int>& one_line() const { return images_; }
  std::vector<int> inverse_one_line() const;

  bool is_fixed_point(int i) const { return (*this)(i) == i; }
  bool is_succession(int i) const;
  bool is_generalized_succession(int i) const;

  /// Cycles, each starting from its smallest element, ordered by that element.
  std::vector<std::vector<int>> cycles() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// Accepts cycle notation "(1,5,4)(2)(3)(6)", one-line "[5,2,3,1,4,6]",
/// and "" / "()" / "[]" for the empty permutation.
Permutation parse_permutation(std::string_view text);

/// Cycle notation with fixed points written out; the empty permutation is "()".
std::string format_cycles(const Permutation& perm);
std::string format_one_line(const Permutation& perm);

PermStats stats(const Permutation& perm);

bool is_straight_menage(const Permutation& perm);
bool is_ordinary_menage(const Permutation& perm);

/// Iterates S_n in lexicographic one-line order.
class SymmetricGroup {
 public:
  class iterator {
   public:
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(std::vector<int> current, bool done) : current_(std::move(current)), done_(done) {}

    Permutation operator*() const { return Permutation(current_); }
    iterator& operator++();
    iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const iterator& other) const {
      return done_ == other.done_ && (done_ || current_ == other.current_);
    }

   private:
    std::vector<int> current_;
    bool done_ = true;
  };

  explicit SymmetricGroup(std::size_t n, std::size_t limit = kDefaultEnumerationLimit);

  iterator begin() const;
  iterator end() const { return {}; }
  std::size_t degree() const { return n_; }

 private:
  std::size_t n_;
};

/// Materialized form of SymmetricGroup(n, limit).
std::vector<Permutation> enumerate_sn(std::size_t n, std::size_t limit = kDefaultEnumerationLimit);

}  // namespace menage

template <>
struct std::hash<menage::Permutation> {
  std::size_t operator()(const menage::Permutation& perm) const noexcept {
    std::size_t seed = perm.size();
    for (int v : perm.one_line()) seed = seed * 131 + static_cast<std::size_t>(v);
    return seed;
  }
};
