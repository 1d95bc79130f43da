#include "menage/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace menage {

namespace {

bool is_bijection(const std::vector<int>& images) {
  std::vector<bool> seen(images.size() + 1, false);
  for (int v : images) {
    if (v < 1 || static_cast<std::size_t>(v) > images.size() || seen[static_cast<std::size_t>(v)]) {
      return false;
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) {
      throw ParseError(std::string("expected '") + c + "' at offset " + std::to_string(pos_) +
                       " in \"" + std::string(text_) + "\"");
    }
  }
  int integer() {
    skip_space();
    int value = 0;
    const auto* first = text_.data() + pos_;
    const auto* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) {
      throw ParseError("expected a positive integer at offset " + std::to_string(pos_) + " in \"" +
                       std::string(text_) + "\"");
    }
    pos_ += static_cast<std::size_t>(ptr - first);
    if (value < 1) throw ParseError("element " + std::to_string(value) + " is not in [n]");
    return value;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// Every element of [n] exactly once, where n is the largest element seen.
void check_elements(const std::vector<int>& elements) {
  const int n = elements.empty() ? 0 : *std::max_element(elements.begin(), elements.end());
  std::vector<int> count(static_cast<std::size_t>(n) + 1, 0);
  for (int e : elements) {
    if (++count[static_cast<std::size_t>(e)] > 1) {
      throw ParseError("element " + std::to_string(e) + " appears more than once");
    }
  }
  for (int e = 1; e <= n; ++e) {
    if (count[static_cast<std::size_t>(e)] == 0) {
      throw ParseError("element " + std::to_string(e) + " is missing");
    }
  }
}

Permutation parse_one_line(Cursor& cur) {
  cur.expect('[');
  std::vector<int> images;
  if (!cur.accept(']')) {
    do {
      images.push_back(cur.integer());
    } while (cur.accept(','));
    cur.expect(']');
  }
  if (!cur.done()) throw ParseError("trailing characters after one-line permutation");
  if (images.empty()) return {};
  check_elements(images);
  if (static_cast<std::size_t>(*std::max_element(images.begin(), images.end())) != images.size()) {
    throw ParseError("one-line permutation must use exactly the values 1..n");
  }
  return Permutation(std::move(images));
}

Permutation parse_cycle_notation(Cursor& cur) {
  std::vector<std::vector<int>> cycles;
  std::vector<int> all;
  if (cur.done()) return {};
  // "()" alone denotes the empty permutation.
  cur.expect('(');
  if (cur.accept(')')) {
    if (!cur.done()) throw ParseError("empty cycle \"()\" is only valid on its own");
    return {};
  }
  while (true) {
    std::vector<int> cycle;
    do {
      cycle.push_back(cur.integer());
    } while (cur.accept(','));
    cur.expect(')');
    all.insert(all.end(), cycle.begin(), cycle.end());
    cycles.push_back(std::move(cycle));
    if (cur.done()) break;
    cur.expect('(');
  }
  check_elements(all);
  std::vector<int> images(all.size(), 0);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      images[static_cast<std::size_t>(cycle[k] - 1)] = cycle[(k + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

void append_list(std::ostringstream& out, const std::vector<int>& values) {
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k > 0) out << ',';
    out << values[k];
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (!is_bijection(images_)) throw std::invalid_argument("one-line images do not form a bijection of [n]");
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

int Permutation::at(int i) const {
  if (i < 1 || static_cast<std::size_t>(i) > size()) {
    throw std::out_of_range("point " + std::to_string(i) + " outside [" + std::to_string(size()) + "]");
  }
  return (*this)(i);
}

std::vector<int> Permutation::inverse_one_line() const {
  std::vector<int> inv(size());
  for (std::size_t i = 0; i < size(); ++i) inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i + 1);
  return inv;
}

bool Permutation::is_succession(int i) const {
  return i >= 1 && static_cast<std::size_t>(i) < size() && (*this)(i) == i + 1;
}

bool Permutation::is_generalized_succession(int i) const {
  const auto n = static_cast<int>(size());
  if (i < 1 || i > n) return false;
  return (*this)(i) == (i % n) + 1;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> result;
  std::vector<bool> seen(size() + 1, false);
  for (int start = 1; static_cast<std::size_t>(start) <= size(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    for (int j = start; !seen[static_cast<std::size_t>(j)]; j = (*this)(j)) {
      seen[static_cast<std::size_t>(j)] = true;
      cycle.push_back(j);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

Permutation parse_permutation(std::string_view text) {
  Cursor cur(text);
  if (cur.peek() == '[') return parse_one_line(cur);
  return parse_cycle_notation(cur);
}

std::string format_cycles(const Permutation& perm) {
  if (perm.empty()) return "()";
  std::ostringstream out;
  for (const auto& cycle : perm.cycles()) {
    out << '(';
    append_list(out, cycle);
    out << ')';
  }
  return out.str();
}

std::string format_one_line(const Permutation& perm) {
  std::ostringstream out;
  out << '[';
  append_list(out, perm.one_line());
  out << ']';
  return out.str();
}

PermStats stats(const Permutation& perm) {
  PermStats s;
  const auto n = static_cast<int>(perm.size());
  s.cycles = perm.cycles().size();
  for (int i = 1; i <= n; ++i) {
    if (perm.is_fixed_point(i)) ++s.fixed_points;
    if (perm.is_succession(i)) ++s.successions;
    if (perm.is_generalized_succession(i)) ++s.generalized_successions;
  }
  return s;
}

bool is_straight_menage(const Permutation& perm) {
  const auto s = stats(perm);
  return s.fixed_points == 0 && s.successions == 0;
}

bool is_ordinary_menage(const Permutation& perm) {
  const auto s = stats(perm);
  return s.fixed_points == 0 && s.generalized_successions == 0;
}

SymmetricGroup::SymmetricGroup(std::size_t n, std::size_t limit) : n_(n) {
  if (n > limit) {
    throw LimitExceeded("enumeration of S_" + std::to_string(n) + " exceeds the limit " + std::to_string(limit));
  }
}

SymmetricGroup::iterator SymmetricGroup::begin() const {
  std::vector<int> first(n_);
  std::iota(first.begin(), first.end(), 1);
  return iterator(std::move(first), false);
}

SymmetricGroup::iterator& SymmetricGroup::iterator::operator++() {
  if (!std::next_permutation(current_.begin(), current_.end())) {
    done_ = true;
    current_.clear();
  }
  return *this;
}

std::vector<Permutation> enumerate_sn(std::size_t n, std::size_t limit) {
  std::vector<Permutation> result;
  for (const auto& perm : SymmetricGroup(n, limit)) result.push_back(perm);
  return result;
}

}  // namespace menage
