#include "menage/nice_bijection.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace menage {

namespace {

std::vector<int> insert_point(const NiceBijection& f, int site, int site_image, bool bump_at_site) {
  // Values >= threshold move up by one to make room for `site_image`.
  const int threshold = bump_at_site ? site : site + 1;
  const auto s = static_cast<int>(f.size());
  std::vector<int> out(static_cast<std::size_t>(s + 1));
  for (int x = 1; x <= s + 1; ++x) {
    int value;
    if (x == site) {
      value = site_image;
    } else {
      value = f(x < site ? x : x - 1);
      if (value >= threshold) ++value;
    }
    out[static_cast<std::size_t>(x - 1)] = value;
  }
  return out;
}

}  // namespace

NiceBijection::NiceBijection(std::vector<int> images) : images_(std::move(images)) {
  if (!is_nice(images_)) throw std::invalid_argument("bijection " + format_bijection(*this) + " is not nice");
}

bool is_shifted_bijection(std::span<const int> images) {
  const std::size_t n = images.size();
  if (n == 0) return false;
  std::vector<bool> seen(n + 2, false);
  for (int v : images) {
    if (v < 2 || static_cast<std::size_t>(v) > n + 1 || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

bool is_nice(std::span<const int> images) {
  if (!is_shifted_bijection(images)) {
    throw std::invalid_argument("not a bijection [n] -> {2,...,n+1}");
  }
  return reduce_bijection_fully(images).size() == 1;
}

std::vector<ReductionStep> bijection_reductions(std::span<const int> images) {
  std::vector<ReductionStep> steps;
  const auto n = static_cast<int>(images.size());
  for (int i = 1; i <= n; ++i) {
    const int v = images[static_cast<std::size_t>(i - 1)];
    if (v == i) steps.push_back({ReductionKind::type1, i, images.size()});
    if (v == i + 1) steps.push_back({ReductionKind::type2, i, images.size()});
  }
  return steps;
}

std::vector<int> reduce_bijection(std::span<const int> images, const ReductionStep& step) {
  const auto n = static_cast<int>(images.size());
  if (step.before_n != images.size() || step.site < 1 || step.site > n) {
    throw std::invalid_argument("bijection reduction site out of range");
  }
  const int v = images[static_cast<std::size_t>(step.site - 1)];
  const std::vector<int> copy(images.begin(), images.end());
  switch (step.kind) {
    case ReductionKind::type1:
      if (v != step.site) throw std::invalid_argument("bijection has no fixed point at the given site");
      return detail::glue_arc(copy, step.site, step.site);
    case ReductionKind::type2:
      if (v != step.site + 1) throw std::invalid_argument("bijection has no succession at the given site");
      return detail::glue_arc(copy, step.site, step.site + 1);
    case ReductionKind::type3:
      break;
  }
  throw std::invalid_argument("bijections only admit type1 and type2 reductions");
}

std::vector<int> reduce_bijection_fully(std::span<const int> images, const ReductionPolicy& policy) {
  std::vector<int> current(images.begin(), images.end());
  while (current.size() > 1) {
    const auto steps = bijection_reductions(current);
    if (steps.empty()) break;
    current = reduce_bijection(current, steps[policy(steps)]);
  }
  return current;
}

std::vector<NiceBijection> enumerate_nice(std::size_t n, std::size_t limit) {
  if (n > limit) {
    throw LimitExceeded("nice bijections on [" + std::to_string(n) + "] exceed the limit " + std::to_string(limit));
  }
  std::vector<NiceBijection> result;
  if (n == 0) return result;
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 2);
  do {
    if (is_nice(images)) result.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return result;
}

NiceBijection b1(const NiceBijection& f, int w1) {
  const auto s = static_cast<int>(f.size());
  if (w1 <= 1 || w1 > s + 1) {
    throw std::invalid_argument("b1 site " + std::to_string(w1) + " must satisfy 1 < w1 <= " + std::to_string(s + 1));
  }
  return NiceBijection(insert_point(f, w1, w1, true));
}

NiceBijection b2(const NiceBijection& f, int w2) {
  const auto s = static_cast<int>(f.size());
  if (w2 < 1 || w2 > s + 1) {
    throw std::invalid_argument("b2 site " + std::to_string(w2) + " must satisfy 1 <= w2 <= " + std::to_string(s + 1));
  }
  return NiceBijection(insert_point(f, w2, w2 + 1, false));
}

std::string format_bijection(const NiceBijection& f) {
  std::ostringstream out;
  out << '[';
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (k > 0) out << ',';
    out << f.images()[k];
  }
  out << ']';
  return out.str();
}

NiceBijection parse_bijection(std::string_view text) {
  // Reuse the one-line list grammar, minus the permutation check.
  std::vector<int> images;
  std::string body;
  for (char c : text) {
    if (c != ' ') body.push_back(c);
  }
  if (body.size() < 3 || body.front() != '[' || body.back() != ']') {
    throw ParseError("bijection must look like [3,2,4]: \"" + std::string(text) + "\"");
  }
  std::stringstream items(body.substr(1, body.size() - 2));
  std::string item;
  while (std::getline(items, item, ',')) {
    try {
      std::size_t used = 0;
      images.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("bad element '" + item + "' in bijection \"" + std::string(text) + "\"");
    }
  }
  if (!is_shifted_bijection(images)) {
    throw ParseError("not a bijection [n] -> {2,...,n+1}: \"" + std::string(text) + "\"");
  }
  try {
    return NiceBijection(std::move(images));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace menage
