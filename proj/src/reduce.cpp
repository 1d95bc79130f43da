#include "menage/reduce.hpp"

#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>

namespace menage {

namespace detail {

std::vector<int> glue_arc(const std::vector<int>& images, int position, int value) {
  std::vector<int> out;
  out.reserve(images.size() - 1);
  for (std::size_t j = 0; j < images.size(); ++j) {
    if (static_cast<int>(j) + 1 == position) continue;
    const int v = images[j];
    out.push_back(v > value ? v - 1 : v);
  }
  return out;
}

}  // namespace detail

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

std::string site_text(int i, const Permutation& perm) {
  return "site " + std::to_string(i) + " of a permutation in S_" + std::to_string(perm.size());
}

}  // namespace

std::string to_string(Mode mode) { return mode == Mode::straight ? "straight" : "ordinary"; }

std::string to_string(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::type1:
      return "type1";
    case ReductionKind::type2:
      return "type2";
    case ReductionKind::type3:
      return "type3";
  }
  return "?";
}

Mode parse_mode(std::string_view text) {
  if (text == "straight") return Mode::straight;
  if (text == "ordinary") return Mode::ordinary;
  throw std::invalid_argument("unknown mode '" + std::string(text) + "' (expected straight|ordinary)");
}

Permutation reduce_type1(const Permutation& perm, int i) {
  const auto n = static_cast<int>(perm.size());
  require(i >= 1 && i <= n, "type1 reduction: " + site_text(i, perm) + " is out of range");
  require(perm(i) == i, "type1 reduction: " + site_text(i, perm) + " is not a fixed point");
  return Permutation(detail::glue_arc(perm.one_line(), i, i));
}

Permutation reduce_type2(const Permutation& perm, int i) {
  const auto n = static_cast<int>(perm.size());
  require(i >= 1 && i < n, "type2 reduction: " + site_text(i, perm) + " is out of range");
  require(perm(i) == i + 1, "type2 reduction: " + site_text(i, perm) + " is not a succession");
  return Permutation(detail::glue_arc(perm.one_line(), i, i + 1));
}

Permutation reduce_type3(const Permutation& perm, int i) {
  const auto n = static_cast<int>(perm.size());
  require(i >= 1 && i <= n, "type3 reduction: " + site_text(i, perm) + " is out of range");
  require(perm.is_generalized_succession(i),
          "type3 reduction: " + site_text(i, perm) + " is not a generalized succession");
  if (i < n) return reduce_type2(perm, i);
  if (n == 1) return {};
  const int preimage_of_n = perm.inverse_one_line()[static_cast<std::size_t>(n - 1)];
  std::vector<int> images(perm.one_line().begin(), perm.one_line().end() - 1);
  images[static_cast<std::size_t>(preimage_of_n - 1)] = 1;
  return Permutation(std::move(images));
}

Permutation apply_step(const Permutation& perm, const ReductionStep& step) {
  require(step.before_n == perm.size(), "reduction step recorded for S_" + std::to_string(step.before_n) +
                                            " applied to S_" + std::to_string(perm.size()));
  switch (step.kind) {
    case ReductionKind::type1:
      return reduce_type1(perm, step.site);
    case ReductionKind::type2:
      return reduce_type2(perm, step.site);
    case ReductionKind::type3:
      return reduce_type3(perm, step.site);
  }
  throw std::logic_error("unreachable reduction kind");
}

Permutation replay(const Permutation& input, std::span<const ReductionStep> steps) {
  Permutation current = input;
  for (const auto& step : steps) current = apply_step(current, step);
  return current;
}

std::vector<ReductionStep> applicable_reductions(const Permutation& perm, Mode mode) {
  std::vector<ReductionStep> steps;
  const auto n = static_cast<int>(perm.size());
  for (int i = 1; i <= n; ++i) {
    if (perm.is_fixed_point(i)) steps.push_back({ReductionKind::type1, i, perm.size()});
    if (mode == Mode::straight && perm.is_succession(i)) {
      steps.push_back({ReductionKind::type2, i, perm.size()});
    }
    if (mode == Mode::ordinary && perm.is_generalized_succession(i)) {
      steps.push_back({ReductionKind::type3, i, perm.size()});
    }
  }
  return steps;
}

ReductionPolicy smallest_site_policy() {
  return [](std::span<const ReductionStep>) -> std::size_t { return 0; };
}

ReductionPolicy random_policy(std::uint64_t seed) {
  auto engine = std::make_shared<std::mt19937_64>(seed);
  return [engine](std::span<const ReductionStep> steps) -> std::size_t {
    std::uniform_int_distribution<std::size_t> pick(0, steps.size() - 1);
    return pick(*engine);
  };
}

ReductionTrace normal_form(const Permutation& perm, Mode mode, const ReductionPolicy& policy) {
  ReductionTrace trace{{}, perm};
  while (true) {
    const auto steps = applicable_reductions(trace.result, mode);
    if (steps.empty()) break;
    const auto choice = policy(steps);
    if (choice >= steps.size()) throw std::out_of_range("reduction policy chose a nonexistent step");
    trace.result = apply_step(trace.result, steps[choice]);
    trace.steps.push_back(steps[choice]);
  }
  return trace;
}

std::string format_trace(const ReductionTrace& trace) {
  std::ostringstream out;
  for (const auto& step : trace.steps) {
    out << to_string(step.kind) << ' ' << step.site << ' ' << step.before_n << '\n';
  }
  out << format_cycles(trace.result) << '\n';
  return out.str();
}

}  // namespace menage
