#include "menage/expand.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "menage/identities.hpp"
#include "menage/series.hpp"

namespace menage {

namespace {

// Slots are laid out left to right (or counter-clockwise on the circle); each
// slot gets exactly one outgoing arc.
class Layout {
 public:
  void place_gap(const NoncrossingPartition& partition) {
    const std::size_t start = target_.size();
    const Permutation induced = induced_permutation(partition);
    target_.resize(start + induced.size());
    for (int e = 1; static_cast<std::size_t>(e) <= induced.size(); ++e) {
      target_[start + static_cast<std::size_t>(e - 1)] = start + static_cast<std::size_t>(induced(e) - 1);
    }
  }

  // The block has r+1 slots: r local points mapped by f into 2..r+1. The first
  // slot receives the original incoming arc, the last keeps the outgoing one.
  void place_point(const std::optional<NiceBijection>& f) {
    const std::size_t start = target_.size();
    const std::size_t r = f ? f->size() : 0;
    target_.resize(start + r + 1);
    for (int local = 1; static_cast<std::size_t>(local) <= r; ++local) {
      target_[start + static_cast<std::size_t>(local - 1)] = start + static_cast<std::size_t>((*f)(local) - 1);
    }
    entry_.push_back(start);
    exit_.push_back(start + r);
  }

  void link(const Permutation& perm) {
    for (int p = 1; static_cast<std::size_t>(p) <= perm.size(); ++p) {
      target_[exit_[static_cast<std::size_t>(p - 1)]] = entry_[static_cast<std::size_t>(perm(p) - 1)];
    }
  }

  std::size_t size() const { return target_.size(); }
  std::size_t entry(std::size_t point) const { return entry_[point]; }

  // Slot `first` becomes 1 and the rest are numbered cyclically after it.
  Permutation rotated_from(std::size_t first) const {
    const std::size_t total = target_.size();
    std::vector<int> images(total);
    auto label = [&](std::size_t slot) { return (slot + total - first) % total; };
    for (std::size_t slot = 0; slot < total; ++slot) {
      images[label(slot)] = static_cast<int>(label(target_[slot]) + 1);
    }
    return Permutation(std::move(images));
  }

 private:
  std::vector<std::size_t> target_;
  std::vector<std::size_t> entry_;
  std::vector<std::size_t> exit_;
};

std::size_t bijection_size(const std::optional<NiceBijection>& f) { return f ? f->size() : 0; }

std::size_t partition_total(const std::vector<NoncrossingPartition>& gaps) {
  std::size_t total = 0;
  for (const auto& g : gaps) total += g.size();
  return total;
}

std::size_t bijection_total(const std::vector<std::optional<NiceBijection>>& points) {
  std::size_t total = 0;
  for (const auto& f : points) total += bijection_size(f);
  return total;
}

// Lexicographic compositions of `total` into `parts` nonnegative parts.
void for_each_composition(std::size_t parts, std::size_t total,
                          const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> current;
  std::function<void(std::size_t)> recurse = [&](std::size_t remaining) {
    if (current.size() + 1 == parts) {
      current.push_back(remaining);
      visit(current);
      current.pop_back();
      return;
    }
    for (std::size_t v = 0; v <= remaining; ++v) {
      current.push_back(v);
      recurse(remaining - v);
      current.pop_back();
    }
  };
  if (parts == 0) {
    if (total == 0) visit(current);
    return;
  }
  recurse(total);
}

// Mixed-radix odometer; the first digit varies slowest.
void for_each_index_tuple(const std::vector<std::size_t>& radices,
                          const std::function<void(const std::vector<std::size_t>&)>& visit) {
  for (auto r : radices) {
    if (r == 0) return;
  }
  std::vector<std::size_t> digits(radices.size(), 0);
  while (true) {
    visit(digits);
    std::size_t k = digits.size();
    while (k > 0) {
      --k;
      if (++digits[k] < radices[k]) break;
      digits[k] = 0;
      if (k == 0) return;
    }
    if (digits.empty()) return;
  }
}

struct Catalogue {
  std::vector<std::vector<NoncrossingPartition>> partitions;
  std::vector<std::vector<std::optional<NiceBijection>>> bijections;

  explicit Catalogue(std::size_t n) {
    for (std::size_t k = 0; k <= n; ++k) {
      partitions.push_back(enumerate_ncp(k, n));
      std::vector<std::optional<NiceBijection>> options;
      if (k == 0) {
        options.emplace_back(std::nullopt);
      } else {
        for (auto& f : enumerate_nice(k, n)) options.emplace_back(std::move(f));
      }
      bijections.push_back(std::move(options));
    }
  }
};

template <class Plan>
void for_each_shaped_plan(std::size_t gap_count, std::size_t point_count, std::size_t n,
                          const std::function<void(Plan&)>& visit) {
  const Catalogue catalogue(n);
  for_each_composition(gap_count + point_count, n, [&](const std::vector<std::size_t>& sizes) {
    std::vector<std::size_t> radices;
    for (std::size_t k = 0; k < gap_count; ++k) radices.push_back(catalogue.partitions[sizes[k]].size());
    for (std::size_t k = 0; k < point_count; ++k) {
      radices.push_back(catalogue.bijections[sizes[gap_count + k]].size());
    }
    for_each_index_tuple(radices, [&](const std::vector<std::size_t>& digits) {
      Plan plan;
      for (std::size_t k = 0; k < gap_count; ++k) {
        plan.gap_partitions.push_back(catalogue.partitions[sizes[k]][digits[k]]);
      }
      for (std::size_t k = 0; k < point_count; ++k) {
        plan.point_bijections.push_back(catalogue.bijections[sizes[gap_count + k]][digits[gap_count + k]]);
      }
      visit(plan);
    });
  });
}

}  // namespace

std::size_t ExpansionPlanStraight::added_points() const {
  return partition_total(gap_partitions) + bijection_total(point_bijections);
}

std::size_t ExpansionPlanOrdinary::added_points() const {
  return partition_total(gap_partitions) + bijection_total(point_bijections);
}

std::size_t ExpansionPlanOrdinary::anchor_choices() const {
  if (gap_partitions.empty() || point_bijections.empty()) return 0;
  return gap_partitions.back().size() + bijection_size(point_bijections.front()) + 1;
}

Permutation apply_plan_straight(const Permutation& perm, const ExpansionPlanStraight& plan) {
  if (!is_straight_menage(perm)) {
    throw std::invalid_argument(format_cycles(perm) + " is not a straight menage permutation");
  }
  const std::size_t m = perm.size();
  if (plan.gap_partitions.size() != m + 1 || plan.point_bijections.size() != m) {
    throw std::invalid_argument("straight plan needs " + std::to_string(m + 1) + " gaps and " + std::to_string(m) +
                                " points for a permutation of [" + std::to_string(m) + "]");
  }
  Layout layout;
  for (std::size_t p = 0; p < m; ++p) {
    layout.place_gap(plan.gap_partitions[p]);
    layout.place_point(plan.point_bijections[p]);
  }
  layout.place_gap(plan.gap_partitions[m]);
  layout.link(perm);
  return layout.rotated_from(0);
}

Permutation apply_plan_ordinary(const Permutation& perm, const ExpansionPlanOrdinary& plan) {
  const std::size_t m = perm.size();
  if (m == 0 || !is_ordinary_menage(perm)) {
    throw std::invalid_argument(format_cycles(perm) + " is not a nonempty ordinary menage permutation");
  }
  if (plan.gap_partitions.size() != m || plan.point_bijections.size() != m) {
    throw std::invalid_argument("ordinary plan needs " + std::to_string(m) + " gaps and " + std::to_string(m) +
                                " points for a permutation of [" + std::to_string(m) + "]");
  }
  if (plan.anchor >= plan.anchor_choices()) {
    throw std::invalid_argument("anchor " + std::to_string(plan.anchor) + " exceeds the " +
                                std::to_string(plan.anchor_choices()) + " available choices");
  }
  Layout layout;
  for (std::size_t p = 0; p < m; ++p) {
    layout.place_point(plan.point_bijections[p]);
    layout.place_gap(plan.gap_partitions[p]);
  }
  layout.link(perm);
  const std::size_t block_one = bijection_size(plan.point_bijections.front()) + 1;
  const std::size_t last_gap = plan.gap_partitions.back().size();
  const std::size_t first = plan.anchor < block_one ? layout.entry(0) + plan.anchor
                                                    : layout.size() - last_gap + (plan.anchor - block_one);
  return layout.rotated_from(first);
}

void for_each_plan_straight(std::size_t m, std::size_t n,
                            const std::function<void(const ExpansionPlanStraight&)>& visit) {
  for_each_shaped_plan<ExpansionPlanStraight>(m + 1, m, n, [&](ExpansionPlanStraight& plan) { visit(plan); });
}

void for_each_plan_ordinary(std::size_t m, std::size_t n,
                            const std::function<void(const ExpansionPlanOrdinary&)>& visit) {
  if (m == 0) throw std::invalid_argument("ordinary plans need at least one point");
  for_each_shaped_plan<ExpansionPlanOrdinary>(m, m, n, [&](ExpansionPlanOrdinary& plan) {
    const std::size_t choices = plan.anchor_choices();
    for (std::size_t a = 0; a < choices; ++a) {
      plan.anchor = a;
      visit(plan);
    }
  });
}

ExpansionSet enumerate_expansions(const Permutation& perm, std::size_t n, Mode mode, std::size_t limit) {
  const std::size_t m = perm.size();
  if (m + n > limit) {
    throw LimitExceeded("expansions into S_" + std::to_string(m + n) + " exceed the limit " + std::to_string(limit));
  }
  ExpansionSet result;
  auto add = [&](const Permutation& tau) {
    result.permutations.insert(tau);
    ++result.constructions;
  };
  if (mode == Mode::straight) {
    if (!is_straight_menage(perm)) {
      throw std::invalid_argument(format_cycles(perm) + " is not a straight menage permutation");
    }
    for_each_plan_straight(m, n, [&](const ExpansionPlanStraight& plan) { add(apply_plan_straight(perm, plan)); });
    return result;
  }
  if (!is_ordinary_menage(perm)) {
    throw std::invalid_argument(format_cycles(perm) + " is not an ordinary menage permutation");
  }
  if (m == 0) {
    for (const auto& partition : enumerate_ncp(n, limit)) add(induced_permutation(partition));
    return result;
  }
  for_each_plan_ordinary(m, n, [&](const ExpansionPlanOrdinary& plan) { add(apply_plan_ordinary(perm, plan)); });
  return result;
}

std::set<Permutation> brute_force_expansions(const Permutation& perm, std::size_t n, Mode mode, std::size_t limit) {
  std::set<Permutation> result;
  for (const auto& tau : SymmetricGroup(perm.size() + n, limit)) {
    if (normal_form(tau, mode).result == perm) result.insert(tau);
  }
  return result;
}

BigInt w_count(std::size_t m, std::size_t n) {
  const Rational coeff = catalan_series(n).power(2 * m + 1)[n];
  return numerator(coeff);
}

BigInt r_count(std::size_t m, std::size_t n) {
  if (m == 0) return catalan_number(n);
  const TruncatedSeries c = catalan_series(n + 1);
  const TruncatedSeries series = c.derivative() * c.truncated(n).power(2 * m - 2);
  return numerator(series[n]);
}

VerificationReport verify_w_convolution(std::size_t order) {
  VerificationReport report{"wmn", order};
  for (std::size_t n = 0; n <= order; ++n) {
    BigInt sum = 0;
    for (std::size_t i = 0; i <= n; ++i) sum += w_count(i, n - i) * menage_V(i);
    report.record(sum == factorial(n), "n! = sum_i w_i^(n-i) V_i at n=" + std::to_string(n), to_string(factorial(n)),
                  to_string(sum));
  }
  return report;
}

VerificationReport verify_r_convolution(std::size_t order) {
  VerificationReport report{"rmn", order};
  for (std::size_t n = 0; n <= order; ++n) {
    BigInt sum = 0;
    for (std::size_t i = 0; i <= n; ++i) sum += r_count(i, n - i) * menage_U(i);
    report.record(sum == factorial(n), "n! = sum_i r_i^(n-i) U_i at n=" + std::to_string(n), to_string(factorial(n)),
                  to_string(sum));
  }
  return report;
}

VerificationReport verify_expansion_oracle(Mode mode, std::size_t max_total, std::size_t max_m) {
  VerificationReport report{mode == Mode::straight ? "expansion-straight" : "expansion-ordinary", max_total};
  // Brute-force classes: for each size, normal form -> set of permutations reducing to it.
  std::vector<std::map<Permutation, std::set<Permutation>>> classes(max_total + 1);
  for (std::size_t size = 0; size <= max_total; ++size) {
    for (const auto& tau : SymmetricGroup(size, max_total)) {
      classes[size][normal_form(tau, mode).result].insert(tau);
    }
  }
  const auto is_menage = mode == Mode::straight ? is_straight_menage : is_ordinary_menage;
  for (std::size_t m = 0; m <= std::min(max_m, max_total); ++m) {
    for (const auto& perm : SymmetricGroup(m, max_total)) {
      if (!is_menage(perm)) continue;
      for (std::size_t n = 0; m + n <= max_total; ++n) {
        const auto built = enumerate_expansions(perm, n, mode, max_total);
        const std::string where = format_cycles(perm) + " n=" + std::to_string(n);
        const auto& oracle = classes[m + n][perm];
        report.record(built.permutations == oracle, "constructive set equals brute force for " + where,
                      std::to_string(oracle.size()) + " permutations",
                      std::to_string(built.permutations.size()) + " permutations");
        const BigInt expected = mode == Mode::straight ? w_count(m, n) : r_count(m, n);
        report.record(BigInt(built.permutations.size()) == expected, "count equals series coefficient for " + where,
                      to_string(expected), std::to_string(built.permutations.size()));
        report.record(built.constructions == built.permutations.size(), "constructions are distinct for " + where,
                      std::to_string(built.constructions), std::to_string(built.permutations.size()));
      }
    }
  }
  return report;
}

}  // namespace menage
