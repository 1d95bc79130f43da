#include <doctest.h>

#include <stdexcept>

#include "menage/cycles.hpp"
#include "menage/identities.hpp"

using namespace menage;

namespace {

std::vector<BigInt> row(std::initializer_list<long> values) {
  std::vector<BigInt> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

std::vector<WeightPoint> grid() { return default_weight_grid(); }

}  // namespace

TEST_CASE("straight cycle tables") {
  CHECK(straight_by_cycles(0) == row({1}));
  CHECK(straight_by_cycles(1) == row({0, 0}));
  CHECK(straight_by_cycles(3) == row({0, 1, 0, 0}));
  CHECK(straight_by_cycles(4) == row({0, 2, 1, 0, 0}));
  CHECK(straight_by_cycles(5) == row({0, 9, 7, 0, 0, 0}));
  CHECK(straight_by_cycles(6) == row({0, 44, 47, 5, 0, 0, 0}));
  CHECK(straight_by_cycles(7) == row({0, 265, 336, 74, 0, 0, 0, 0}));
  CHECK(straight_by_cycles(8) == row({0, 1854, 2669, 854, 36, 0, 0, 0, 0}));
  CHECK_THROWS_AS(straight_by_cycles(9), LimitExceeded);
}

TEST_CASE("ordinary cycle tables") {
  CHECK(ordinary_by_cycles(0) == row({1}));
  CHECK(ordinary_by_cycles(1) == row({0, 0}));
  CHECK(ordinary_by_cycles(3) == row({0, 1, 0, 0}));
  CHECK(ordinary_by_cycles(4) == row({0, 1, 1, 0, 0}));
  CHECK(ordinary_by_cycles(5) == row({0, 8, 5, 0, 0, 0}));
  CHECK(ordinary_by_cycles(6) == row({0, 36, 40, 4, 0, 0, 0}));
  CHECK(ordinary_by_cycles(7) == row({0, 229, 287, 63, 0, 0, 0, 0}));
  CHECK(ordinary_by_cycles(8) == row({0, 1625, 2338, 744, 31, 0, 0, 0, 0}));
}

TEST_CASE("table totals are the menage numbers") {
  for (std::size_t n = 0; n <= 8; ++n) {
    BigInt v = 0;
    BigInt u = 0;
    for (const auto& x : straight_by_cycles(n)) v += x;
    for (const auto& x : ordinary_by_cycles(n)) u += x;
    CHECK(v == menage_V(n));
    CHECK(u == menage_U(n));
  }
}

TEST_CASE("cycle table json") {
  const auto table = straight_by_cycles(4);
  CHECK(cycle_table_json(4, Mode::straight, table) ==
        R"({"n":4,"kind":"straight","counts":{"1":2,"2":1,"3":0,"4":0},"total":3})");
  CHECK(cycle_table_json(0, Mode::ordinary, ordinary_by_cycles(0)) ==
        R"({"n":0,"kind":"ordinary","counts":{},"total":1})");
}

TEST_CASE("rising factorial and the M, L polynomials") {
  CHECK(rising_factorial(Rational(7, 3), 0) == 1);
  CHECK(rising_factorial(2, 3) == 24);
  CHECK(rising_factorial(1, 6) == 720);
  CHECK(poly_M(4, 3, 1, 1) == 360);
  CHECK(poly_M(5, 1, 0, 0) == 16);
  CHECK(poly_L(5, 1, 0, 0) == 13);
  for (std::size_t n = 0; n <= 6; ++n) {
    CHECK(poly_M(n, Rational(5, 2), 1, 1) == rising_factorial(Rational(5, 2), n));
    CHECK(poly_L(n, -3, 1, 1) == rising_factorial(-3, n));
  }
}

TEST_CASE("colored permutations") {
  const auto zero = enumerate_colored(0);
  REQUIRE(zero.size() == 1);
  CHECK(zero.front().red.empty());
  CHECK(zero.front().yellow.empty());

  const auto one = enumerate_colored(1);
  CHECK(one.size() == 4);
  std::size_t in_a = 0;
  for (const auto& c : one) in_a += c.in_A() ? 1 : 0;
  CHECK(in_a == 2);

  std::size_t swap_colorings = 0;
  for (const auto& c : enumerate_colored(2)) swap_colorings += c.base == Permutation(std::vector<int>{2, 1}) ? 1 : 0;
  CHECK(swap_colorings == 4);

  CHECK_THROWS_AS(enumerate_colored(7), LimitExceeded);
}

TEST_CASE("weights") {
  const ColoredPermutation swap{Permutation(std::vector<int>{2, 1}), {}, {1, 2}};
  CHECK(swap.in_A());
  CHECK(swap.colored_successions() == 1);
  const WeightPoint p{3, 5, 7};
  CHECK(weight_w1(swap, p) == 21);
  CHECK(weight_w2(swap, p) == 147);
  const ColoredPermutation id{Permutation::identity(1), {1}, {1}};
  CHECK(weight_w2(id, p) == 105);
  CHECK(weight_w1(id, p) == 15);
}

TEST_CASE("stripping colors") {
  const ColoredPermutation id{Permutation::identity(1), {1}, {1}};
  CHECK(strip_colors(id).empty());
  const ColoredPermutation cyc{Permutation(std::vector<int>{2, 3, 1}), {}, {1, 2, 3}};
  CHECK(strip_colors(cyc).empty());
  const ColoredPermutation partial{parse_permutation("(1,5,4)(2)(3)(6)"), {2, 6}, {}};
  CHECK(strip_colors(partial) == parse_permutation("(1,4,3)(2)"));
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const auto& c : enumerate_colored(n)) {
      const auto stripped = strip_colors(c);
      REQUIRE(stripped.size() + c.red.size() + c.yellow.size() - ((n == 1 && c.red.size() + c.yellow.size() == 2) ? 1 : 0) == n);
    }
  }
}

TEST_CASE("weight sums on the grid") {
  const auto samples = grid();
  for (std::size_t n = 0; n <= 5; ++n) CHECK(verify_weight_sums(n, samples).passed);
  CHECK(verify_weight_sums(6, samples).passed);
}

TEST_CASE("straight weight identity") {
  CHECK(verify_straight_weight_series(5, grid()).passed);
  const std::vector<WeightPoint> collapse{{1, 0, 0}, {1, -1, -1}};
  CHECK(verify_straight_weight_series(7, collapse).passed);
  // At t = u = -1 the left side counts straight menage permutations.
  for (std::size_t n = 0; n <= 7; ++n) CHECK(poly_M(n, 1, 0, 0) == Rational(menage_V(n)));
}

TEST_CASE("colored ordinary identities") {
  CHECK(verify_colored_ordinary(5, grid()).passed);
  CHECK(verify_colored_ordinary(6, grid()).passed);
}

TEST_CASE("base cases of A") {
  const auto report = verify_a_base_cases(6);
  CHECK(report.passed);
  CHECK(report.checks == 8);
}

TEST_CASE("cycle-count identities") {
  CHECK(verify_straight_cycle_identity(0).passed);
  CHECK(verify_straight_cycle_identity(7).passed);
  CHECK(verify_ordinary_cycle_identity(0).passed);
  CHECK(verify_ordinary_cycle_identity(7).passed);
  CHECK(verify_straight_cycle_identity(8).passed);
  CHECK(verify_ordinary_cycle_identity(8).passed);
  CHECK(ordinary_cycle_series(2, 4)[4] == 6);
  CHECK(ordinary_cycle_series(1, 3)[3] == 1);
  CHECK(ordinary_cycle_series(1, 0)[0] == 1);
  CHECK(straight_cycle_series(1, 8)[8] == 5413);
}

TEST_CASE("cycle-count checks are sensitive") {
  // A table off by one in a single entry no longer matches the series.
  auto table = straight_by_cycles(6);
  table[2] += 1;
  Rational perturbed = 0;
  for (std::size_t j = 0; j < table.size(); ++j) perturbed += Rational(table[j]) * ipow(Rational(2), j);
  CHECK(perturbed != straight_cycle_series(2, 6)[6]);
  CHECK(straight_cycle_series(2, 6) != ordinary_cycle_series(2, 6));
  for (const auto& p : grid()) {
    if (p.t == 0 && p.u == 0) continue;
    CHECK(poly_M(4, p.alpha, 1 + p.t, 1 + p.u) != poly_L(4, p.alpha, 1 + p.t, 1 + p.u));
  }
}
