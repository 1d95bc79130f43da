#include <doctest.h>

#include <stdexcept>

#include "menage/permutation.hpp"
#include "menage/reduce.hpp"

using namespace menage;

namespace {

Permutation one_line(std::vector<int> images) { return Permutation(std::move(images)); }
Permutation cyc(const char* text) { return parse_permutation(text); }

}  // namespace

TEST_CASE("type 1 removes a fixed point") {
  CHECK(reduce_type1(cyc("(1,5,6,4)(2)(3)(7)"), 3) == cyc("(1,4,5,3)(2)(6)"));
  CHECK(reduce_type1(Permutation::identity(1), 1).empty());
  CHECK(reduce_type1(Permutation::identity(3), 2) == Permutation::identity(2));
  CHECK_THROWS_AS(reduce_type1(cyc("(1,2)"), 1), std::invalid_argument);
  CHECK_THROWS_AS(reduce_type1(Permutation::identity(2), 3), std::invalid_argument);
}

TEST_CASE("type 2 glues a succession") {
  CHECK(reduce_type2(cyc("(1,5,6,4)(2)(3)(7)"), 5) == cyc("(1,5,4)(2)(3)(6)"));
  CHECK(reduce_type2(one_line({2, 1}), 1) == Permutation::identity(1));
  CHECK(reduce_type2(cyc("(1,2,3)"), 1) == cyc("(1,2)"));
  CHECK_THROWS_AS(reduce_type2(cyc("(1,2,3)"), 3), std::invalid_argument);
  CHECK_THROWS_AS(reduce_type2(Permutation::identity(2), 1), std::invalid_argument);
}

TEST_CASE("type 3 glues a generalized succession") {
  CHECK(reduce_type3(cyc("(1,5,6,7)(2)(3)(4)"), 7) == cyc("(1,5,6)(2)(3)(4)"));
  CHECK(reduce_type3(Permutation::identity(1), 1).empty());
  CHECK(reduce_type3(one_line({2, 3, 1}), 3) == one_line({2, 1}));
  CHECK(reduce_type3(one_line({2, 3, 1}), 1) == reduce_type2(one_line({2, 3, 1}), 1));
  CHECK_THROWS_AS(reduce_type3(one_line({3, 1, 2}), 3), std::invalid_argument);
}

TEST_CASE("normal forms of worked examples") {
  CHECK(normal_form(cyc("(1,3)(2)(4,5,6)"), Mode::straight).result.empty());
  CHECK(normal_form(cyc("(1,5,4)(2)(3)(6)"), Mode::straight).result == cyc("(1,3,2)"));
  CHECK(normal_form(one_line({2, 3, 1}), Mode::ordinary).result.empty());
  CHECK(normal_form(one_line({2, 3, 1}), Mode::straight).result.empty());
  CHECK(normal_form(Permutation(), Mode::ordinary).result.empty());
}

TEST_CASE("trace format and replay") {
  const auto input = cyc("(1,5,4)(2)(3)(6)");
  const auto trace = normal_form(input, Mode::straight);
  CHECK(format_trace(trace) == "type1 2 6\ntype1 2 5\ntype1 4 4\n(1,3,2)\n");
  CHECK(replay(input, trace.steps) == trace.result);
  CHECK_THROWS_AS(apply_step(input, ReductionStep{ReductionKind::type1, 2, 5}), std::invalid_argument);
}

TEST_CASE("mode names") {
  CHECK(parse_mode("straight") == Mode::straight);
  CHECK(parse_mode("ordinary") == Mode::ordinary);
  CHECK(to_string(Mode::ordinary) == "ordinary");
  CHECK(to_string(ReductionKind::type3) == "type3");
  CHECK_THROWS_AS(parse_mode("circular"), std::invalid_argument);
}

TEST_CASE("applicable reductions are ordered by site, type 1 first") {
  const auto steps = applicable_reductions(Permutation::identity(1), Mode::ordinary);
  REQUIRE(steps.size() == 2);
  CHECK(steps[0].kind == ReductionKind::type1);
  CHECK(steps[1].kind == ReductionKind::type3);
  CHECK(applicable_reductions(one_line({3, 1, 2}), Mode::straight).empty());
  CHECK(applicable_reductions(one_line({3, 1, 2}), Mode::ordinary).empty());
}

TEST_CASE("property: every step shrinks by one and normal forms are menage") {
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const auto& p : SymmetricGroup(n)) {
      for (const Mode mode : {Mode::straight, Mode::ordinary}) {
        for (const auto& step : applicable_reductions(p, mode)) {
          REQUIRE(apply_step(p, step).size() + 1 == n);
        }
        const auto trace = normal_form(p, mode);
        REQUIRE(trace.steps.size() + trace.result.size() == n);
        REQUIRE(replay(p, trace.steps) == trace.result);
        if (mode == Mode::straight) {
          REQUIRE(is_straight_menage(trace.result));
        } else {
          REQUIRE(is_ordinary_menage(trace.result));
        }
        const bool menage = mode == Mode::straight ? is_straight_menage(p) : is_ordinary_menage(p);
        REQUIRE(menage == applicable_reductions(p, mode).empty());
      }
    }
  }
}

TEST_CASE("property: normal forms do not depend on the reduction order") {
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const auto& p : SymmetricGroup(n)) {
      for (const Mode mode : {Mode::straight, Mode::ordinary}) {
        const auto reference = normal_form(p, mode).result;
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
          REQUIRE(normal_form(p, mode, random_policy(seed)).result == reference);
        }
      }
    }
  }
}

TEST_CASE("random policies are reproducible") {
  const auto p = cyc("(1,2)(3)(4,5,6)(7)");
  const auto a = normal_form(p, Mode::ordinary, random_policy(7));
  const auto b = normal_form(p, Mode::ordinary, random_policy(7));
  CHECK(a.steps == b.steps);
}
