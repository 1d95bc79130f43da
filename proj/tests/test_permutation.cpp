#include <doctest.h>

#include <stdexcept>

#include "menage/permutation.hpp"

using namespace menage;

namespace {

Permutation one_line(std::vector<int> images) { return Permutation(std::move(images)); }

}  // namespace

TEST_CASE("parse cycle notation") {
  const auto perm = parse_permutation("(1,5,4)(2)(3)(6)");
  CHECK(perm.one_line() == std::vector<int>{5, 2, 3, 1, 4, 6});
  CHECK(parse_permutation("(1)(2)(3)") == Permutation::identity(3));
  CHECK(parse_permutation(" ( 1 , 2 ) ( 3 ) ") == one_line({2, 1, 3}));
}

TEST_CASE("parse empty forms") {
  for (const char* text : {"", "()", "[]", "  "}) {
    const auto perm = parse_permutation(text);
    CHECK(perm.empty());
    CHECK(perm.size() == 0);
  }
}

TEST_CASE("parse one-line notation") {
  CHECK(parse_permutation("[3,1,2]") == one_line({3, 1, 2}));
  CHECK(parse_permutation("[1]") == Permutation::identity(1));
}

TEST_CASE("parse errors name the offending element") {
  auto message = [](const char* text) {
    try {
      (void)parse_permutation(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("(1,2)(2,3)").find('2') != std::string::npos);
  CHECK(message("(1,3)").find('2') != std::string::npos);
  CHECK(message("[1,1]").find('1') != std::string::npos);
  CHECK_THROWS_AS(parse_permutation("(1,a)"), ParseError);
  CHECK_THROWS_AS(parse_permutation("(1,2"), ParseError);
  CHECK_THROWS_AS(parse_permutation("[0,1]"), ParseError);
  CHECK_THROWS_AS(parse_permutation("[2,3]"), ParseError);
}

TEST_CASE("constructor rejects non-bijections") {
  CHECK_THROWS(Permutation(std::vector<int>{1, 1}));
  CHECK_THROWS(Permutation(std::vector<int>{0}));
  CHECK_THROWS(Permutation(std::vector<int>{3, 1}));
}

TEST_CASE("formatting") {
  CHECK(format_cycles(Permutation()) == "()");
  CHECK(format_cycles(one_line({5, 2, 3, 1, 4, 6})) == "(1,5,4)(2)(3)(6)");
  CHECK(format_one_line(one_line({3, 1, 2})) == "[3,1,2]");
}

TEST_CASE("cycles start at their minimum and are sorted") {
  const auto cycles = parse_permutation("(4,6,5)(3,1,2)").cycles();
  REQUIRE(cycles.size() == 2);
  CHECK(cycles[0] == std::vector<int>{1, 2, 3});
  CHECK(cycles[1] == std::vector<int>{4, 6, 5});
}

TEST_CASE("statistics") {
  const auto a = stats(parse_permutation("(1,5,4)(2)(3)(6)"));
  CHECK(a.cycles == 4);
  CHECK(a.fixed_points == 3);
  CHECK(a.successions == 0);
  CHECK(a.generalized_successions == 0);

  const auto b = stats(Permutation::identity(1));
  CHECK(b.cycles == 1);
  CHECK(b.fixed_points == 1);
  CHECK(b.successions == 0);
  CHECK(b.generalized_successions == 1);

  const auto c = stats(one_line({2, 1}));
  CHECK(c.cycles == 1);
  CHECK(c.fixed_points == 0);
  CHECK(c.successions == 1);
  CHECK(c.generalized_successions == 2);

  const auto empty = stats(Permutation());
  CHECK(empty.cycles == 0);
  CHECK(empty.generalized_successions == 0);
}

TEST_CASE("menage predicates") {
  CHECK(is_straight_menage(Permutation()));
  CHECK(is_ordinary_menage(Permutation()));
  CHECK_FALSE(is_straight_menage(Permutation::identity(1)));
  CHECK(is_straight_menage(one_line({3, 1, 2})));
  CHECK_FALSE(is_ordinary_menage(one_line({2, 1})));
  CHECK(is_ordinary_menage(one_line({3, 1, 2})));
  CHECK_FALSE(is_ordinary_menage(one_line({2, 3, 1})));
  CHECK_FALSE(is_straight_menage(one_line({2, 3, 1})));
}

TEST_CASE("symmetric group enumeration") {
  const auto s0 = enumerate_sn(0);
  REQUIRE(s0.size() == 1);
  CHECK(s0.front().empty());

  const auto s3 = enumerate_sn(3);
  REQUIRE(s3.size() == 6);
  CHECK(s3.front() == one_line({1, 2, 3}));
  CHECK(s3.back() == one_line({3, 2, 1}));

  std::size_t straight = 0;
  for (const auto& p : SymmetricGroup(4)) straight += is_straight_menage(p) ? 1 : 0;
  CHECK(straight == 3);

  CHECK_THROWS_AS(SymmetricGroup(11), LimitExceeded);
  CHECK_NOTHROW(SymmetricGroup(11, 11));
}

TEST_CASE("brute-force menage counts") {
  const std::vector<std::size_t> straight{1, 0, 0, 1, 3, 16, 96, 675, 5413};
  const std::vector<std::size_t> ordinary{1, 0, 0, 1, 2, 13, 80, 579, 4738};
  for (std::size_t n = 0; n <= 8; ++n) {
    std::size_t v = 0;
    std::size_t u = 0;
    for (const auto& p : SymmetricGroup(n)) {
      v += is_straight_menage(p) ? 1 : 0;
      u += is_ordinary_menage(p) ? 1 : 0;
    }
    CHECK(v == straight[n]);
    CHECK(u == ordinary[n]);
  }
}

TEST_CASE("property: parse and format round-trip, statistics relations") {
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const auto& p : SymmetricGroup(n)) {
      REQUIRE(parse_permutation(format_cycles(p)) == p);
      REQUIRE(parse_permutation(format_one_line(p)) == p);
      const auto s = stats(p);
      const bool wraps = n >= 1 && p(static_cast<int>(n)) == 1;
      REQUIRE(s.generalized_successions == s.successions + (wraps ? 1 : 0));
      std::size_t covered = 0;
      for (const auto& c : p.cycles()) covered += c.size();
      REQUIRE(covered == n);
      REQUIRE(Permutation(p.inverse_one_line()).inverse_one_line() == p.one_line());
    }
  }
}
