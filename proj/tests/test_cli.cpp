#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "menage/cli.hpp"

using namespace menage;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("seq") {
  CHECK(run({"seq", "straight-menage", "--max", "6"}).out == "1 0 0 1 3 16 96\n");
  CHECK(run({"seq", "ordinary-menage", "--max", "6"}).out == "1 0 0 1 2 13 80\n");
  CHECK(run({"seq", "catalan", "--max", "5"}).out == "1 1 2 5 14 42\n");
  CHECK(run({"seq", "nice-count", "--max", "5"}).out == "0 1 1 2 5 14\n");
  CHECK(run({"seq", "w", "--m", "3", "--max", "3"}).out == "1 7 35 154\n");
  CHECK(run({"seq", "r", "--m", "3", "--max", "3"}).out == "1 8 45 220\n");
  CHECK(run({"seq", "catalan", "--max", "2", "--kind", "series"}).out == "1 + 1*x + 2*x^2 [truncated]\n");
  const auto json = nlohmann::json::parse(run({"seq", "w", "--m", "2", "--max", "3", "--json"}).out);
  CHECK(json["values"] == nlohmann::json::array({"1", "5", "20", "75"}));
}

TEST_CASE("seq usage errors") {
  const auto missing_m = run({"seq", "w", "--max", "3"});
  CHECK(missing_m.code == 2);
  CHECK(missing_m.out.empty());
  CHECK_FALSE(missing_m.err.empty());
  CHECK(run({"seq", "fibonacci", "--max", "3"}).code == 2);
  CHECK(run({"seq", "catalan"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("help exits cleanly") {
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("seq") != std::string::npos);
  CHECK(run({"verify", "--help"}).code == 0);
}

TEST_CASE("cycles") {
  CHECK(run({"cycles", "--n", "4", "--kind", "straight"}).out == "straight n=4 total=3\n1 2\n2 1\n3 0\n4 0\n");
  CHECK(run({"cycles", "--n", "4", "--kind", "ordinary", "--json"}).out ==
        "{\"n\":4,\"kind\":\"ordinary\",\"counts\":{\"1\":1,\"2\":1,\"3\":0,\"4\":0},\"total\":2}\n");
  CHECK(run({"cycles", "--n", "12"}).code == 2);
}

TEST_CASE("reduce") {
  const auto traced = run({"reduce", "--perm", "(1,5,4)(2)(3)(6)", "--mode", "straight", "--trace"});
  CHECK(traced.code == 0);
  CHECK(traced.out == "type1 2 6\ntype1 2 5\ntype1 4 4\n(1,3,2)\n");
  CHECK(run({"reduce", "--perm", "(1,3)(2)(4,5,6)"}).out == "()\n");
  CHECK(run({"reduce", "--perm", "[2,3,1]", "--mode", "ordinary"}).out == "()\n");
  CHECK(run({"reduce", "--perm", "(1,5,4)(2)(3)(6)", "--seed", "9"}).out == "(1,3,2)\n");
  const auto json = nlohmann::json::parse(run({"reduce", "--perm", "(1,2)(3)", "--trace", "--json"}).out);
  CHECK(json["normal_form"] == "()");
  CHECK(json["steps"].size() == 3);
  const auto bad = run({"reduce", "--perm", "(1,2)(2)"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("2") != std::string::npos);
  CHECK(run({"reduce", "--perm", "(1,2)", "--mode", "sideways"}).code == 2);
}

TEST_CASE("expand") {
  const auto straight = run({"expand", "--perm", "[3,1,2]", "--n", "1", "--mode", "straight"});
  CHECK(straight.code == 0);
  CHECK(straight.out.rfind("count 7 expected 7\n", 0) == 0);
  const auto json = nlohmann::json::parse(run({"expand", "--perm", "[3,1,2]", "--n", "1", "--mode", "ordinary", "--json"}).out);
  CHECK(json["count"] == 8);
  CHECK(json["expected"] == "8");
  CHECK(json["permutations"].size() == 8);
  CHECK(run({"expand", "--perm", "(1,2)", "--n", "1"}).code == 2);
}

TEST_CASE("verify") {
  const auto eq3 = run({"verify", "eq3", "--order", "12"});
  CHECK(eq3.code == 0);
  CHECK(eq3.out == "PASS eq3 order=12\n");
  const auto all = run({"verify", "all", "--order", "12"});
  CHECK(all.code == 0);
  for (const char* name : {"eq3", "eq4", "eq5", "eq6", "lemma3", "eta", "appendix", "wmn", "rmn", "weights"}) {
    CHECK(all.out.find(std::string("PASS ") + name + " ") != std::string::npos);
  }
  const auto json = nlohmann::json::parse(run({"verify", "eta", "--order", "6", "--json"}).out);
  CHECK(json[0]["passed"] == true);
  CHECK(json[0]["first_failure"].is_null());
  CHECK(run({"verify", "nonsense"}).code == 2);
}

TEST_CASE("diagram") {
  CHECK(run({"diagram", "--perm", "(1,3,2)", "--layout", "horizontal"}).out ==
        "layout horizontal n=3\n1 -> 3\n2 -> 1\n3 -> 2\n");
  const auto json = nlohmann::json::parse(run({"diagram", "--perm", "[2,1,3]", "--layout", "circular", "--json"}).out);
  CHECK(json["layout"] == "circular");
  CHECK(json["nodes"].size() == 3);
  CHECK(json["arcs"][0]["kind"] == "generalized-succession");
  CHECK(json["arcs"][2]["kind"] == "fixed");
  CHECK(run({"diagram", "--perm", "(1,2)", "--layout", "spiral"}).code == 2);
}

TEST_CASE("output is byte-stable and honours --out") {
  const std::vector<std::string> args{"expand", "--perm", "(1,3,2)", "--n", "2", "--mode", "ordinary"};
  CHECK(run(args).out == run(args).out);
  const std::string path = "menage_cli_out_test.txt";
  const auto written = run({"seq", "catalan", "--max", "3", "--out", path});
  CHECK(written.code == 0);
  CHECK(written.out.empty());
  std::ifstream file(path);
  std::stringstream contents;
  contents << file.rdbuf();
  CHECK(contents.str() == "1 1 2 5\n");
  std::remove(path.c_str());
}
