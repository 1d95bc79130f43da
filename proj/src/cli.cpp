#include "menage/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "menage/cycles.hpp"
#include "menage/diagram.hpp"
#include "menage/expand.hpp"
#include "menage/identities.hpp"
#include "menage/permutation.hpp"
#include "menage/reduce.hpp"
#include "menage/series.hpp"

namespace menage {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

// Brute-force backed checks are capped so that `verify all` stays interactive.
constexpr std::size_t kCycleOrderCap = 7;
constexpr std::size_t kWeightOrderCap = 5;
constexpr std::size_t kBaseCaseMaxM = 6;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string sequence;
  std::string verifier;
  std::optional<std::size_t> max;
  std::optional<std::size_t> m;
  std::size_t order = kDefaultVerificationOrder;
  std::size_t n = 0;
  std::string perm;
  std::string mode = "straight";
  std::string kind;
  std::string layout = "horizontal";
  std::optional<std::uint64_t> seed;
  std::string out_path;
  bool json = false;
  bool trace = false;
};

Json strings(const std::vector<BigInt>& values) {
  Json array = Json::array();
  for (const auto& v : values) array.push_back(to_string(v));
  return array;
}

std::vector<BigInt> sequence_values(const Options& o) {
  const std::size_t max = *o.max;
  if ((o.sequence == "w" || o.sequence == "r") && !o.m) throw UsageError("seq " + o.sequence + " requires --m");
  std::vector<BigInt> values;
  if (o.sequence == "catalan") {
    for (std::size_t k = 0; k <= max; ++k) values.push_back(catalan_number(k));
  } else if (o.sequence == "straight-menage") {
    values = menage_V_sequence(max);
  } else if (o.sequence == "ordinary-menage") {
    values = menage_U_sequence(max);
  } else if (o.sequence == "nice-count") {
    values = nice_counts(max);
  } else if (o.sequence == "w") {
    for (std::size_t k = 0; k <= max; ++k) values.push_back(w_count(*o.m, k));
  } else {
    for (std::size_t k = 0; k <= max; ++k) values.push_back(r_count(*o.m, k));
  }
  return values;
}

int run_seq(const Options& o, std::ostream& out) {
  const auto values = sequence_values(o);
  const bool as_series = o.kind == "series";
  if (o.json) {
    Json doc{{"sequence", o.sequence}, {"max", *o.max}};
    if (o.m) doc["m"] = *o.m;
    doc["values"] = strings(values);
    out << doc.dump() << '\n';
  } else if (as_series) {
    out << TruncatedSeries::from_integers(values, *o.max).to_string() << '\n';
  } else {
    for (std::size_t k = 0; k < values.size(); ++k) out << (k ? " " : "") << values[k];
    out << '\n';
  }
  return kExitOk;
}

int run_cycles(const Options& o, std::ostream& out) {
  const Mode mode = parse_mode(o.kind.empty() ? "straight" : o.kind);
  const auto table = mode == Mode::straight ? straight_by_cycles(o.n) : ordinary_by_cycles(o.n);
  if (o.json) {
    out << cycle_table_json(o.n, mode, table) << '\n';
    return kExitOk;
  }
  BigInt total = 0;
  for (const auto& v : table) total += v;
  out << to_string(mode) << " n=" << o.n << " total=" << total << '\n';
  for (std::size_t j = 1; j < table.size(); ++j) out << j << ' ' << table[j] << '\n';
  return kExitOk;
}

int run_reduce(const Options& o, std::ostream& out) {
  const Permutation perm = parse_permutation(o.perm);
  const Mode mode = parse_mode(o.mode);
  const auto trace = normal_form(perm, mode, o.seed ? random_policy(*o.seed) : smallest_site_policy());
  if (o.json) {
    Json steps = Json::array();
    for (const auto& s : trace.steps) {
      steps.push_back({{"kind", to_string(s.kind)}, {"site", s.site}, {"n", s.before_n}});
    }
    Json doc{{"input", format_cycles(perm)}, {"mode", to_string(mode)}, {"normal_form", format_cycles(trace.result)}};
    if (o.trace) doc["steps"] = steps;
    out << doc.dump() << '\n';
  } else if (o.trace) {
    out << format_trace(trace);
  } else {
    out << format_cycles(trace.result) << '\n';
  }
  return kExitOk;
}

int run_expand(const Options& o, std::ostream& out) {
  const Permutation perm = parse_permutation(o.perm);
  const Mode mode = parse_mode(o.mode);
  const auto expansions = enumerate_expansions(perm, o.n, mode);
  const BigInt expected = mode == Mode::straight ? w_count(perm.size(), o.n) : r_count(perm.size(), o.n);
  if (o.json) {
    Json list = Json::array();
    for (const auto& p : expansions.permutations) list.push_back(format_cycles(p));
    Json doc{{"base", format_cycles(perm)},
             {"n", o.n},
             {"mode", to_string(mode)},
             {"count", expansions.permutations.size()},
             {"expected", to_string(expected)},
             {"permutations", list}};
    out << doc.dump() << '\n';
    return kExitOk;
  }
  out << "count " << expansions.permutations.size() << " expected " << expected << '\n';
  for (const auto& p : expansions.permutations) out << format_cycles(p) << '\n';
  return kExitOk;
}

VerificationReport weights_report(std::size_t order) {
  const std::size_t capped = std::min(order, kWeightOrderCap);
  const auto grid = default_weight_grid();
  VerificationReport report{"weights", capped};
  for (std::size_t n = 0; n <= capped; ++n) report.merge(verify_weight_sums(n, grid));
  report.merge(verify_straight_weight_series(capped, grid));
  report.merge(verify_a_base_cases(kBaseCaseMaxM));
  report.merge(verify_colored_ordinary(capped, grid));
  return report;
}

const std::vector<std::string>& verifier_names() {
  static const std::vector<std::string> names{"eq3",      "eq4", "eq5", "eq6",     "lemma3", "eta",
                                              "appendix", "wmn", "rmn", "weights", "all"};
  return names;
}

VerificationReport run_verifier(const std::string& name, std::size_t order) {
  if (name == "eq3") return verify_straight_factorial_identity(order);
  if (name == "eq4") return verify_ordinary_factorial_identity(order);
  if (name == "eq5") return verify_straight_cycle_identity(std::min(order, kCycleOrderCap));
  if (name == "eq6") return verify_ordinary_cycle_identity(std::min(order, kCycleOrderCap));
  if (name == "lemma3") return verify_catalan_relations(order);
  if (name == "eta") return verify_eta(order);
  if (name == "appendix") return verify_analytic_forms(order);
  if (name == "wmn") return verify_w_convolution(order);
  if (name == "rmn") return verify_r_convolution(order);
  return weights_report(order);
}

Json report_json(const VerificationReport& r) {
  Json doc{{"name", r.name}, {"order", r.order}, {"passed", r.passed}, {"checks", r.checks}};
  if (r.first_failure) {
    const auto& f = *r.first_failure;
    Json failure{{"check", f.check}, {"expected", f.expected}, {"actual", f.actual}};
    failure["coefficient"] = f.coefficient ? Json(*f.coefficient) : Json(nullptr);
    doc["first_failure"] = failure;
  } else {
    doc["first_failure"] = nullptr;
  }
  return doc;
}

int run_verify(const Options& o, std::ostream& out) {
  std::vector<std::string> selected;
  if (o.verifier == "all") {
    selected.assign(verifier_names().begin(), verifier_names().end() - 1);
  } else {
    selected.push_back(o.verifier);
  }
  bool all_passed = true;
  Json reports = Json::array();
  for (const auto& name : selected) {
    const auto report = run_verifier(name, o.order);
    all_passed = all_passed && report.passed;
    if (o.json) {
      reports.push_back(report_json(report));
    } else {
      out << report.summary() << '\n';
    }
  }
  if (o.json) out << reports.dump() << '\n';
  return all_passed ? kExitOk : kExitFailed;
}

int run_diagram(const Options& o, std::ostream& out) {
  const Permutation perm = parse_permutation(o.perm);
  const DiagramLayout layout = parse_layout(o.layout);
  out << (o.json ? diagram_json(perm, layout) + "\n" : diagram_text(perm, layout));
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact menage permutation toolkit", "menage-kit"};
  app.require_subcommand(1);
  Options o;

  auto* seq = app.add_subcommand("seq", "Print an integer sequence");
  seq->add_option("name", o.sequence, "Sequence name")
      ->required()
      ->check(CLI::IsMember({"catalan", "straight-menage", "ordinary-menage", "nice-count", "w", "r"}));
  seq->add_option("--max", o.max, "Largest index")->required();
  seq->add_option("--m", o.m, "Size of the base permutation (w and r)");
  seq->add_option("--kind", o.kind, "Output form")->check(CLI::IsMember({"values", "series"}));
  seq->add_flag("--json", o.json, "Emit JSON");

  auto* cycles = app.add_subcommand("cycles", "Count menage permutations of [n] by number of cycles");
  cycles->add_option("--n", o.n, "Permutation size")->required();
  cycles->add_option("--kind", o.kind, "straight or ordinary")->check(CLI::IsMember({"straight", "ordinary"}));
  cycles->add_flag("--json", o.json, "Emit JSON");

  auto* reduce = app.add_subcommand("reduce", "Reduce a permutation to its normal form");
  reduce->add_option("--perm", o.perm, "Permutation in cycle or one-line notation")->required();
  reduce->add_option("--mode", o.mode, "straight or ordinary")->check(CLI::IsMember({"straight", "ordinary"}));
  reduce->add_flag("--trace", o.trace, "Print every reduction step");
  reduce->add_option("--seed", o.seed, "Pick reductions at random with this seed");
  reduce->add_flag("--json", o.json, "Emit JSON");

  auto* expand = app.add_subcommand("expand", "List permutations whose normal form is the given one");
  expand->add_option("--perm", o.perm, "Menage permutation of [m]")->required();
  expand->add_option("--n", o.n, "Number of points to add")->required();
  expand->add_option("--mode", o.mode, "straight or ordinary")->check(CLI::IsMember({"straight", "ordinary"}));
  expand->add_flag("--json", o.json, "Emit JSON");

  auto* verify = app.add_subcommand("verify", "Check an identity through a truncation order");
  verify->add_option("name", o.verifier, "Identity name")->required()->check(CLI::IsMember(verifier_names()));
  verify->add_option("--order", o.order, "Truncation order");
  verify->add_flag("--json", o.json, "Emit JSON");

  auto* diagram = app.add_subcommand("diagram", "Export the arc diagram of a permutation");
  diagram->add_option("--perm", o.perm, "Permutation")->required();
  diagram->add_option("--layout", o.layout, "horizontal or circular")
      ->check(CLI::IsMember({"horizontal", "circular"}));
  diagram->add_flag("--json", o.json, "Emit JSON");

  for (auto* sub : {seq, cycles, reduce, expand, verify, diagram}) {
    sub->add_option("--out", o.out_path, "Write output to this file");
  }

  std::vector<std::string> storage{"menage-kit"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  const std::map<CLI::App*, std::function<int(std::ostream&)>> handlers{
      {seq, [&](std::ostream& s) { return run_seq(o, s); }},
      {cycles, [&](std::ostream& s) { return run_cycles(o, s); }},
      {reduce, [&](std::ostream& s) { return run_reduce(o, s); }},
      {expand, [&](std::ostream& s) { return run_expand(o, s); }},
      {verify, [&](std::ostream& s) { return run_verify(o, s); }},
      {diagram, [&](std::ostream& s) { return run_diagram(o, s); }},
  };

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    code = handlers.at(app.get_subcommands().front())(buffer);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (o.out_path.empty()) {
    out << buffer.str();
    return code;
  }
  std::ofstream file(o.out_path);
  if (!file) {
    err << "error: cannot write " << o.out_path << '\n';
    return kExitUsage;
  }
  file << buffer.str();
  return code;
}

}  // namespace menage
