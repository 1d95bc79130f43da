#include "menage/diagram.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace menage {

namespace {

const char* arc_kind(const Permutation& perm, int i, DiagramLayout layout) {
  if (perm.is_fixed_point(i)) return "fixed";
  if (layout == DiagramLayout::horizontal && perm.is_succession(i)) return "succession";
  if (layout == DiagramLayout::circular && perm.is_generalized_succession(i)) return "generalized-succession";
  return "plain";
}

}  // namespace

std::string to_string(DiagramLayout layout) {
  return layout == DiagramLayout::horizontal ? "horizontal" : "circular";
}

DiagramLayout parse_layout(std::string_view text) {
  if (text == "horizontal") return DiagramLayout::horizontal;
  if (text == "circular") return DiagramLayout::circular;
  throw std::invalid_argument("unknown layout '" + std::string(text) + "' (expected horizontal or circular)");
}

std::string diagram_text(const Permutation& perm, DiagramLayout layout) {
  std::ostringstream out;
  out << "layout " << to_string(layout) << " n=" << perm.size() << '\n';
  for (int i = 1; static_cast<std::size_t>(i) <= perm.size(); ++i) out << i << " -> " << perm(i) << '\n';
  return out.str();
}

std::string diagram_json(const Permutation& perm, DiagramLayout layout) {
  nlohmann::ordered_json doc;
  doc["layout"] = to_string(layout);
  doc["n"] = perm.size();
  doc["nodes"] = nlohmann::ordered_json::array();
  doc["arcs"] = nlohmann::ordered_json::array();
  for (int i = 1; static_cast<std::size_t>(i) <= perm.size(); ++i) {
    doc["nodes"].push_back({{"id", i}, {"position", i - 1}});
    doc["arcs"].push_back({{"from", i}, {"to", perm(i)}, {"kind", arc_kind(perm, i, layout)}});
  }
  return doc.dump();
}

}  // namespace menage
