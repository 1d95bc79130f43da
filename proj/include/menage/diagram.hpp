#pragma once

#include <string>
#include <string_view>

#include "menage/permutation.hpp"

namespace menage {

enum class DiagramLayout { horizontal, circular };

std::string to_string(DiagramLayout layout);
DiagramLayout parse_layout(std::string_view text);

/// "layout <kind> n=<n>" followed by one "i -> pi(i)" line per point.
std::string diagram_text(const Permutation& perm, DiagramLayout layout);

/// {"layout":..,"n":..,"nodes":[{"id":i,"position":i-1}],"arcs":[{"from":i,"to":j,"kind":..}]}.
/// Arc kinds: "fixed", "succession" (horizontal) or "generalized-succession"
/// (circular), otherwise "plain".
std::string diagram_json(const Permutation& perm, DiagramLayout layout);

}  // namespace menage
