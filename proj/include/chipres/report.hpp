#pragma once

#include "chipres/cells.hpp"
#include "chipres/divisor.hpp"
#include "chipres/graph.hpp"
#include "chipres/ideals.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace chipres {

using Json = nlohmann::json;

/// Parses "u1:2,u2:-1" into a divisor (unlisted vertices are zero).
Divisor parse_divisor(const Multigraph& g, const std::string& text);
std::string divisor_string(const Multigraph& g, const Divisor& d);

Json gens_report(const Multigraph& g, int q, IdealKind ideal, bool all_cuts);
Json betti_report(const Multigraph& g, int q, bool fine);
Json resolution_report(const Multigraph& g, int q, IdealKind ideal);
std::string resolution_dot(const Multigraph& g, int q, IdealKind ideal);
Json greens_report(const Multigraph& g, int q);
Json trees_report(const Multigraph& g, int q, bool enumerate);
Json facets_report(const Multigraph& g, int q);
Json dual_report(const Multigraph& g, int q);
Json reduce_report(const Multigraph& g, int q, const Divisor& d);

/// Per-graph verification suites; "all" unions every check. pass == false
/// maps to CLI exit code 2.
Json verify_report(const Multigraph& g, int q, const std::string& suite);

std::string json_to_text(const Json& j);

}  // namespace chipres
