#pragma once

// Renderers for the report types: CSV with '#' convention headers, JSON with
// the same field names, tab-separated plot files, and the plain-text rule
// dump. Rendering is deterministic; rerunning on equal inputs is byte-equal.

#include <string>
#include <vector>

#include "freestar/growth.hpp"
#include "freestar/homology.hpp"
#include "freestar/rewrite.hpp"

namespace freestar {

std::string sandwich_csv(const SandwichReport& report);
std::string sandwich_json(const SandwichReport& report);

std::string rank_two_csv(const RankTwoReport& report);
std::string rank_two_json(const RankTwoReport& report);

// Two columns (n, log2 count), '#' header naming the convention.
std::string growth_plot(const GrowthTable& table);

std::string homology_json(const HomologyReport& report);

// One rule per line, "lhs -> rhs" in text rendering.
std::string rules_dump(const std::vector<Rule>& rules);

}  // namespace freestar
