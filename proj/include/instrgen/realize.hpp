#pragma once

#include <string>
#include <vector>

#include "instrgen/spl.hpp"

namespace instrgen {

struct RealizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Renders one sentence plan as an English sentence: capitalized, ending in
// a period.  Surface forms come from the domain lexicon (with the
// underscores-to-spaces fallback); the verb frame from a fixed per-process
// template table.
std::string realize(const DomainModel& d, const SplNode& node);

std::vector<std::string> realize_plan(const DomainModel& d,
                                      const std::vector<SplNode>& nodes);

}  // namespace instrgen
