#pragma once

#include <string>
#include <utility>
#include <vector>

#include "instrgen/planner.hpp"

namespace instrgen {

// (start index, label) of a recognized device-action collection.
using LabelPattern = std::pair<int, std::string>;

struct Interpretation {
    // Flattened (index, action) pairs; a collection's members all carry the
    // collection's start index.
    std::vector<std::pair<int, Action>> entries;
    std::vector<LabelPattern> patterns;
};

// Groups runs of collection actions in a merged indexed plan, drops
// repeated injury sub-plans inside each group, and renumbers everything
// after a group to stay consecutive.
Interpretation make_interpretations(const DomainModel& d,
                                    const IndexedPlan& merged);

// The de-duplication step on its own: keeps the first occurrence of each
// distinct injury sub-plan within a group, strips the rest.
IndexedPlan retained_injuries(const IndexedPlan& group);

}  // namespace instrgen
