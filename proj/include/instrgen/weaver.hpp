#pragma once

#include "instrgen/planner.hpp"

namespace instrgen {

// Injury sub-plan found after performing the first `index` actions of a
// normal plan.
struct InjuryPoint {
    int index = 0;
    Plan actions;
};

// For every prefix of `plan` (1-based indices 1..n), tries to reach the
// injury goal `[burned]` with injury actions; collects the sub-plans that
// succeed.
std::vector<InjuryPoint> injury_points(const DomainModel& d, const Plan& plan,
                                       const Situation& start = {},
                                       int max_depth = kDefaultMaxDepth);

// Appends each injury sub-plan to the indexed entry it was found at.
IndexedPlan merge_injuries(const IndexedPlan& plan,
                           const std::vector<InjuryPoint>& points);

}  // namespace instrgen
