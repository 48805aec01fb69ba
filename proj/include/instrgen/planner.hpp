#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "instrgen/eval.hpp"

namespace instrgen {

using Plan = std::vector<Action>;

// (index, actions) plan entries; indices are 1-based.  Entry 0 of the
// action list is the normal action, anything after it an injury sub-plan.
struct PlanEntry {
    int index = 0;
    std::vector<Action> actions;
};
using IndexedPlan = std::vector<PlanEntry>;

struct NoPlanError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DepthExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultMaxDepth = 64;

// True iff every goal fluent holds in `s`.  Goal conjuncts are checked
// independently; a variable shared between conjuncts is not threaded.
bool satisfied(const DomainModel& d, const std::vector<Fluent>& goal,
               const Situation& s);

// One-step look-back loop guard: rejects `candidate` right after `last`
// when any fluent pattern affected by `last` unifies with one affected by
// `candidate`.
bool loop_guard_rejects(const DomainModel& d, const Action& last,
                        const Action& candidate);

// Depth-first search over normal actions from `start`, committing to the
// first possible non-looping action at each step.  Throws NoPlanError when
// the space is exhausted, DepthExceededError when the bound is hit.
Plan plan_normal(const DomainModel& d, const std::vector<Fluent>& goal,
                 const Situation& start = {}, int max_depth = kDefaultMaxDepth);

// Same search over injury actions; returns nullopt when no injury sequence
// reaches the goal from `start`.
std::optional<Plan> plan_injury(const DomainModel& d,
                                const std::vector<Fluent>& goal,
                                const Situation& start,
                                int max_depth = kDefaultMaxDepth);

// Wraps a flat plan into 1-based indexed entries.
IndexedPlan index_actions(const Plan& plan);

// Independent breadth-first oracle: length of a shortest action sequence
// from `start` reaching `goal`, using actions whose names are in `allowed`
// (empty = all actions), without the loop guard.  nullopt if none within
// `max_depth`.
std::optional<int> bfs_oracle(const DomainModel& d,
                              const std::vector<Fluent>& goal,
                              const Situation& start,
                              const std::vector<std::string>& allowed,
                              int max_depth);

}  // namespace instrgen
