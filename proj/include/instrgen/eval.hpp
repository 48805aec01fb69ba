#pragma once

#include <vector>

#include "instrgen/domain.hpp"

namespace instrgen {

// Enumerates every binding of `query`'s variables under which the fluent
// holds in situation `s`.  Order contract: in each successor rule the
// disjuncts are tried in declared order with the frame disjunct last, so
// bindings for a fluent emerge most-recently-affected-first.  Duplicate
// bindings may appear when several disjuncts derive the same instance.
std::vector<Binding> holds(const DomainModel& d, const Fluent& query,
                           const Situation& s);

// True iff `holds` yields at least one binding.
bool holds_any(const DomainModel& d, const Fluent& query, const Situation& s);

// Ground actions possible in `s`, in precondition-rule declaration order,
// with solutions of each rule body in body-evaluation order; duplicates
// removed keeping the first occurrence.
std::vector<Action> poss(const DomainModel& d, const Situation& s);

// Evaluates a condition.  `prior` is the reference situation for Holds /
// NotHolds / Static / ContainsStar.  `last` is the causing action for
// ActionIs / ActionIsNot (null in precondition context, where those kinds
// are invalid).  `now` is the resulting situation for HoldsNow (null in
// precondition context).
std::vector<Binding> eval_condition(const DomainModel& d, const Condition& c,
                                    const Situation& prior, const Action* last,
                                    const Situation* now, const Binding& b);

// Objects transitively contained in `container`: its direct contents (in
// holds-enumeration order), then recursively the contents of interiors --
// both interiors of the container itself and interiors of each direct
// content.
std::vector<Term> transitive_contents(const DomainModel& d,
                                      const Term& container,
                                      const Situation& s);

}  // namespace instrgen
