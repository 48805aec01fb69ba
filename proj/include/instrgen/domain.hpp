#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "instrgen/condition.hpp"
#include "instrgen/term.hpp"

namespace instrgen {

// Action precondition rule.  The rule is applicable to every ground
// instantiation of `pattern` produced by a solution of `cond`.
// `planner_guard` marks rules whose body carries extra purposive conditions
// that exist to keep the depth-first planner on track rather than to model
// physical possibility.
struct PrecondRule {
    Action pattern;
    Condition cond;
    bool planner_guard = false;
};

// Successor-state rule for one fluent name.  The fluent holds in do(a,s)
// iff some disjunct body succeeds; disjunct order is part of the model's
// contract (effect disjuncts first, persistence last), because it fixes the
// order in which bindings are enumerated.
struct SuccessorRule {
    Fluent pattern;
    std::vector<Condition> disjuncts;
    bool has_persistence = false;  // last disjunct is the frame disjunct in
                                   // "persist unless" sugar form
};

// Maps a semantic slot of an action to a filler: either an argument
// position of the action (arg_pos >= 0) or a fixed symbol.
struct RoleDecl {
    std::string action;  // action name
    std::string slot;    // actor | actee | source | destination
    int arg_pos = -1;
    std::string fixed;   // used when arg_pos < 0
};

// Device-action collections recognized by the interpreter: a run of
// consecutive plan entries whose normal actions all belong to `members`,
// starting with `trigger`, is summarized under `label`.
struct CollectionSpec {
    std::string label;
    std::string trigger;
    std::vector<std::string> members;  // includes the trigger
};

// Situation-dependent actor lookup for device actions whose actor is
// whatever currently satisfies a query (e.g. what pops up is whatever the
// bread slot contains at that moment).
struct ActorQuery {
    std::string action;  // action name
    Fluent query;        // contains exactly one variable: the actor
    std::string var;     // that variable's name
};

struct DomainModel {
    std::string name;

    std::vector<Atom> statics;  // ground facts, in declaration order
    std::vector<Fluent> init;   // fluents holding in the initial situation

    std::vector<PrecondRule> preconds;        // declaration order drives search
    std::vector<SuccessorRule> successors;    // one per fluent name

    std::vector<std::string> reader_actions;
    std::vector<std::string> device_actions;
    std::vector<std::string> normal_actions;
    std::vector<std::string> injury_actions;

    // (action pattern, fluent pattern) pairs for the planner's one-step
    // loop guard.
    std::vector<std::pair<Action, Fluent>> affects;

    std::vector<RoleDecl> roles;
    std::vector<ActorQuery> actor_queries;
    std::vector<CollectionSpec> collections;

    long long touch_guard_temp = 20;

    // Symbol -> surface form overrides; anything absent falls back to the
    // symbol with underscores replaced by spaces.
    std::vector<std::pair<std::string, std::string>> lexicon;

    std::vector<Fluent> goal;

    const SuccessorRule* successor_for(const std::string& fluent) const;
    bool is_reader(const std::string& action) const;
    bool is_device(const std::string& action) const;
    bool is_normal(const std::string& action) const;
    bool is_injury(const std::string& action) const;
    bool is_indicator(const std::string& symbol) const;
    const RoleDecl* role(const std::string& action, const std::string& slot) const;
    const ActorQuery* actor_query(const std::string& action) const;
    std::string surface(const std::string& symbol) const;
};

// Built-in models: "toaster", "breadmaker", "combined".
DomainModel builtin_domain(const std::string& name);

struct Diagnostic {
    enum class Severity { Error, Warning };
    Severity severity;
    std::string message;
};

// Structural checks.  By default only hard errors are reported; pass
// `include_warnings` to also get advisory findings (e.g. a normal action
// with no affects entry, which leaves it invisible to the loop guard).
std::vector<Diagnostic> validate_domain(const DomainModel& d,
                                        bool include_warnings = false);

}  // namespace instrgen
