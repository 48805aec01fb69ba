#pragma once

#include <vector>

#include "instrgen/term.hpp"

namespace instrgen {

// Rule body syntax.  A condition is evaluated against a situation and an
// incoming binding, and yields every extension of that binding under which
// it holds, in a defined order (see eval.hpp).
struct Condition {
    enum class Kind {
        Holds,         // fluent query against the reference situation
        NotHolds,      // negation as failure; fluent must be ground
        HoldsNow,      // fluent query against the resulting situation
                       // (successor-rule bodies only)
        Static,        // static fact lookup
        Compare,       // arithmetic comparison / equality with offset
        ActionIs,      // the causing action matches a pattern
        ActionIsNot,   // the causing action does not match a pattern
        And,
        Or,
        Not,           // general negation as failure over a sub-condition
        ContainsStar,  // transitive containment through interiors
    };

    Kind kind = Kind::And;
    Atom atom;                    // Holds / NotHolds / HoldsNow / Static /
                                  // ActionIs / ActionIsNot
    std::string op;               // Compare: "<", "<=", ">", ">=", "="
    Term lhs, rhs;                // Compare operands
    long long offset = 0;         // Compare: lhs op (rhs + offset)
    Term container, item;         // ContainsStar
    std::vector<Condition> kids;  // And / Or / Not
};

inline Condition c_holds(Atom f) {
    Condition c;
    c.kind = Condition::Kind::Holds;
    c.atom = std::move(f);
    return c;
}
inline Condition c_not_holds(Atom f) {
    Condition c;
    c.kind = Condition::Kind::NotHolds;
    c.atom = std::move(f);
    return c;
}
inline Condition c_holds_now(Atom f) {
    Condition c;
    c.kind = Condition::Kind::HoldsNow;
    c.atom = std::move(f);
    return c;
}
inline Condition c_static(Atom f) {
    Condition c;
    c.kind = Condition::Kind::Static;
    c.atom = std::move(f);
    return c;
}
inline Condition c_cmp(Term lhs, std::string op, Term rhs, long long offset = 0) {
    Condition c;
    c.kind = Condition::Kind::Compare;
    c.lhs = std::move(lhs);
    c.op = std::move(op);
    c.rhs = std::move(rhs);
    c.offset = offset;
    return c;
}
inline Condition c_eq(Term lhs, Term rhs) {
    return c_cmp(std::move(lhs), "=", std::move(rhs));
}
inline Condition c_action_is(Action a) {
    Condition c;
    c.kind = Condition::Kind::ActionIs;
    c.atom = std::move(a);
    return c;
}
inline Condition c_action_is_not(Action a) {
    Condition c;
    c.kind = Condition::Kind::ActionIsNot;
    c.atom = std::move(a);
    return c;
}
inline Condition c_and(std::vector<Condition> kids) {
    Condition c;
    c.kind = Condition::Kind::And;
    c.kids = std::move(kids);
    return c;
}
inline Condition c_or(std::vector<Condition> kids) {
    Condition c;
    c.kind = Condition::Kind::Or;
    c.kids = std::move(kids);
    return c;
}
inline Condition c_not(Condition inner) {
    Condition c;
    c.kind = Condition::Kind::Not;
    c.kids.push_back(std::move(inner));
    return c;
}
inline Condition c_contains_star(Term container, Term item) {
    Condition c;
    c.kind = Condition::Kind::ContainsStar;
    c.container = std::move(container);
    c.item = std::move(item);
    return c;
}

}  // namespace instrgen
