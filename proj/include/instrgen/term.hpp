#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace instrgen {

// A term is a symbol, an integer quantity, or a variable.  Variables only
// appear inside rules and goals; evaluated states are always ground.
struct Term {
    enum class Kind { Sym, Int, Var };

    Kind kind = Kind::Sym;
    std::string text;     // symbol name or variable name
    long long num = 0;    // integer value

    static Term sym(std::string s) {
        Term t;
        t.kind = Kind::Sym;
        t.text = std::move(s);
        return t;
    }
    static Term integer(long long v) {
        Term t;
        t.kind = Kind::Int;
        t.num = v;
        return t;
    }
    static Term var(std::string s) {
        Term t;
        t.kind = Kind::Var;
        t.text = std::move(s);
        return t;
    }

    bool is_ground() const { return kind != Kind::Var; }

    friend bool operator==(const Term& a, const Term& b) {
        if (a.kind != b.kind) return false;
        if (a.kind == Kind::Int) return a.num == b.num;
        return a.text == b.text;
    }
    friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }
};

// Named tuple of terms.  Serves as fluent, action, and static fact alike.
struct Atom {
    std::string name;
    std::vector<Term> args;

    bool is_ground() const {
        for (const auto& t : args)
            if (!t.is_ground()) return false;
        return true;
    }

    friend bool operator==(const Atom& a, const Atom& b) {
        return a.name == b.name && a.args == b.args;
    }
    friend bool operator!=(const Atom& a, const Atom& b) { return !(a == b); }
};

using Fluent = Atom;
using Action = Atom;

// A situation is the sequence of actions performed since the initial
// situation; element 0 is the first action.
using Situation = std::vector<Action>;

// Substitution from variable names to ground terms.  std::map keeps
// iteration deterministic.
using Binding = std::map<std::string, Term>;

struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string to_string(const Term& t);
std::string to_string(const Atom& a);
std::string to_string(const Situation& s);  // nested do(...) rendering

// Applies a binding; unbound variables are left in place.
Term subst(const Term& t, const Binding& b);
Atom subst(const Atom& a, const Binding& b);

// One-way pattern match: extends `b` so that subst(pattern, b) == ground.
// The ground side must not contain variables.  Returns nullopt on mismatch.
std::optional<Binding> match(const Atom& pattern, const Atom& ground,
                             const Binding& b);

// Two-way unifiability test on possibly-open atoms (used by the loop guard,
// where affected-fluent patterns may retain variables).  Variables match
// anything, including each other; no binding is produced.
bool unifiable(const Atom& a, const Atom& b);

}  // namespace instrgen
