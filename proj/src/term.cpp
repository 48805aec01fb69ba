#include "instrgen/term.hpp"

#include <sstream>

namespace instrgen {

std::string to_string(const Term& t) {
    switch (t.kind) {
        case Term::Kind::Sym:
            return t.text;
        case Term::Kind::Int:
            return std::to_string(t.num);
        case Term::Kind::Var:
            return "?" + t.text;
    }
    return {};
}

std::string to_string(const Atom& a) {
    if (a.args.empty()) return a.name;
    std::ostringstream out;
    out << a.name << '(';
    for (size_t i = 0; i < a.args.size(); ++i) {
        if (i) out << ',';
        out << to_string(a.args[i]);
    }
    out << ')';
    return out.str();
}

std::string to_string(const Situation& s) {
    std::string result = "s0";
    for (const Action& a : s) result = "do(" + to_string(a) + "," + result + ")";
    return result;
}

Term subst(const Term& t, const Binding& b) {
    if (t.kind == Term::Kind::Var) {
        auto it = b.find(t.text);
        if (it != b.end()) return it->second;
    }
    return t;
}

Atom subst(const Atom& a, const Binding& b) {
    Atom out;
    out.name = a.name;
    out.args.reserve(a.args.size());
    for (const Term& t : a.args) out.args.push_back(subst(t, b));
    return out;
}

std::optional<Binding> match(const Atom& pattern, const Atom& ground,
                             const Binding& b) {
    if (pattern.name != ground.name || pattern.args.size() != ground.args.size())
        return std::nullopt;
    Binding out = b;
    for (size_t i = 0; i < pattern.args.size(); ++i) {
        Term p = subst(pattern.args[i], out);
        const Term& g = ground.args[i];
        if (!g.is_ground())
            throw EvalError("match: right-hand side is not ground: " +
                            to_string(ground));
        if (p.kind == Term::Kind::Var) {
            out[p.text] = g;
        } else if (p != g) {
            return std::nullopt;
        }
    }
    return out;
}

bool unifiable(const Atom& a, const Atom& b) {
    if (a.name != b.name || a.args.size() != b.args.size()) return false;
    for (size_t i = 0; i < a.args.size(); ++i) {
        const Term& x = a.args[i];
        const Term& y = b.args[i];
        if (x.kind == Term::Kind::Var || y.kind == Term::Kind::Var) continue;
        if (x != y) return false;
    }
    return true;
}

}  // namespace instrgen
