#include "instrgen/eval.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace instrgen {

namespace {

// Merges the results of a sub-query back into the caller's binding.
void merge_solutions(const Binding& base, const std::vector<Binding>& subs,
                     std::vector<Binding>& out) {
    for (const Binding& s : subs) {
        Binding merged = base;
        for (const auto& [v, t] : s) merged[v] = t;
        out.push_back(merged);
    }
}

bool term_equal_ground(const Term& a, const Term& b) { return a == b; }

}  // namespace

std::vector<Binding> eval_condition(const DomainModel& d, const Condition& c,
                                    const Situation& prior, const Action* last,
                                    const Situation* now, const Binding& b) {
    std::vector<Binding> out;
    switch (c.kind) {
        case Condition::Kind::Holds: {
            Fluent q = subst(c.atom, b);
            merge_solutions(b, holds(d, q, prior), out);
            break;
        }
        case Condition::Kind::HoldsNow: {
            if (!now)
                throw EvalError("holds-now used outside a successor rule");
            Fluent q = subst(c.atom, b);
            merge_solutions(b, holds(d, q, *now), out);
            break;
        }
        case Condition::Kind::NotHolds: {
            Fluent q = subst(c.atom, b);
            if (!q.is_ground())
                throw EvalError("not-holds on non-ground fluent: " +
                                to_string(q));
            if (holds(d, q, prior).empty()) out.push_back(b);
            break;
        }
        case Condition::Kind::Static: {
            Atom q = subst(c.atom, b);
            for (const Atom& fact : d.statics) {
                if (fact.name != q.name) continue;
                if (auto m = match(q, fact, b)) out.push_back(*m);
            }
            break;
        }
        case Condition::Kind::Compare: {
            Term l = subst(c.lhs, b);
            Term r = subst(c.rhs, b);
            if (c.op == "=") {
                if (l.is_ground() && r.is_ground()) {
                    if (c.offset != 0) {
                        if (l.kind != Term::Kind::Int || r.kind != Term::Kind::Int)
                            throw EvalError("offset equality on non-integers");
                        if (l.num == r.num + c.offset) out.push_back(b);
                    } else if (term_equal_ground(l, r)) {
                        out.push_back(b);
                    }
                } else if (l.kind == Term::Kind::Var && r.is_ground()) {
                    Binding nb = b;
                    if (c.offset != 0) {
                        if (r.kind != Term::Kind::Int)
                            throw EvalError("offset equality on non-integer");
                        nb[l.text] = Term::integer(r.num + c.offset);
                    } else {
                        nb[l.text] = r;
                    }
                    out.push_back(nb);
                } else if (r.kind == Term::Kind::Var && l.is_ground()) {
                    Binding nb = b;
                    if (c.offset != 0) {
                        if (l.kind != Term::Kind::Int)
                            throw EvalError("offset equality on non-integer");
                        nb[r.text] = Term::integer(l.num - c.offset);
                    } else {
                        nb[r.text] = l;
                    }
                    out.push_back(nb);
                } else {
                    throw EvalError("equality between two unbound variables");
                }
            } else {
                if (l.kind != Term::Kind::Int || r.kind != Term::Kind::Int)
                    throw EvalError("comparison on non-integer or unbound term");
                long long rv = r.num + c.offset;
                bool ok = (c.op == "<" && l.num < rv) ||
                          (c.op == "<=" && l.num <= rv) ||
                          (c.op == ">" && l.num > rv) ||
                          (c.op == ">=" && l.num >= rv);
                if (ok) out.push_back(b);
            }
            break;
        }
        case Condition::Kind::ActionIs: {
            if (!last)
                throw EvalError("action-is used outside a successor rule");
            Action pat = subst(c.atom, b);
            if (auto m = match(pat, *last, b)) out.push_back(*m);
            break;
        }
        case Condition::Kind::ActionIsNot: {
            if (!last)
                throw EvalError("action-is-not used outside a successor rule");
            Action pat = subst(c.atom, b);
            if (!match(pat, *last, b)) out.push_back(b);
            break;
        }
        case Condition::Kind::And: {
            std::vector<Binding> frontier{b};
            for (const Condition& k : c.kids) {
                std::vector<Binding> next;
                for (const Binding& f : frontier) {
                    auto sols = eval_condition(d, k, prior, last, now, f);
                    next.insert(next.end(), sols.begin(), sols.end());
                }
                frontier = std::move(next);
                if (frontier.empty()) break;
            }
            out = std::move(frontier);
            break;
        }
        case Condition::Kind::Or: {
            for (const Condition& k : c.kids) {
                auto sols = eval_condition(d, k, prior, last, now, b);
                out.insert(out.end(), sols.begin(), sols.end());
            }
            break;
        }
        case Condition::Kind::Not: {
            if (eval_condition(d, c.kids[0], prior, last, now, b).empty())
                out.push_back(b);
            break;
        }
        case Condition::Kind::ContainsStar: {
            Term cont = subst(c.container, b);
            if (!cont.is_ground())
                throw EvalError("contains* with unbound container");
            Term item = subst(c.item, b);
            for (const Term& z : transitive_contents(d, cont, prior)) {
                if (item.kind == Term::Kind::Var) {
                    Binding nb = b;
                    nb[item.text] = z;
                    out.push_back(nb);
                } else if (z == item) {
                    out.push_back(b);
                }
            }
            break;
        }
    }
    return out;
}

std::vector<Term> transitive_contents(const DomainModel& d,
                                      const Term& container,
                                      const Situation& s) {
    std::vector<Term> out;
    std::set<std::string> visited;  // containers already expanded

    // Interiors declared for a given object, in static declaration order.
    auto interiors_of = [&](const Term& obj) {
        std::vector<Term> ins;
        for (const Atom& f : d.statics)
            if (f.name == "interior_of" && f.args.size() == 2 && f.args[1] == obj)
                ins.push_back(f.args[0]);
        return ins;
    };

    std::function<void(const Term&)> expand = [&](const Term& c) {
        if (!visited.insert(to_string(c)).second) return;
        Fluent q{"contains", {c, Term::var("_cs_item")}};
        std::vector<Term> direct;
        for (const Binding& b : holds(d, q, s)) {
            const Term& z = b.at("_cs_item");
            if (std::find(direct.begin(), direct.end(), z) == direct.end())
                direct.push_back(z);
        }
        for (const Term& z : direct) out.push_back(z);
        for (const Term& i : interiors_of(c)) expand(i);
        for (const Term& z : direct)
            for (const Term& i : interiors_of(z)) expand(i);
    };
    expand(container);
    return out;
}

std::vector<Binding> holds(const DomainModel& d, const Fluent& query,
                           const Situation& s) {
    std::vector<Binding> out;
    if (s.empty()) {
        for (const Fluent& f : d.init) {
            if (f.name != query.name || f.args.size() != query.args.size())
                continue;
            if (auto m = match(query, f, {})) {
                // Report only the query's own variables.
                Binding r;
                for (const Term& t : query.args)
                    if (t.kind == Term::Kind::Var) r[t.text] = m->at(t.text);
                out.push_back(r);
            }
        }
        // A name with neither rule nor initial entry is a modelling error.
        if (out.empty() && !d.successor_for(query.name)) {
            bool in_init = false;
            for (const Fluent& f : d.init)
                if (f.name == query.name) in_init = true;
            if (!in_init)
                throw EvalError("unknown fluent: " + query.name);
        }
        return out;
    }

    const SuccessorRule* rule = d.successor_for(query.name);
    if (!rule) {
        bool in_init = false;
        for (const Fluent& f : d.init)
            if (f.name == query.name) in_init = true;
        if (!in_init) throw EvalError("unknown fluent: " + query.name);
        // Initial-only fluents persist unchanged.
        Situation empty;
        return holds(d, query, empty);
    }
    if (rule->pattern.args.size() != query.args.size())
        throw EvalError("arity mismatch for fluent: " + query.name);

    const Action& last = s.back();
    Situation prior(s.begin(), s.end() - 1);

    // Bind the rule head against the query.  Query arguments are either
    // ground or free variables of the caller; head arguments may be ground
    // or head-local variables.
    Binding local;
    // (query variable name -> head variable name or fixed term)
    std::vector<std::pair<std::string, Term>> out_map;
    for (size_t i = 0; i < query.args.size(); ++i) {
        const Term& qa = query.args[i];
        const Term& ha = rule->pattern.args[i];
        if (qa.is_ground()) {
            if (ha.is_ground()) {
                if (ha != qa) return out;
            } else {
                auto it = local.find(ha.text);
                if (it != local.end()) {
                    if (it->second != qa) return out;
                } else {
                    local[ha.text] = qa;
                }
            }
        } else {
            out_map.emplace_back(qa.text, ha);
        }
    }

    for (const Condition& disj : rule->disjuncts) {
        for (const Binding& sol :
             eval_condition(d, disj, prior, &last, &s, local)) {
            Binding r;
            bool consistent = true;
            for (const auto& [qv, ht] : out_map) {
                Term val = subst(ht, sol);
                if (!val.is_ground())
                    throw EvalError("successor rule for '" + query.name +
                                    "' left a result variable unbound");
                auto it = r.find(qv);
                if (it != r.end() && it->second != val) {
                    consistent = false;  // repeated query variable mismatch
                    break;
                }
                r[qv] = val;
            }
            if (consistent) out.push_back(r);
        }
    }
    return out;
}

bool holds_any(const DomainModel& d, const Fluent& query, const Situation& s) {
    return !holds(d, query, s).empty();
}

std::vector<Action> poss(const DomainModel& d, const Situation& s) {
    std::vector<Action> out;
    for (const PrecondRule& r : d.preconds) {
        for (const Binding& sol :
             eval_condition(d, r.cond, s, nullptr, nullptr, {})) {
            Action a = subst(r.pattern, sol);
            if (!a.is_ground())
                throw EvalError("precondition rule for '" + r.pattern.name +
                                "' produced a non-ground action");
            if (std::find(out.begin(), out.end(), a) == out.end())
                out.push_back(a);
        }
    }
    return out;
}

}  // namespace instrgen
