#include "instrgen/spl.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace instrgen {

namespace {

// Prefix of interpreted entries up to and including the first entry that
// carries `index`, as a plain action sequence (injury actions included:
// they are part of the narrated history).
Situation prefix_through(const std::vector<std::pair<int, Action>>& entries,
                         int index) {
    Situation s;
    for (const auto& [i, a] : entries) {
        s.push_back(a);
        if (i == index) break;
    }
    return s;
}

std::string term_symbol(const Term& t) {
    if (t.kind != Term::Kind::Sym)
        throw RoleGapError("role filler is not a symbol: " + to_string(t));
    return t.text;
}

std::string role_symbol(const Action& a, const RoleDecl& r) {
    if (r.arg_pos >= 0) {
        if (static_cast<size_t>(r.arg_pos) >= a.args.size())
            throw RoleGapError("role argument out of range for " + to_string(a));
        return term_symbol(a.args[r.arg_pos]);
    }
    return r.fixed;
}

Filler entity(int& ids, std::string symbol) {
    Filler f;
    f.kind = Filler::Kind::Entity;
    f.id = ++ids;
    f.value = std::move(symbol);
    return f;
}

Filler plain(std::string value) {
    Filler f;
    f.kind = Filler::Kind::Plain;
    f.value = std::move(value);
    return f;
}

SplNode build_node(const DomainModel& d, const Interpretation& in,
                   int index, const Action& a, int& ids) {
    SplNode node;
    node.id = ++ids;
    node.process = a.name;

    // actor: a situation-dependent query beats the role table, which beats
    // the hearer default.
    if (const ActorQuery* q = d.actor_query(a.name)) {
        Situation prefix = prefix_through(in.entries, index);
        auto sols = holds(d, q->query, prefix);
        if (sols.empty())
            throw RoleGapError("actor query failed for " + to_string(a));
        node.slots.push_back(
            {"actor", entity(ids, term_symbol(sols.front().at(q->var)))});
    } else if (const RoleDecl* r = d.role(a.name, "actor")) {
        node.slots.push_back({"actor", entity(ids, role_symbol(a, *r))});
    } else {
        Filler hearer;
        hearer.kind = Filler::Kind::Hearer;
        node.slots.push_back({"actor", hearer});
    }

    for (const char* slot : {"actee", "source", "destination"}) {
        if (const RoleDecl* r = d.role(a.name, slot))
            node.slots.push_back({slot, entity(ids, role_symbol(a, *r))});
        else if (std::string(slot) == "actee" && d.is_reader(a.name))
            throw RoleGapError("mentioned action has no actee role: " + a.name);
    }

    for (const auto& [pi, label] : in.patterns) {
        if (pi == index) {
            node.slots.push_back({"exhaustive-duration", entity(ids, label)});
            break;
        }
    }

    bool device = d.is_device(a.name);
    node.slots.push_back({"tense", plain(device ? "future" : "present")});
    node.slots.push_back(
        {"speechact", plain(device ? "assertion"
                                   : a.name == "touch" ? "neg-imperative"
                                                       : "imperative")});
    return node;
}

}  // namespace

bool caused_salient_change(const DomainModel& d, const Situation& prefix) {
    if (prefix.empty()) return false;
    const Action& a = prefix.back();

    // An indicator acting is salient by itself.
    if (const RoleDecl* r = d.role(a.name, "actor")) {
        if (d.is_indicator(role_symbol(a, *r))) return true;
    }

    // Otherwise: did the action newly expose a tangible object?
    Situation before(prefix.begin(), prefix.end() - 1);
    for (const Atom& f : d.statics) {
        if (f.name != "physical_object" && f.name != "raw_material") continue;
        Fluent q{"exposed", {f.args[0]}};
        if (!holds_any(d, q, before) && holds_any(d, q, prefix)) return true;
    }
    return false;
}

std::vector<SplNode> make_spl(const DomainModel& d, const Interpretation& in) {
    std::vector<SplNode> out;
    const auto& es = in.entries;
    int ids = 0;
    size_t i = 0;
    while (i < es.size()) {
        // A device action is only mentioned when it closes a recognized
        // collection: two consecutive device entries, then a reader entry,
        // with a noticeable change at the middle one.
        if (i + 2 < es.size()) {
            const auto& [i1, a1] = es[i];
            const auto& [i2, a2] = es[i + 1];
            const auto& [i3, a3] = es[i + 2];
            bool pattern_at_i1 =
                std::any_of(in.patterns.begin(), in.patterns.end(),
                            [&](const LabelPattern& p) { return p.first == i1; });
            if (i2 == i1 + 1 && d.is_device(a1.name) && d.is_device(a2.name) &&
                d.is_reader(a3.name) && pattern_at_i1 &&
                caused_salient_change(d, prefix_through(es, i2))) {
                out.push_back(build_node(d, in, i2, a2, ids));
                out.push_back(build_node(d, in, i3, a3, ids));
                i += 3;
                continue;
            }
        }
        const auto& [idx, a] = es[i];
        if (d.is_reader(a.name) && a.name != "get_burned")
            out.push_back(build_node(d, in, idx, a, ids));
        ++i;
    }
    return out;
}

std::string write_spl(const std::vector<SplNode>& nodes) {
    std::ostringstream out;
    out << "(setq plan '(";
    for (size_t n = 0; n < nodes.size(); ++n) {
        if (n) out << "\n";
        const SplNode& node = nodes[n];
        out << "(ID" << node.id << " / " << node.process;
        for (const SlotFiller& sf : node.slots) {
            out << "\n        :" << sf.slot << ' ';
            switch (sf.filler.kind) {
                case Filler::Kind::Hearer:
                    out << "(hearer / person)";
                    break;
                case Filler::Kind::Entity:
                    out << "(ID" << sf.filler.id << " / " << sf.filler.value
                        << "\n                :determiner the)";
                    break;
                case Filler::Kind::Plain:
                    out << sf.filler.value;
                    break;
            }
        }
        out << ')';
    }
    out << "))\n";
    return out.str();
}

namespace {

struct Tokens {
    std::vector<std::string> toks;
    size_t pos = 0;

    const std::string& peek() const {
        static const std::string empty;
        return pos < toks.size() ? toks[pos] : empty;
    }
    std::string next() {
        if (pos >= toks.size()) throw std::runtime_error("spl: unexpected end");
        return toks[pos++];
    }
    void expect(const std::string& t) {
        std::string got = next();
        if (got != t)
            throw std::runtime_error("spl: expected '" + t + "', got '" + got +
                                     "'");
    }
};

Tokens tokenize(const std::string& text) {
    Tokens t;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) {
            t.toks.push_back(cur);
            cur.clear();
        }
    };
    for (char c : text) {
        if (c == '(' || c == ')') {
            flush();
            t.toks.push_back(std::string(1, c));
        } else if (isspace(static_cast<unsigned char>(c))) {
            flush();
        } else {
            cur += c;
        }
    }
    flush();
    return t;
}

int parse_id(const std::string& tok) {
    if (tok.rfind("ID", 0) != 0)
        throw std::runtime_error("spl: expected ID token, got '" + tok + "'");
    return std::stoi(tok.substr(2));
}

}  // namespace

std::vector<SplNode> parse_spl(const std::string& text) {
    Tokens t = tokenize(text);
    std::vector<SplNode> out;
    t.expect("(");
    t.expect("setq");
    t.expect("plan");
    t.expect("'");
    t.expect("(");
    while (t.peek() == "(") {
        t.next();
        SplNode node;
        node.id = parse_id(t.next());
        t.expect("/");
        node.process = t.next();
        while (t.peek() != ")") {
            std::string slot = t.next();
            if (slot.empty() || slot[0] != ':')
                throw std::runtime_error("spl: expected slot, got '" + slot +
                                         "'");
            SlotFiller sf;
            sf.slot = slot.substr(1);
            if (t.peek() == "(") {
                t.next();
                std::string head = t.next();
                t.expect("/");
                std::string value = t.next();
                if (head == "hearer") {
                    sf.filler.kind = Filler::Kind::Hearer;
                    t.expect(")");
                } else {
                    sf.filler.kind = Filler::Kind::Entity;
                    sf.filler.id = parse_id(head);
                    sf.filler.value = value;
                    t.expect(":determiner");
                    t.expect("the");
                    t.expect(")");
                }
            } else {
                sf.filler.kind = Filler::Kind::Plain;
                sf.filler.value = t.next();
            }
            node.slots.push_back(std::move(sf));
        }
        t.expect(")");
        out.push_back(std::move(node));
    }
    t.expect(")");
    t.expect(")");
    return out;
}

}  // namespace instrgen
