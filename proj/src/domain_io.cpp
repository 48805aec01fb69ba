#include "instrgen/domain_io.hpp"

#include <cctype>
#include <sstream>

namespace instrgen {

// ---- serialization -------------------------------------------------------

namespace {

std::string term_text(const Term& t) {
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

std::string atom_text(const Atom& a) {
    std::string out = "(" + a.name;
    for (const Term& t : a.args) out += " " + term_text(t);
    return out + ")";
}

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string cond_text(const Condition& c) {
    using K = Condition::Kind;
    switch (c.kind) {
        case K::Holds:
            return "(holds " + atom_text(c.atom) + ")";
        case K::NotHolds:
            return "(not-holds " + atom_text(c.atom) + ")";
        case K::HoldsNow:
            return "(holds-now " + atom_text(c.atom) + ")";
        case K::Static:
            return "(static " + atom_text(c.atom) + ")";
        case K::ActionIs:
            return "(action-is " + atom_text(c.atom) + ")";
        case K::ActionIsNot:
            return "(action-is-not " + atom_text(c.atom) + ")";
        case K::ContainsStar:
            return "(contains* " + term_text(c.container) + " " +
                   term_text(c.item) + ")";
        case K::Compare: {
            std::string out =
                "(cmp " + c.op + " " + term_text(c.lhs) + " " + term_text(c.rhs);
            if (c.offset != 0) out += " " + std::to_string(c.offset);
            return out + ")";
        }
        case K::And:
        case K::Or:
        case K::Not: {
            std::string out = c.kind == K::And ? "(and"
                              : c.kind == K::Or ? "(or"
                                                : "(not";
            for (const Condition& k : c.kids) out += " " + cond_text(k);
            return out + ")";
        }
    }
    return {};
}

}  // namespace

std::string serialize_domain(const DomainModel& d) {
    std::ostringstream out;
    out << "(domain " << d.name << ")\n";
    for (const Atom& f : d.statics) {
        out << "(static " << f.name;
        for (const Term& t : f.args) out << " " << term_text(t);
        out << ")\n";
    }
    for (const Fluent& f : d.init) out << "(init " << atom_text(f) << ")\n";
    for (const PrecondRule& r : d.preconds)
        out << (r.planner_guard ? "(precond! " : "(precond ")
            << atom_text(r.pattern) << " " << cond_text(r.cond) << ")\n";
    for (const SuccessorRule& r : d.successors) {
        out << "(successor " << atom_text(r.pattern);
        for (size_t i = 0; i < r.disjuncts.size(); ++i) {
            bool persist = r.has_persistence && i + 1 == r.disjuncts.size();
            out << " (" << (persist ? "persist" : "when") << " "
                << cond_text(r.disjuncts[i]) << ")";
        }
        out << ")\n";
    }
    auto classify = [&](const char* label, const std::vector<std::string>& v) {
        out << "(classify " << label;
        for (const std::string& n : v) out << " " << n;
        out << ")\n";
    };
    classify("reader", d.reader_actions);
    classify("device", d.device_actions);
    classify("normal", d.normal_actions);
    classify("injury", d.injury_actions);
    for (const auto& [a, f] : d.affects)
        out << "(affects " << atom_text(a) << " " << atom_text(f) << ")\n";
    for (const RoleDecl& r : d.roles) {
        out << "(role " << r.action << " " << r.slot << " ";
        if (r.arg_pos >= 0)
            out << "arg" << (r.arg_pos + 1);
        else
            out << r.fixed;
        out << ")\n";
    }
    for (const ActorQuery& q : d.actor_queries)
        out << "(actor-query " << q.action << " " << atom_text(q.query) << " ?"
            << q.var << ")\n";
    for (const CollectionSpec& c : d.collections) {
        out << "(collection " << c.label;
        for (const std::string& m : c.members) out << " " << m;
        out << ")\n";
    }
    out << "(guard touch-temp " << d.touch_guard_temp << ")\n";
    for (const auto& [sym, text] : d.lexicon)
        out << "(lexeme " << sym << " " << quote(text) << ")\n";
    out << "(goal";
    for (const Fluent& g : d.goal) out << " " << atom_text(g);
    out << ")\n";
    return out.str();
}

// ---- parsing -------------------------------------------------------------

namespace {

// Generic s-expression node.
struct Sexp {
    bool is_list = false;
    std::string token;        // atom token (strings keep a '"' sentinel prefix)
    std::vector<Sexp> items;  // list elements
};

struct Reader {
    const std::string& text;
    size_t pos = 0;

    explicit Reader(const std::string& t) : text(t) {}

    void skip_space() {
        while (pos < text.size()) {
            if (text[pos] == ';') {
                while (pos < text.size() && text[pos] != '\n') ++pos;
            } else if (isspace(static_cast<unsigned char>(text[pos]))) {
                ++pos;
            } else {
                break;
            }
        }
    }

    bool at_end() {
        skip_space();
        return pos >= text.size();
    }

    Sexp read() {
        skip_space();
        if (pos >= text.size()) throw ParseError("unexpected end of input");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            Sexp list;
            list.is_list = true;
            while (true) {
                skip_space();
                if (pos >= text.size()) throw ParseError("unclosed list");
                if (text[pos] == ')') {
                    ++pos;
                    return list;
                }
                list.items.push_back(read());
            }
        }
        if (c == ')') throw ParseError("unexpected ')'");
        if (c == '"') {
            ++pos;
            std::string s = "\"";  // sentinel marks a string token
            while (pos < text.size() && text[pos] != '"') {
                if (text[pos] == '\\' && pos + 1 < text.size()) ++pos;
                s += text[pos++];
            }
            if (pos >= text.size()) throw ParseError("unclosed string");
            ++pos;
            Sexp a;
            a.token = s;
            return a;
        }
        std::string tok;
        while (pos < text.size() && !isspace(static_cast<unsigned char>(text[pos])) &&
               text[pos] != '(' && text[pos] != ')' && text[pos] != ';')
            tok += text[pos++];
        Sexp a;
        a.token = tok;
        return a;
    }
};

const std::string& expect_atom(const Sexp& s, const char* what) {
    if (s.is_list) throw ParseError(std::string("expected ") + what);
    return s.token;
}

Term parse_term(const Sexp& s) {
    const std::string& t = expect_atom(s, "term");
    if (t.empty()) throw ParseError("empty term");
    if (t[0] == '?') return Term::var(t.substr(1));
    if (t[0] == '-' || isdigit(static_cast<unsigned char>(t[0]))) {
        try {
            size_t used = 0;
            long long v = std::stoll(t, &used);
            if (used == t.size()) return Term::integer(v);
        } catch (const std::exception&) {
        }
    }
    return Term::sym(t);
}

Atom parse_atom(const Sexp& s) {
    if (!s.is_list || s.items.empty())
        throw ParseError("expected (name args...) form");
    Atom a;
    a.name = expect_atom(s.items[0], "atom name");
    for (size_t i = 1; i < s.items.size(); ++i)
        a.args.push_back(parse_term(s.items[i]));
    return a;
}

Condition parse_cond(const Sexp& s) {
    if (!s.is_list || s.items.empty()) throw ParseError("expected condition");
    const std::string& head = expect_atom(s.items[0], "condition head");
    auto arity = [&](size_t n) {
        if (s.items.size() != n + 1)
            throw ParseError("wrong arity for condition '" + head + "'");
    };
    if (head == "holds") {
        arity(1);
        return c_holds(parse_atom(s.items[1]));
    }
    if (head == "not-holds") {
        arity(1);
        return c_not_holds(parse_atom(s.items[1]));
    }
    if (head == "holds-now") {
        arity(1);
        return c_holds_now(parse_atom(s.items[1]));
    }
    if (head == "static") {
        arity(1);
        return c_static(parse_atom(s.items[1]));
    }
    if (head == "action-is") {
        arity(1);
        return c_action_is(parse_atom(s.items[1]));
    }
    if (head == "action-is-not") {
        arity(1);
        return c_action_is_not(parse_atom(s.items[1]));
    }
    if (head == "contains*") {
        arity(2);
        return c_contains_star(parse_term(s.items[1]), parse_term(s.items[2]));
    }
    if (head == "cmp") {
        if (s.items.size() != 4 && s.items.size() != 5)
            throw ParseError("cmp takes an operator, two terms, and an "
                             "optional offset");
        long long offset = 0;
        if (s.items.size() == 5) {
            Term t = parse_term(s.items[4]);
            if (t.kind != Term::Kind::Int)
                throw ParseError("cmp offset must be an integer");
            offset = t.num;
        }
        const std::string& op = expect_atom(s.items[1], "cmp operator");
        if (op != "<" && op != "<=" && op != ">" && op != ">=" && op != "=")
            throw ParseError("unknown cmp operator '" + op + "'");
        return c_cmp(parse_term(s.items[2]), op, parse_term(s.items[3]), offset);
    }
    if (head == "and" || head == "or" || head == "not") {
        std::vector<Condition> kids;
        for (size_t i = 1; i < s.items.size(); ++i)
            kids.push_back(parse_cond(s.items[i]));
        if (head == "not") {
            if (kids.size() != 1) throw ParseError("not takes one condition");
            return c_not(std::move(kids[0]));
        }
        return head == "and" ? c_and(std::move(kids)) : c_or(std::move(kids));
    }
    throw ParseError("unknown condition '" + head + "'");
}

}  // namespace

DomainModel load_domain(const std::string& text) {
    DomainModel d;
    Reader reader(text);
    bool saw_domain = false;
    while (!reader.at_end()) {
        Sexp form = reader.read();
        if (!form.is_list || form.items.empty())
            throw ParseError("expected a top-level form");
        const std::string& head = expect_atom(form.items[0], "form head");
        auto need = [&](size_t n) {
            if (form.items.size() != n + 1)
                throw ParseError("wrong arity for form '" + head + "'");
        };
        if (head == "domain") {
            need(1);
            d.name = expect_atom(form.items[1], "domain name");
            saw_domain = true;
        } else if (head == "static") {
            if (form.items.size() < 2)
                throw ParseError("static needs a predicate name");
            Atom f;
            f.name = expect_atom(form.items[1], "static name");
            for (size_t i = 2; i < form.items.size(); ++i)
                f.args.push_back(parse_term(form.items[i]));
            d.statics.push_back(std::move(f));
        } else if (head == "init") {
            need(1);
            d.init.push_back(parse_atom(form.items[1]));
        } else if (head == "precond" || head == "precond!") {
            need(2);
            d.preconds.push_back({parse_atom(form.items[1]),
                                  parse_cond(form.items[2]),
                                  head == "precond!"});
        } else if (head == "successor") {
            if (form.items.size() < 3)
                throw ParseError("successor needs a pattern and disjuncts");
            SuccessorRule r;
            r.pattern = parse_atom(form.items[1]);
            for (size_t i = 2; i < form.items.size(); ++i) {
                const Sexp& dj = form.items[i];
                if (!dj.is_list || dj.items.size() != 2)
                    throw ParseError("successor disjunct must be "
                                     "(when cond) or (persist cond)");
                const std::string& kind = expect_atom(dj.items[0], "disjunct");
                if (kind == "persist") {
                    if (i + 1 != form.items.size())
                        throw ParseError("persist disjunct must come last");
                    r.has_persistence = true;
                } else if (kind != "when") {
                    throw ParseError("unknown disjunct kind '" + kind + "'");
                }
                r.disjuncts.push_back(parse_cond(dj.items[1]));
            }
            d.successors.push_back(std::move(r));
        } else if (head == "classify") {
            if (form.items.size() < 2)
                throw ParseError("classify needs a class name");
            const std::string& cls = expect_atom(form.items[1], "class");
            std::vector<std::string>* target =
                cls == "reader"   ? &d.reader_actions
                : cls == "device" ? &d.device_actions
                : cls == "normal" ? &d.normal_actions
                : cls == "injury" ? &d.injury_actions
                                  : nullptr;
            if (!target) throw ParseError("unknown class '" + cls + "'");
            for (size_t i = 2; i < form.items.size(); ++i)
                target->push_back(expect_atom(form.items[i], "action name"));
        } else if (head == "affects") {
            need(2);
            d.affects.emplace_back(parse_atom(form.items[1]),
                                   parse_atom(form.items[2]));
        } else if (head == "role") {
            need(3);
            RoleDecl r;
            r.action = expect_atom(form.items[1], "action");
            r.slot = expect_atom(form.items[2], "slot");
            const std::string& filler = expect_atom(form.items[3], "filler");
            if (filler.rfind("arg", 0) == 0) {
                r.arg_pos = std::stoi(filler.substr(3)) - 1;
                if (r.arg_pos < 0) throw ParseError("bad role argument index");
            } else {
                r.fixed = filler;
            }
            d.roles.push_back(std::move(r));
        } else if (head == "actor-query") {
            need(3);
            ActorQuery q;
            q.action = expect_atom(form.items[1], "action");
            q.query = parse_atom(form.items[2]);
            Term v = parse_term(form.items[3]);
            if (v.kind != Term::Kind::Var)
                throw ParseError("actor-query needs a variable");
            q.var = v.text;
            d.actor_queries.push_back(std::move(q));
        } else if (head == "collection") {
            if (form.items.size() < 3)
                throw ParseError("collection needs a label and members");
            CollectionSpec c;
            c.label = expect_atom(form.items[1], "label");
            for (size_t i = 2; i < form.items.size(); ++i)
                c.members.push_back(expect_atom(form.items[i], "member"));
            c.trigger = c.members.front();
            d.collections.push_back(std::move(c));
        } else if (head == "guard") {
            need(2);
            if (expect_atom(form.items[1], "guard name") != "touch-temp")
                throw ParseError("unknown guard");
            Term v = parse_term(form.items[2]);
            if (v.kind != Term::Kind::Int)
                throw ParseError("guard value must be an integer");
            d.touch_guard_temp = v.num;
        } else if (head == "lexeme") {
            need(2);
            std::string sym = expect_atom(form.items[1], "symbol");
            std::string text_tok = expect_atom(form.items[2], "surface");
            if (!text_tok.empty() && text_tok[0] == '"')
                text_tok = text_tok.substr(1);
            d.lexicon.emplace_back(std::move(sym), std::move(text_tok));
        } else if (head == "goal") {
            for (size_t i = 1; i < form.items.size(); ++i)
                d.goal.push_back(parse_atom(form.items[i]));
        } else {
            throw ParseError("unknown form '" + head + "'");
        }
    }
    if (!saw_domain) throw ParseError("missing (domain ...) form");
    return d;
}

}  // namespace instrgen
