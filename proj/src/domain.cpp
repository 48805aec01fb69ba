#include "instrgen/domain.hpp"

#include <algorithm>
#include <set>

namespace instrgen {

namespace {

bool contains_name(const std::vector<std::string>& v, const std::string& n) {
    return std::find(v.begin(), v.end(), n) != v.end();
}

void collect_fluent_names(const Condition& c, std::set<std::string>& out) {
    switch (c.kind) {
        case Condition::Kind::Holds:
        case Condition::Kind::NotHolds:
        case Condition::Kind::HoldsNow:
            out.insert(c.atom.name);
            break;
        case Condition::Kind::ContainsStar:
            out.insert("contains");
            break;
        case Condition::Kind::And:
        case Condition::Kind::Or:
        case Condition::Kind::Not:
            for (const Condition& k : c.kids) collect_fluent_names(k, out);
            break;
        default:
            break;
    }
}

}  // namespace

const SuccessorRule* DomainModel::successor_for(const std::string& fluent) const {
    for (const SuccessorRule& r : successors)
        if (r.pattern.name == fluent) return &r;
    return nullptr;
}

bool DomainModel::is_reader(const std::string& action) const {
    return contains_name(reader_actions, action);
}
bool DomainModel::is_device(const std::string& action) const {
    return contains_name(device_actions, action);
}
bool DomainModel::is_normal(const std::string& action) const {
    return contains_name(normal_actions, action);
}
bool DomainModel::is_injury(const std::string& action) const {
    return contains_name(injury_actions, action);
}

bool DomainModel::is_indicator(const std::string& symbol) const {
    for (const Atom& f : statics)
        if (f.name == "indicator" && f.args.size() == 1 &&
            f.args[0].kind == Term::Kind::Sym && f.args[0].text == symbol)
            return true;
    return false;
}

const RoleDecl* DomainModel::role(const std::string& action,
                                  const std::string& slot) const {
    for (const RoleDecl& r : roles)
        if (r.action == action && r.slot == slot) return &r;
    return nullptr;
}

const ActorQuery* DomainModel::actor_query(const std::string& action) const {
    for (const ActorQuery& q : actor_queries)
        if (q.action == action) return &q;
    return nullptr;
}

std::string DomainModel::surface(const std::string& symbol) const {
    for (const auto& [sym, text] : lexicon)
        if (sym == symbol) return text;
    std::string out = symbol;
    std::replace(out.begin(), out.end(), '_', ' ');
    return out;
}

std::vector<Diagnostic> validate_domain(const DomainModel& d,
                                        bool include_warnings) {
    std::vector<Diagnostic> out;
    auto error = [&](std::string msg) {
        out.push_back({Diagnostic::Severity::Error, std::move(msg)});
    };
    auto warning = [&](std::string msg) {
        if (include_warnings)
            out.push_back({Diagnostic::Severity::Warning, std::move(msg)});
    };

    // Action names mentioned by precondition rules.
    std::vector<std::string> action_names;
    for (const PrecondRule& r : d.preconds)
        if (!contains_name(action_names, r.pattern.name))
            action_names.push_back(r.pattern.name);

    for (const std::string& a : action_names) {
        bool reader = d.is_reader(a);
        bool device = d.is_device(a);
        if (!reader && !device)
            error("action '" + a + "' is neither a reader nor a device action");
        if (reader && device)
            error("action '" + a + "' is classified as both reader and device");
        bool normal = d.is_normal(a);
        bool injury = d.is_injury(a);
        if (!normal && !injury)
            error("action '" + a + "' is neither a normal nor an injury action");
        if (normal && injury)
            error("action '" + a + "' is classified as both normal and injury");
        if ((a == "touch" || a == "get_burned") && !injury)
            error("injury action '" + a + "' is misclassified as normal");
    }
    for (const std::string& a : d.normal_actions)
        if (!contains_name(action_names, a))
            error("normal action '" + a + "' has no precondition rule");
    for (const std::string& a : d.injury_actions)
        if (!contains_name(action_names, a))
            error("injury action '" + a + "' has no precondition rule");

    // Duplicate successor rules.
    std::set<std::string> fluent_rules;
    for (const SuccessorRule& r : d.successors) {
        if (!fluent_rules.insert(r.pattern.name).second)
            error("fluent '" + r.pattern.name + "' has two successor rules");
    }

    // Every fluent name referenced anywhere must be housed: it needs a
    // successor rule or at least an initial entry.
    std::set<std::string> referenced;
    for (const PrecondRule& r : d.preconds) collect_fluent_names(r.cond, referenced);
    for (const SuccessorRule& r : d.successors)
        for (const Condition& c : r.disjuncts) collect_fluent_names(c, referenced);
    for (const Fluent& g : d.goal) referenced.insert(g.name);
    for (const auto& [a, f] : d.affects) referenced.insert(f.name);
    std::set<std::string> housed = fluent_rules;
    for (const Fluent& f : d.init) housed.insert(f.name);
    for (const std::string& f : referenced)
        if (!housed.count(f))
            error("fluent '" + f + "' is referenced but has no successor rule "
                  "and no initial entry");

    // Normal actions without an affects entry are invisible to the loop
    // guard; legitimate for actions meant to repeat (heating), so advisory.
    for (const std::string& a : d.normal_actions) {
        bool found = false;
        for (const auto& [pat, f] : d.affects)
            if (pat.name == a) found = true;
        if (!found)
            warning("normal action '" + a + "' has no affects entry");
    }

    // Goal fluents must be present.
    if (d.goal.empty()) error("domain has no goal");

    return out;
}

}  // namespace instrgen
