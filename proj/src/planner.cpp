#include "instrgen/planner.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace instrgen {

bool satisfied(const DomainModel& d, const std::vector<Fluent>& goal,
               const Situation& s) {
    for (const Fluent& g : goal)
        if (!holds_any(d, g, s)) return false;
    return true;
}

bool loop_guard_rejects(const DomainModel& d, const Action& last,
                        const Action& candidate) {
    for (const auto& [pat1, flu1] : d.affects) {
        auto m1 = match(pat1, last, {});
        if (!m1) continue;
        Fluent f1 = subst(flu1, *m1);
        for (const auto& [pat2, flu2] : d.affects) {
            auto m2 = match(pat2, candidate, {});
            if (!m2) continue;
            if (unifiable(f1, subst(flu2, *m2))) return true;
        }
    }
    return false;
}

namespace {

enum class SearchResult { Found, Exhausted };

SearchResult dfs(const DomainModel& d, const std::vector<Fluent>& goal,
                 Situation& s, size_t base_len, int max_depth, bool injury,
                 bool* depth_hit) {
    if (satisfied(d, goal, s)) return SearchResult::Found;
    if (s.size() - base_len >= static_cast<size_t>(max_depth)) {
        *depth_hit = true;
        return SearchResult::Exhausted;
    }
    for (const Action& a : poss(d, s)) {
        bool cls = injury ? d.is_injury(a.name) : d.is_normal(a.name);
        if (!cls) continue;
        if (!s.empty() && loop_guard_rejects(d, s.back(), a)) continue;
        s.push_back(a);
        if (dfs(d, goal, s, base_len, max_depth, injury, depth_hit) ==
            SearchResult::Found)
            return SearchResult::Found;
        s.pop_back();
    }
    return SearchResult::Exhausted;
}

Plan run_dfs(const DomainModel& d, const std::vector<Fluent>& goal,
             const Situation& start, int max_depth, bool injury, bool* failed) {
    Situation s = start;
    bool depth_hit = false;
    if (dfs(d, goal, s, start.size(), max_depth, injury, &depth_hit) ==
        SearchResult::Found) {
        if (failed) *failed = false;
        return Plan(s.begin() + start.size(), s.end());
    }
    if (failed) {
        *failed = true;
        return {};
    }
    if (depth_hit)
        throw DepthExceededError("planning exceeded depth bound " +
                                 std::to_string(max_depth));
    throw NoPlanError("no plan reaches the goal");
}

}  // namespace

Plan plan_normal(const DomainModel& d, const std::vector<Fluent>& goal,
                 const Situation& start, int max_depth) {
    return run_dfs(d, goal, start, max_depth, false, nullptr);
}

std::optional<Plan> plan_injury(const DomainModel& d,
                                const std::vector<Fluent>& goal,
                                const Situation& start, int max_depth) {
    bool failed = false;
    Plan p = run_dfs(d, goal, start, max_depth, true, &failed);
    if (failed) return std::nullopt;
    return p;
}

IndexedPlan index_actions(const Plan& plan) {
    IndexedPlan out;
    int i = 0;
    for (const Action& a : plan) out.push_back({++i, {a}});
    return out;
}

std::optional<int> bfs_oracle(const DomainModel& d,
                              const std::vector<Fluent>& goal,
                              const Situation& start,
                              const std::vector<std::string>& allowed,
                              int max_depth) {
    auto allowed_action = [&](const Action& a) {
        return allowed.empty() ||
               std::find(allowed.begin(), allowed.end(), a.name) != allowed.end();
    };

    // States that lead to the same ground fluent set behave identically,
    // so deduplicate on a full state signature.
    auto signature = [&](const Situation& s) {
        std::set<std::string> facts;
        for (const SuccessorRule& r : d.successors) {
            Fluent q;
            q.name = r.pattern.name;
            for (size_t i = 0; i < r.pattern.args.size(); ++i)
                q.args.push_back(Term::var("_sig" + std::to_string(i)));
            for (const Binding& b : holds(d, q, s))
                facts.insert(to_string(subst(q, b)));
        }
        std::ostringstream sig;
        for (const auto& f : facts) sig << f << ';';
        return sig.str();
    };

    if (satisfied(d, goal, start)) return 0;
    std::deque<std::pair<Situation, int>> frontier{{start, 0}};
    std::set<std::string> seen{signature(start)};
    while (!frontier.empty()) {
        auto [s, depth] = frontier.front();
        frontier.pop_front();
        if (depth >= max_depth) continue;
        for (const Action& a : poss(d, s)) {
            if (!allowed_action(a)) continue;
            Situation next = s;
            next.push_back(a);
            if (satisfied(d, goal, next)) return depth + 1;
            if (seen.insert(signature(next)).second)
                frontier.emplace_back(std::move(next), depth + 1);
        }
    }
    return std::nullopt;
}

}  // namespace instrgen
