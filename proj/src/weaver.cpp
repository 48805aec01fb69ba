#include "instrgen/weaver.hpp"

namespace instrgen {

std::vector<InjuryPoint> injury_points(const DomainModel& d, const Plan& plan,
                                       const Situation& start, int max_depth) {
    std::vector<InjuryPoint> out;
    // Domains that model no injuries have nothing to weave in.
    if (d.injury_actions.empty() || !d.successor_for("burned")) return out;
    std::vector<Fluent> burned{Atom{"burned", {}}};
    Situation s = start;
    for (size_t i = 0; i < plan.size(); ++i) {
        s.push_back(plan[i]);
        if (auto sub = plan_injury(d, burned, s, max_depth); sub && !sub->empty())
            out.push_back({static_cast<int>(i) + 1, *sub});
    }
    return out;
}

IndexedPlan merge_injuries(const IndexedPlan& plan,
                           const std::vector<InjuryPoint>& points) {
    IndexedPlan out = plan;
    for (const InjuryPoint& p : points) {
        for (PlanEntry& e : out) {
            if (e.index == p.index) {
                e.actions.insert(e.actions.end(), p.actions.begin(),
                                 p.actions.end());
                break;
            }
        }
    }
    return out;
}

}  // namespace instrgen
