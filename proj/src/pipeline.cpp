#include "instrgen/pipeline.hpp"

#include <sstream>

namespace instrgen {

PipelineResult run_pipeline(const DomainModel& d, int max_depth) {
    PipelineResult r;
    r.plan = plan_normal(d, d.goal, {}, max_depth);
    r.points = injury_points(d, r.plan, {}, max_depth);
    r.merged = merge_injuries(index_actions(r.plan), r.points);
    r.interp = make_interpretations(d, r.merged);
    r.nodes = make_spl(d, r.interp);
    r.sentences = realize_plan(d, r.nodes);
    return r;
}

namespace {

std::string action_list(const std::vector<Action>& actions) {
    std::string out = "[";
    for (size_t i = 0; i < actions.size(); ++i) {
        if (i) out += ",";
        out += to_string(actions[i]);
    }
    return out + "]";
}

}  // namespace

std::string format_points(const std::vector<InjuryPoint>& points) {
    std::string out = "[";
    for (size_t i = 0; i < points.size(); ++i) {
        if (i) out += ",";
        out += "(" + std::to_string(points[i].index) + "," +
               action_list(points[i].actions) + ")";
    }
    return out + "]";
}

std::string format_indexed(const IndexedPlan& plan) {
    std::string out = "[";
    for (size_t i = 0; i < plan.size(); ++i) {
        if (i) out += ",";
        out += "(" + std::to_string(plan[i].index) + "," +
               action_list(plan[i].actions) + ")";
    }
    return out + "]";
}

std::string format_entries(const std::vector<std::pair<int, Action>>& entries) {
    std::string out = "[";
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i) out += ",";
        out += "(" + std::to_string(entries[i].first) + "," +
               to_string(entries[i].second) + ")";
    }
    return out + "]";
}

std::string format_patterns(const std::vector<LabelPattern>& patterns) {
    std::string out = "[";
    for (size_t i = 0; i < patterns.size(); ++i) {
        if (i) out += ",";
        out += "(" + std::to_string(patterns[i].first) + "," +
               patterns[i].second + ")";
    }
    return out + "]";
}

std::string trace_text(const PipelineResult& r) {
    std::ostringstream out;
    Situation goal_state(r.plan.begin(), r.plan.end());
    out << "GOAL STATE: " << to_string(goal_state) << "\n";
    out << "Inserting injuries...\n";
    out << "INDEX:";
    for (size_t i = 1; i <= r.plan.size(); ++i) out << " [" << i << "]";
    out << "\n";
    out << "POINTS: " << format_points(r.points) << "\n";
    out << "WITH INJURIES: " << format_indexed(r.merged) << "\n";
    out << "Making interpretations...\n";
    out << "INTERPRETATIONS: " << format_entries(r.interp.entries) << "\n";
    out << "PATTERNS: " << format_patterns(r.interp.patterns) << "\n";
    out << "Making SPL...\n";
    out << "Done.\n";
    return out.str();
}

}  // namespace instrgen
