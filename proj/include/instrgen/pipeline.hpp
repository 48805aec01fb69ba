#pragma once

#include "instrgen/interpret.hpp"
#include "instrgen/realize.hpp"
#include "instrgen/spl.hpp"
#include "instrgen/weaver.hpp"

namespace instrgen {

// End-to-end run: plan for the domain goal, weave in injury sub-plans,
// interpret, build sentence plans, realize text.
struct PipelineResult {
    Plan plan;
    std::vector<InjuryPoint> points;
    IndexedPlan merged;
    Interpretation interp;
    std::vector<SplNode> nodes;
    std::vector<std::string> sentences;
};

PipelineResult run_pipeline(const DomainModel& d,
                            int max_depth = kDefaultMaxDepth);

// Bracketed renderings used by the trace output.
std::string format_points(const std::vector<InjuryPoint>& points);
std::string format_indexed(const IndexedPlan& plan);
std::string format_entries(const std::vector<std::pair<int, Action>>& entries);
std::string format_patterns(const std::vector<LabelPattern>& patterns);

// Full processing transcript for one run.
std::string trace_text(const PipelineResult& r);

}  // namespace instrgen
