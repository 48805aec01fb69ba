#include "doctest.h"

#include "support.hpp"

using namespace instrgen;
using namespace testsupport;

namespace {

Interpretation interpret_domain(const char* name) {
    auto d = builtin_domain(name);
    auto plan = plan_normal(d, d.goal);
    auto merged = merge_injuries(index_actions(plan), injury_points(d, plan));
    return make_interpretations(d, merged);
}

PlanEntry entry(int index, std::vector<Action> actions) {
    return PlanEntry{index, std::move(actions)};
}

}  // namespace

TEST_CASE("toaster interpretation matches the golden entries") {
    auto in = interpret_domain("toaster");
    auto want = golden_toaster_entries();
    REQUIRE(in.entries.size() == want.size());
    for (size_t i = 0; i < want.size(); ++i) {
        CAPTURE(i);
        CHECK(in.entries[i].first == want[i].first);
        CHECK(to_string(in.entries[i].second) == to_string(want[i].second));
    }
    REQUIRE(in.patterns.size() == 1);
    CHECK(in.patterns[0] == LabelPattern{3, "heating_period"});
}

TEST_CASE("breadmaker interpretation collapses one heating period") {
    auto in = interpret_domain("breadmaker");
    REQUIRE(in.patterns.size() == 1);
    CHECK(in.patterns[0] == LabelPattern{9, "heating_period"});
    CHECK(in.entries.size() == 30);

    // The group keeps one injury pair per touched object, at its first
    // occurrence.
    int touches = 0;
    for (const auto& [idx, a] : in.entries)
        if (a.name == "touch") {
            ++touches;
            CHECK(idx == 9);
        }
    CHECK(touches == 2);

    // Indices after the group are renumbered consecutively.
    CHECK(in.entries.back().first == 13);
    CHECK(in.entries.back().second ==
          Action{"remove", {S("bread"), S("baking_pan_interior")}});
}

TEST_CASE("combined interpretation finds both heating periods") {
    auto in = interpret_domain("combined");
    REQUIRE(in.patterns.size() == 2);
    CHECK(in.patterns[0] == LabelPattern{9, "heating_period"});
    CHECK(in.patterns[1] == LabelPattern{17, "heating_period"});
    CHECK(in.entries.size() == 40);
    CHECK(in.entries.back().first == 19);
    CHECK(in.entries.back().second ==
          Action{"remove", {S("bread_slice"), S("bread_slot")}});
}

TEST_CASE("retained_injuries keeps the first copy of each sub-plan") {
    Action heat = A("raise_temp", {S("bread_slot")});
    Action touch = A("touch", {S("bread_slot")});
    Action burn = A("get_burned");
    Action touch2 = A("touch", {S("bread_slice")});
    IndexedPlan group = {entry(3, {heat, touch, burn}),
                         entry(3, {heat, touch, burn}),
                         entry(3, {heat, touch2, burn}),
                         entry(3, {heat})};
    auto out = retained_injuries(group);
    REQUIRE(out.size() == 4);
    CHECK(out[0].actions == std::vector<Action>{heat, touch, burn});
    CHECK(out[1].actions == std::vector<Action>{heat});
    CHECK(out[2].actions == std::vector<Action>{heat, touch2, burn});
    CHECK(out[3].actions == std::vector<Action>{heat});
}

TEST_CASE("runs spanning fewer than three indices are not collapsed") {
    auto d = builtin_domain("toaster");
    Action heat = A("raise_temp", {S("bread_slot")});
    IndexedPlan merged = {entry(1, {A("insert", {S("bread_slice"), S("bread_slot")})}),
                          entry(2, {A("press", {S("on_lever")})}),
                          entry(3, {heat}),
                          entry(4, {heat}),
                          entry(5, {A("pop_up")})};
    auto in = make_interpretations(d, merged);
    CHECK(in.patterns.empty());
    CHECK(in.entries.size() == 5);
    CHECK(in.entries[3].first == 4);  // indices untouched

    merged = {entry(1, {A("insert", {S("bread_slice"), S("bread_slot")})}),
              entry(2, {A("press", {S("on_lever")})}),
              entry(3, {heat}),
              entry(4, {heat}),
              entry(5, {heat}),
              entry(6, {A("pop_up")})};
    in = make_interpretations(d, merged);
    REQUIRE(in.patterns.size() == 1);
    CHECK(in.patterns[0] == LabelPattern{3, "heating_period"});
    // All run members share the start index; what follows is renumbered.
    CHECK(in.entries[3].first == 3);
    CHECK(in.entries[4].first == 3);
    CHECK(in.entries[5].first == 4);
}
