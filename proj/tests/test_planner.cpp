#include "doctest.h"

#include "instrgen/domain_io.hpp"
#include "support.hpp"

using namespace instrgen;
using namespace testsupport;

TEST_CASE("toaster plan matches the golden 12-action sequence") {
    auto d = builtin_domain("toaster");
    auto plan = plan_normal(d, d.goal);
    CHECK(plan_text(plan) == plan_text(golden_toaster_plan()));
}

TEST_CASE("breadmaker plan matches the golden 26-action sequence") {
    auto d = builtin_domain("breadmaker");
    auto plan = plan_normal(d, d.goal);
    CHECK(plan_text(plan) == plan_text(golden_breadmaker_plan()));
}

TEST_CASE("combined plan matches the golden 34-action sequence") {
    auto d = builtin_domain("combined");
    auto plan = plan_normal(d, d.goal);
    CHECK(plan_text(plan) == plan_text(golden_combined_plan()));
}

TEST_CASE("goal satisfaction flips only at the final action") {
    auto d = builtin_domain("toaster");
    auto plan = golden_toaster_plan();
    Situation s;
    for (size_t i = 0; i + 1 < plan.size(); ++i) {
        s.push_back(plan[i]);
        CHECK(!satisfied(d, d.goal, s));
    }
    s.push_back(plan.back());
    CHECK(satisfied(d, d.goal, s));
}

TEST_CASE("loop guard blocks immediate undo pairs") {
    auto d = builtin_domain("toaster");
    Action ins = A("insert", {S("bread_slice"), S("bread_slot")});
    Action rem = A("remove", {S("bread_slice"), S("bread_slot")});
    CHECK(loop_guard_rejects(d, ins, rem));
    CHECK(loop_guard_rejects(d, rem, ins));
    // raise_temp is deliberately absent from the affects table, so heating
    // can repeat.
    Action heat = A("raise_temp", {S("bread_slot")});
    CHECK(!loop_guard_rejects(d, heat, heat));
    CHECK(!loop_guard_rejects(d, ins, heat));

    auto bm = builtin_domain("breadmaker");
    CHECK(loop_guard_rejects(bm, A("open", {S("lid")}), A("close", {S("lid")})));
    CHECK(loop_guard_rejects(bm, A("close", {S("lid")}), A("open", {S("lid")})));
}

TEST_CASE("exhausted search reports no plan") {
    // A tiny domain whose only action is irreversible: an unreachable goal
    // exhausts the space well below the depth bound.
    auto d = load_domain(
        "(domain mini)\n"
        "(static thing box)\n"
        "(precond (kick ?x) (and (static (thing ?x))\n"
        "                        (not-holds (opened ?x))))\n"
        "(successor (opened ?x)\n"
        "  (when (action-is (kick ?x)))\n"
        "  (persist (holds (opened ?x))))\n"
        "(classify reader kick)\n"
        "(classify normal kick)\n"
        "(affects (kick ?x) (opened ?x))\n"
        "(role kick actee arg1)\n"
        "(goal (broken box))\n");
    // "broken" has no successor rule, so it can never hold.
    d.successors.push_back(
        {Fluent{"broken", {Term::var("x")}}, {c_holds(Fluent{"broken", {Term::var("x")}})}, false});
    CHECK_THROWS_AS((void)plan_normal(d, d.goal), NoPlanError);
}

TEST_CASE("depth bound reports depth exceeded") {
    auto d = builtin_domain("toaster");
    // The golden plan needs 12 steps; a bound of 6 cuts the search off.
    CHECK_THROWS_AS((void)plan_normal(d, d.goal, {}, 6), DepthExceededError);
}

TEST_CASE("injury planning succeeds only from hot states") {
    auto d = builtin_domain("toaster");
    CHECK(!plan_injury(d, {Fluent{"burned", {}}}, {}).has_value());

    Situation hot = {A("insert", {S("bread_slice"), S("bread_slot")}),
                     A("press", {S("on_lever")}),
                     A("raise_temp", {S("bread_slot")})};
    auto sub = plan_injury(d, {Fluent{"burned", {}}}, hot);
    REQUIRE(sub.has_value());
    REQUIRE(sub->size() == 2);
    CHECK((*sub)[0] == A("touch", {S("bread_slot")}));
    CHECK((*sub)[1] == A("get_burned"));
}

TEST_CASE("index_actions wraps a plan with 1-based indices") {
    auto indexed = index_actions(golden_toaster_plan());
    REQUIRE(indexed.size() == 12);
    CHECK(indexed.front().index == 1);
    CHECK(indexed.back().index == 12);
    for (const auto& e : indexed) CHECK(e.actions.size() == 1);
}

TEST_CASE("breadth-first oracle agrees with the committed search") {
    auto d = builtin_domain("toaster");
    auto best = bfs_oracle(d, d.goal, {}, {}, 14);
    REQUIRE(best.has_value());
    CHECK(*best == 12);

    auto burned = bfs_oracle(d, {Fluent{"burned", {}}}, {}, {}, 8);
    REQUIRE(burned.has_value());
    CHECK(*burned == 5);

    CHECK(!bfs_oracle(d, {Fluent{"burned", {}}}, {}, {}, 3).has_value());
}
