#include "doctest.h"

#include "support.hpp"

using namespace instrgen;
using namespace testsupport;

namespace {

// (index, touched object) pairs of a point list whose sub-plans are all
// [touch(x), get_burned].
std::vector<std::pair<int, std::string>> touch_points(
    const std::vector<InjuryPoint>& points) {
    std::vector<std::pair<int, std::string>> out;
    for (const auto& p : points) {
        REQUIRE(p.actions.size() == 2);
        REQUIRE(p.actions[0].name == "touch");
        REQUIRE(p.actions[1] == Action{"get_burned", {}});
        out.emplace_back(p.index, p.actions[0].args[0].text);
    }
    return out;
}

}  // namespace

TEST_CASE("toaster injury points cover the hot prefixes") {
    auto d = builtin_domain("toaster");
    auto points = injury_points(d, golden_toaster_plan());
    CHECK(touch_points(points) == golden_toaster_points());
}

TEST_CASE("breadmaker injury points switch from body to vent") {
    auto d = builtin_domain("breadmaker");
    auto points = injury_points(d, golden_breadmaker_plan());
    CHECK(touch_points(points) == golden_breadmaker_points());
}

TEST_CASE("combined injury points cover both heating phases") {
    auto d = builtin_domain("combined");
    auto points = injury_points(d, golden_combined_plan());
    CHECK(touch_points(points) == golden_combined_points());
}

TEST_CASE("merge_injuries appends sub-plans at their indices") {
    auto d = builtin_domain("toaster");
    auto plan = golden_toaster_plan();
    auto merged = merge_injuries(index_actions(plan), injury_points(d, plan));
    REQUIRE(merged.size() == 12);
    for (size_t i = 0; i < merged.size(); ++i) {
        CHECK(merged[i].index == static_cast<int>(i) + 1);
        CHECK(merged[i].actions.front() == plan[i]);
        if (merged[i].index >= 3 && merged[i].index <= 10) {
            REQUIRE(merged[i].actions.size() == 3);
            CHECK(merged[i].actions[1] == Action{"touch", {S("bread_slot")}});
            CHECK(merged[i].actions[2] == Action{"get_burned", {}});
        } else {
            CHECK(merged[i].actions.size() == 1);
        }
    }
}

TEST_CASE("merge_injuries with no points is the identity") {
    auto plan = golden_toaster_plan();
    auto merged = merge_injuries(index_actions(plan), {});
    REQUIRE(merged.size() == plan.size());
    for (const auto& e : merged) CHECK(e.actions.size() == 1);
}
