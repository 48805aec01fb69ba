#include "doctest.h"

#include <algorithm>

#include "support.hpp"

using namespace instrgen;
using namespace testsupport;

namespace {

PipelineResult run_domain(const char* name) {
    return run_pipeline(builtin_domain(name));
}

}  // namespace

TEST_CASE("toaster SPL output is byte-identical to the golden file") {
    auto r = run_domain("toaster");
    CHECK(write_spl(r.nodes) == read_file(golden_path("toast.spl")));
}

TEST_CASE("breadmaker SPL output is byte-identical to the golden file") {
    auto r = run_domain("breadmaker");
    CHECK(write_spl(r.nodes) == read_file(golden_path("bread.spl")));
}

TEST_CASE("write_spl / parse_spl round-trip") {
    for (const char* name : {"toaster", "breadmaker", "combined"}) {
        CAPTURE(name);
        auto r = run_domain(name);
        std::string text = write_spl(r.nodes);
        CHECK(write_spl(parse_spl(text)) == text);
    }
    CHECK(write_spl(parse_spl("(setq plan '())\n")).empty() == false);
    CHECK(parse_spl("(setq plan '())\n").empty());
}

TEST_CASE("toaster sentence plans mention the right actions") {
    auto r = run_domain("toaster");
    REQUIRE(r.nodes.size() == 5);
    CHECK(r.nodes[0].process == "insert");
    CHECK(r.nodes[1].process == "press");
    CHECK(r.nodes[2].process == "touch");
    CHECK(r.nodes[3].process == "pop_up");
    CHECK(r.nodes[4].process == "remove");

    // The warning carries the collection as an exhaustive duration.
    bool has_duration = false;
    for (const auto& sf : r.nodes[2].slots)
        if (sf.slot == "exhaustive-duration") {
            has_duration = true;
            CHECK(sf.filler.value == "heating_period");
        }
    CHECK(has_duration);

    // The device action is asserted about its actor: the contained slice.
    CHECK(r.nodes[3].slots.front().slot == "actor");
    CHECK(r.nodes[3].slots.front().filler.value == "bread_slice");
    for (const auto& sf : r.nodes[3].slots)
        if (sf.slot == "speechact") CHECK(sf.filler.value == "assertion");
    for (const auto& sf : r.nodes[2].slots)
        if (sf.slot == "speechact") CHECK(sf.filler.value == "neg-imperative");
}

TEST_CASE("ids are contiguous across nodes and entities") {
    for (const char* name : {"toaster", "breadmaker", "combined"}) {
        CAPTURE(name);
        auto r = run_domain(name);
        int expected = 0;
        for (const auto& node : r.nodes) {
            CHECK(node.id == ++expected);
            for (const auto& sf : node.slots)
                if (sf.filler.kind == Filler::Kind::Entity)
                    CHECK(sf.filler.id == ++expected);
        }
    }
}

TEST_CASE("salient change detection") {
    auto d = builtin_domain("toaster");
    Situation s = {A("insert", {S("bread_slice"), S("bread_slot")}),
                   A("press", {S("on_lever")}),
                   A("raise_temp", {S("bread_slot")})};
    // Heating exposes nothing.
    CHECK(!caused_salient_change(d, s));

    Situation popped = {A("insert", {S("bread_slice"), S("bread_slot")}),
                        A("press", {S("on_lever")}), A("pop_up")};
    // Popping up re-exposes the slice.
    CHECK(caused_salient_change(d, popped));

    // An indicator acting is salient even without exposure changes.
    auto bm = builtin_domain("breadmaker");
    Situation flashed = {A("flash", {S("complete_light")})};
    CHECK(caused_salient_change(bm, flashed));
}

TEST_CASE("get_burned is never mentioned") {
    for (const char* name : {"toaster", "breadmaker", "combined"}) {
        CAPTURE(name);
        auto r = run_domain(name);
        for (const auto& node : r.nodes) CHECK(node.process != "get_burned");
    }
}

TEST_CASE("a mentioned reader action without roles is an error") {
    auto d = builtin_domain("toaster");
    auto r = run_domain("toaster");
    d.roles.erase(
        std::remove_if(d.roles.begin(), d.roles.end(),
                       [](const RoleDecl& rd) { return rd.action == "insert"; }),
        d.roles.end());
    CHECK_THROWS_AS((void)make_spl(d, r.interp), RoleGapError);
}
