#include "doctest.h"

#include "instrgen/domain_io.hpp"

using namespace instrgen;

TEST_CASE("serialize/load round-trip is a fixpoint for the built-ins") {
    for (const char* name : {"toaster", "breadmaker", "combined"}) {
        CAPTURE(name);
        auto d = builtin_domain(name);
        std::string once = serialize_domain(d);
        auto reloaded = load_domain(once);
        CHECK(serialize_domain(reloaded) == once);
    }
}

TEST_CASE("reloaded models behave like the originals") {
    auto d = builtin_domain("toaster");
    auto reloaded = load_domain(serialize_domain(d));
    CHECK(reloaded.name == d.name);
    CHECK(reloaded.statics.size() == d.statics.size());
    CHECK(reloaded.preconds.size() == d.preconds.size());
    CHECK(reloaded.successors.size() == d.successors.size());
    CHECK(reloaded.goal.size() == d.goal.size());
    CHECK(reloaded.touch_guard_temp == d.touch_guard_temp);
    CHECK(reloaded.surface("bread_slot") == "toaster's bread slot");
    CHECK(reloaded.surface("bread_slice") == "bread slice");
}

TEST_CASE("comments and blank lines are ignored") {
    std::string text = serialize_domain(builtin_domain("toaster"));
    std::string commented = "; leading comment\n\n" + text + "\n; trailing\n";
    auto d = load_domain(commented);
    CHECK(serialize_domain(d) == text);
}

TEST_CASE("malformed input raises ParseError") {
    CHECK_THROWS_AS((void)load_domain("(domain"), ParseError);
    CHECK_THROWS_AS((void)load_domain("(unknown-form x)"), ParseError);
    CHECK_THROWS_AS((void)load_domain("(domain t) extra)"), ParseError);
    CHECK_THROWS_AS((void)load_domain("(goal (f) "), ParseError);
}

TEST_CASE("a minimal hand-written domain loads") {
    std::string text =
        "(domain mini)\n"
        "(static thing box)\n"
        "(init (shut box))\n"
        "(precond (kick ?x) (and (static (thing ?x))\n"
        "                        (not-holds (opened ?x))))\n"
        "(successor (opened ?x)\n"
        "  (when (action-is (kick ?x)))\n"
        "  (persist (holds (opened ?x))))\n"
        "(classify reader kick)\n"
        "(classify normal kick)\n"
        "(affects (kick ?x) (opened ?x))\n"
        "(role kick actee arg1)\n"
        "(lexeme box \"the old box\")\n"
        "(goal (opened box))\n";
    auto d = load_domain(text);
    CHECK(d.name == "mini");
    CHECK(d.statics.size() == 1);
    CHECK(d.init.size() == 1);
    CHECK(d.preconds.size() == 1);
    REQUIRE(d.successors.size() == 1);
    CHECK(d.successors[0].has_persistence);
    CHECK(d.is_reader("kick"));
    CHECK(d.is_normal("kick"));
    CHECK(d.surface("box") == "the old box");
    CHECK(d.goal.size() == 1);

    // And it round-trips.
    std::string once = serialize_domain(d);
    CHECK(serialize_domain(load_domain(once)) == once);
}
