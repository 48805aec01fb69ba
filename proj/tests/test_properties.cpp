#include "doctest.h"

#include "properties.hpp"

namespace {

void report(const std::vector<std::string>& failures) {
    for (const auto& f : failures) {
        CAPTURE(f);
        CHECK(f.empty());
    }
    CHECK(failures.empty());
}

}  // namespace

TEST_CASE("frame property: unmentioned actions change nothing") {
    report(testprops::check_frame_property(1000));
}

TEST_CASE("returned plans are possible, guard-clean, and goal-reaching") {
    report(testprops::check_plan_validity(1000));
}

TEST_CASE("temperatures stay on the 50-degree ladder") {
    report(testprops::check_temperature_domain(1000));
}

TEST_CASE("toasted and finished are monotone") {
    report(testprops::check_monotone_fluents(1000));
}

TEST_CASE("node and entity ids are contiguous from 1") {
    report(testprops::check_contiguous_ids(1000));
}

TEST_CASE("sentences are capitalized and period-terminated") {
    report(testprops::check_sentence_shape(1000));
}
