// Shared helpers and golden expectations for the test suites.
#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "instrgen/pipeline.hpp"

namespace testsupport {

using instrgen::Action;
using instrgen::Plan;
using instrgen::Term;

inline Term S(const std::string& s) { return Term::sym(s); }

inline Action A(const std::string& name, std::vector<Term> args = {}) {
    return Action{name, std::move(args)};
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline std::string golden_path(const std::string& name) {
    return std::string(GOLDEN_DIR) + "/" + name;
}

// Renders a plan one action per line, for readable mismatch reports.
inline std::string plan_text(const Plan& p) {
    std::string out;
    for (const auto& a : p) out += instrgen::to_string(a) + "\n";
    return out;
}

// ---- golden plans --------------------------------------------------------

inline Plan golden_toaster_plan() {
    Plan p = {A("insert", {S("bread_slice"), S("bread_slot")}),
              A("press", {S("on_lever")})};
    for (int i = 0; i < 4; ++i) p.push_back(A("raise_temp", {S("bread_slot")}));
    for (int i = 0; i < 4; ++i) p.push_back(A("raise_temp", {S("bread_slice")}));
    p.push_back(A("pop_up"));
    p.push_back(A("remove", {S("bread_slice"), S("bread_slot")}));
    return p;
}

// Shared head of the breadmaker and combined plans: mix, bake, empty the
// machine.
inline Plan golden_baking_prefix(bool combined) {
    Plan p = {A("attach", {S("kneading_blade"), S("baking_pan")}),
              A("pour", {S("water"), S("baking_pan_interior")}),
              A("pour", {S("flour"), S("baking_pan_interior")}),
              A("pour", {S("yeast"), S("baking_pan_interior")}),
              A("open", {S("lid")}),
              A("insert", {S("baking_pan"), S("main_body_interior")}),
              A("close", {S("lid")}),
              A("press", {S("breadmaker_on_button")}),
              A("raise_temp", {S("main_body")}),
              A("raise_temp", {S("main_body")}),
              A("steamify", {S("main_body")}),
              A("raise_temp", {S("main_body")}),
              A("raise_temp", {S("main_body")})};
    for (int i = 0; i < 4; ++i) p.push_back(A("raise_temp", {S("steam_vent")}));
    if (!combined) {
        p.push_back(A("raise_temp", {S("baking_pan")}));
        p.push_back(A("raise_temp", {S("baking_pan")}));
        p.push_back(A("steamify", {S("baking_pan")}));
        p.push_back(A("raise_temp", {S("baking_pan")}));
        p.push_back(A("raise_temp", {S("baking_pan")}));
    }
    p.push_back(A("flash", {S("complete_light")}));
    p.push_back(A("open", {S("lid")}));
    p.push_back(A("remove", {S("baking_pan"), S("main_body_interior")}));
    p.push_back(A("remove", {S("bread"), S("baking_pan_interior")}));
    return p;
}

inline Plan golden_breadmaker_plan() { return golden_baking_prefix(false); }

inline Plan golden_combined_plan() {
    Plan p = golden_baking_prefix(true);
    p.push_back(A("slice", {S("bread_slice"), S("bread")}));
    p.push_back(A("insert", {S("bread_slice"), S("bread_slot")}));
    p.push_back(A("press", {S("on_lever")}));
    for (int i = 0; i < 4; ++i) p.push_back(A("raise_temp", {S("bread_slot")}));
    for (int i = 0; i < 4; ++i) p.push_back(A("raise_temp", {S("bread_slice")}));
    p.push_back(A("pop_up"));
    p.push_back(A("remove", {S("bread_slice"), S("bread_slot")}));
    return p;
}

// ---- golden injury points: (index, touched object) -----------------------

inline std::vector<std::pair<int, std::string>> golden_toaster_points() {
    std::vector<std::pair<int, std::string>> out;
    for (int i = 3; i <= 10; ++i) out.emplace_back(i, "bread_slot");
    return out;
}

inline std::vector<std::pair<int, std::string>> golden_breadmaker_points() {
    std::vector<std::pair<int, std::string>> out;
    for (int i = 10; i <= 14; ++i) out.emplace_back(i, "main_body");
    for (int i = 15; i <= 22; ++i) out.emplace_back(i, "steam_vent");
    return out;
}

inline std::vector<std::pair<int, std::string>> golden_combined_points() {
    std::vector<std::pair<int, std::string>> out;
    for (int i = 10; i <= 14; ++i) out.emplace_back(i, "main_body");
    for (int i = 15; i <= 17; ++i) out.emplace_back(i, "steam_vent");
    for (int i = 26; i <= 32; ++i) out.emplace_back(i, "bread_slot");
    return out;
}

// ---- golden interpretations ----------------------------------------------

inline std::vector<std::pair<int, Action>> golden_toaster_entries() {
    std::vector<std::pair<int, Action>> e;
    e.emplace_back(1, A("insert", {S("bread_slice"), S("bread_slot")}));
    e.emplace_back(2, A("press", {S("on_lever")}));
    e.emplace_back(3, A("raise_temp", {S("bread_slot")}));
    e.emplace_back(3, A("touch", {S("bread_slot")}));
    e.emplace_back(3, A("get_burned"));
    for (int i = 0; i < 3; ++i)
        e.emplace_back(3, A("raise_temp", {S("bread_slot")}));
    for (int i = 0; i < 4; ++i)
        e.emplace_back(3, A("raise_temp", {S("bread_slice")}));
    e.emplace_back(4, A("pop_up"));
    e.emplace_back(5, A("remove", {S("bread_slice"), S("bread_slot")}));
    return e;
}

// ---- golden sentences ----------------------------------------------------

inline std::vector<std::string> golden_toaster_sentences() {
    return {
        "Insert the bread slice into the toaster's bread slot.",
        "Press the ON lever.",
        "Do not touch the toaster's bread slot during the heating period.",
        "The bread slice will pop up.",
        "Take the bread slice out of the toaster's bread slot.",
    };
}

inline std::vector<std::string> golden_breadmaker_sentences() {
    return {
        "Attach the kneading blade to the baking pan.",
        "Pour the water into the baking pan.",
        "Pour the flour into the baking pan.",
        "Pour the yeast into the baking pan.",
        "Open the lid.",
        "Insert the baking pan into the main body.",
        "Close the lid.",
        "Press the ON button.",
        "Do not touch the main body during the heating period.",
        "Do not touch the steam vent during the heating period.",
        "The \"complete\" light will flash.",
        "Open the lid.",
        "Take the baking pan out of the main body.",
        "Take the bread out of the baking pan.",
    };
}

inline std::vector<std::string> golden_combined_sentences() {
    std::vector<std::string> out = golden_breadmaker_sentences();
    std::vector<std::string> tail = {
        "Cut the bread slice from the bread.",
        "Insert the bread slice into the toaster's bread slot.",
        "Press the ON lever.",
        "Do not touch the toaster's bread slot during the heating period.",
        "The bread slice will pop up.",
        "Take the bread slice out of the toaster's bread slot.",
    };
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
}

}  // namespace testsupport
