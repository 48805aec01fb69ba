#include "instrgen/domain.hpp"

// Built-in device-environment models.  Rule order and body conjunct order
// are deliberate throughout: the planner commits to the first possible
// action, and fluent bindings enumerate most-recently-affected-first, so
// reordering clauses changes the plans and the generated text.

namespace instrgen {

namespace {

Term S(const char* s) { return Term::sym(s); }
Term V(const char* s) { return Term::var(s); }
Term N(long long v) { return Term::integer(v); }

Atom atom(const char* name, std::vector<Term> args = {}) {
    return Atom{name, std::move(args)};
}

void add_static(DomainModel& d, const char* name, std::vector<Term> args) {
    d.statics.push_back(atom(name, std::move(args)));
}

void add_precond(DomainModel& d, Action pattern, Condition cond,
                 bool guard = false) {
    d.preconds.push_back({std::move(pattern), std::move(cond), guard});
}

void add_successor(DomainModel& d, Fluent pattern,
                   std::vector<Condition> disjuncts, bool persistence) {
    d.successors.push_back(
        {std::move(pattern), std::move(disjuncts), persistence});
}

void add_role(DomainModel& d, const char* action, const char* slot, int pos) {
    d.roles.push_back({action, slot, pos, ""});
}

// ---- Shared fluent rules -------------------------------------------------

// Fluent of arity 0 or 1 that is set by `cause` and never unset.
void add_monotone(DomainModel& d, const char* fluent, int arity,
                  Action cause) {
    Fluent pat = arity == 0 ? atom(fluent) : atom(fluent, {V("x")});
    Fluent same = pat;
    add_successor(d, pat, {c_action_is(std::move(cause)), c_holds(same)},
                  true);
}

// toasted(x) holds once x's temperature has ever reached 200 or more.
void add_toasted(DomainModel& d) {
    add_successor(d, atom("toasted", {V("x")}),
                  {c_and({c_holds_now(atom("temperature", {V("x"), V("t")})),
                          c_cmp(V("t"), ">=", N(200))}),
                   c_holds(atom("toasted", {V("x")}))},
                  false);
}

void add_get_burned_rule(DomainModel& d) {
    add_precond(d, atom("get_burned"),
                c_and({c_holds(atom("touching", {V("x")})),
                       c_holds(atom("temperature", {V("x"), V("t")})),
                       c_cmp(V("t"), ">=", N(70))}));
}

// ---- Toaster -------------------------------------------------------------

DomainModel build_toaster() {
    DomainModel d;
    d.name = "toaster";

    add_static(d, "physical_object", {S("bread_slot")});
    add_static(d, "physical_object", {S("on_lever")});
    add_static(d, "three_d_location", {S("bread_slot")});
    add_static(d, "fits", {S("bread_slice"), S("bread_slot")});
    add_static(d, "lever", {S("on_lever")});
    add_static(d, "raw_material", {S("bread_slice")});

    d.init = {atom("temperature", {S("bread_slice"), N(20)}),
              atom("temperature", {S("bread_slot"), N(20)}),
              atom("exposed", {S("bread_slot")}),
              atom("exposed", {S("bread_slice")})};

    // Preconditions, in search order.
    add_precond(d, atom("insert", {V("x"), V("y")}),
                c_and({c_static(atom("fits", {V("x"), V("y")})),
                       c_static(atom("three_d_location", {V("y")})),
                       c_holds(atom("exposed", {V("y")})),
                       c_not_holds(atom("contains", {V("y"), V("x")})),
                       c_not_holds(atom("removed", {V("x"), V("y")}))}),
                true);
    add_precond(d, atom("remove", {V("x"), V("y")}),
                c_and({c_static(atom("three_d_location", {V("y")})),
                       c_holds(atom("contains", {V("y"), V("x")})),
                       c_holds(atom("exposed", {V("x")}))}));
    add_precond(d, atom("press", {V("x")}),
                c_and({c_static(atom("lever", {V("x")})),
                       c_not_holds(atom("pressed", {V("x")}))}),
                true);
    // The final conjunct keeps the planner from heating an empty toaster.
    add_precond(d, atom("raise_temp", {V("x")}),
                c_and({c_or({c_eq(V("x"), S("bread_slot")),
                             c_holds(atom("contains", {S("bread_slot"), V("x")}))}),
                       c_holds(atom("temperature", {V("x"), V("t")})),
                       c_cmp(V("t"), "<", N(200)),
                       c_holds(atom("pressed", {S("on_lever")})),
                       c_holds(atom("contains", {S("bread_slot"), V("z")}))}),
                true);
    add_precond(d, atom("pop_up"),
                c_and({c_holds(atom("temperature", {S("bread_slot"), V("t")})),
                       c_cmp(V("t"), ">=", N(200))}));
    add_get_burned_rule(d);
    add_precond(d, atom("touch", {V("x")}),
                c_and({c_static(atom("physical_object", {V("x")})),
                       c_holds(atom("exposed", {V("x")})),
                       c_holds(atom("temperature", {V("x"), V("t")})),
                       c_cmp(V("t"), ">", N(20))}),
                true);

    // Successor-state rules.
    add_successor(d, atom("contains", {V("y"), V("x")}),
                  {c_action_is(atom("insert", {V("x"), V("y")})),
                   c_and({c_holds(atom("contains", {V("y"), V("x")})),
                          c_action_is_not(atom("remove", {V("x"), V("y")}))})},
                  true);
    add_successor(d, atom("removed", {V("x"), V("y")}),
                  {c_action_is(atom("remove", {V("x"), V("y")})),
                   c_holds(atom("removed", {V("x"), V("y")}))},
                  true);
    add_successor(d, atom("pressed", {V("x")}),
                  {c_action_is(atom("press", {V("x")})),
                   c_and({c_holds(atom("pressed", {V("x")})),
                          c_action_is_not(atom("pop_up"))})},
                  true);
    add_successor(
        d, atom("exposed", {V("x")}),
        {c_eq(V("x"), S("bread_slot")),
         c_and({c_action_is(atom("pop_up")),
                c_holds(atom("contains", {S("bread_slot"), V("x")}))}),
         c_and({c_holds(atom("exposed", {V("x")})),
                c_action_is_not(atom("press", {S("on_lever")}))})},
        true);
    add_successor(
        d, atom("temperature", {V("x"), V("t2")}),
        {c_and({c_action_is(atom("raise_temp", {V("x")})),
                c_holds(atom("temperature", {V("x"), V("t1")})),
                c_cmp(V("t2"), "=", V("t1"), 50)}),
         c_and({c_action_is(atom("pop_up")),
                c_holds(atom("temperature", {V("x"), V("t1")})),
                c_eq(V("t2"), N(20))}),
         c_and({c_holds(atom("temperature", {V("x"), V("t2")})),
                c_action_is_not(atom("raise_temp", {V("x")})),
                c_action_is_not(atom("pop_up"))})},
        true);
    add_monotone(d, "burned", 0, atom("get_burned"));
    add_monotone(d, "touching", 1, atom("touch", {V("x")}));
    add_toasted(d);

    d.reader_actions = {"insert", "remove", "press", "touch", "get_burned"};
    d.device_actions = {"raise_temp", "pop_up"};
    d.normal_actions = {"insert", "remove", "press", "raise_temp", "pop_up"};
    d.injury_actions = {"touch", "get_burned"};

    d.affects = {
        {atom("insert", {V("x"), V("y")}), atom("contains", {V("y"), V("x")})},
        {atom("remove", {V("x"), V("y")}), atom("removed", {V("x"), V("y")})},
        {atom("remove", {V("x"), V("y")}), atom("contains", {V("y"), V("x")})},
        {atom("press", {V("x")}), atom("pressed", {V("x")})},
        {atom("press", {S("on_lever")}), atom("exposed", {V("x")})},
        {atom("get_burned"), atom("burned")},
        {atom("touch", {V("x")}), atom("touching", {V("x")})},
    };

    add_role(d, "insert", "actee", 0);
    add_role(d, "insert", "destination", 1);
    add_role(d, "remove", "actee", 0);
    add_role(d, "remove", "source", 1);
    add_role(d, "press", "actee", 0);
    add_role(d, "touch", "actee", 0);
    add_role(d, "raise_temp", "actee", 0);

    d.actor_queries = {
        {"pop_up", atom("contains", {S("bread_slot"), V("actor")}), "actor"}};
    d.collections = {{"heating_period", "raise_temp", {"raise_temp"}}};
    d.touch_guard_temp = 20;

    d.lexicon = {{"bread_slot", "toaster's bread slot"},
                 {"on_lever", "ON lever"},
                 {"heating_period", "heating period"}};

    d.goal = {atom("toasted", {S("bread_slice")}),
              atom("removed", {S("bread_slice"), V("x")})};
    return d;
}

// ---- Breadmaker / combined -----------------------------------------------

// The breadmaker and the combined model share most of their structure; the
// combined model layers the toaster's devices on top and replaces the
// finished loaf's handling with slicing and toasting.
DomainModel build_breadmaker_like(bool combined) {
    DomainModel d;
    d.name = combined ? "combined" : "breadmaker";

    add_static(d, "physical_object", {S("main_body")});
    add_static(d, "physical_object", {S("steam_vent")});
    add_static(d, "physical_object", {S("baking_pan")});
    add_static(d, "physical_object", {S("kneading_blade")});
    add_static(d, "physical_object", {S("lid")});
    add_static(d, "physical_object", {S("bread")});
    if (combined) {
        add_static(d, "physical_object", {S("bread_slot")});
        add_static(d, "physical_object", {S("on_lever")});
    }
    add_static(d, "three_d_location", {S("main_body_interior")});
    add_static(d, "three_d_location", {S("baking_pan_interior")});
    if (combined) add_static(d, "three_d_location", {S("bread_slot")});
    add_static(d, "fits", {S("kneading_blade"), S("baking_pan")});
    add_static(d, "fits", {S("baking_pan"), S("main_body_interior")});
    if (combined) add_static(d, "fits", {S("bread_slice"), S("bread_slot")});
    add_static(d, "button", {S("breadmaker_on_button")});
    if (combined) add_static(d, "lever", {S("on_lever")});
    add_static(d, "openable", {S("lid")});
    add_static(d, "raw_material", {S("water")});
    add_static(d, "raw_material", {S("flour")});
    add_static(d, "raw_material", {S("yeast")});
    if (combined) add_static(d, "raw_material", {S("bread_slice")});
    add_static(d, "vents", {S("steam_vent"), S("main_body")});
    add_static(d, "interior_of", {S("baking_pan_interior"), S("baking_pan")});
    add_static(d, "interior_of", {S("main_body_interior"), S("main_body")});
    add_static(d, "indicator", {S("complete_light")});

    d.init = {atom("temperature", {S("main_body"), N(20)}),
              atom("temperature", {S("steam_vent"), N(20)}),
              atom("temperature", {S("baking_pan"), N(20)}),
              atom("exposed", {S("main_body")}),
              atom("exposed", {S("steam_vent")}),
              atom("exposed", {S("baking_pan")}),
              atom("exposed", {S("baking_pan_interior")})};
    if (combined) {
        d.init.push_back(atom("temperature", {S("bread_slot"), N(20)}));
        d.init.push_back(atom("exposed", {S("bread_slot")}));
    }

    // Preconditions, in search order.
    add_precond(d, atom("attach", {V("x"), V("y")}),
                c_and({c_static(atom("physical_object", {V("x")})),
                       c_static(atom("physical_object", {V("y")})),
                       c_static(atom("fits", {V("x"), V("y")})),
                       c_holds(atom("exposed", {V("y")})),
                       c_not_holds(atom("attached", {V("x"), V("y")}))}),
                true);
    add_precond(d, atom("pour", {S("water"), S("baking_pan_interior")}),
                c_and({c_static(atom("raw_material", {S("water")})),
                       c_static(atom("three_d_location",
                                     {S("baking_pan_interior")})),
                       c_holds(atom("exposed", {S("baking_pan_interior")})),
                       c_holds(atom("attached",
                                    {S("kneading_blade"), S("baking_pan")})),
                       c_not_holds(atom("contains", {S("baking_pan_interior"),
                                                     S("water")}))}),
                true);
    add_precond(d, atom("pour", {S("flour"), S("baking_pan_interior")}),
                c_and({c_static(atom("raw_material", {S("flour")})),
                       c_static(atom("three_d_location",
                                     {S("baking_pan_interior")})),
                       c_holds(atom("exposed", {S("baking_pan_interior")})),
                       c_contains_star(S("baking_pan"), S("water")),
                       c_not_holds(atom("contains", {S("baking_pan_interior"),
                                                     S("flour")}))}),
                true);
    add_precond(d, atom("pour", {S("yeast"), S("baking_pan_interior")}),
                c_and({c_static(atom("raw_material", {S("yeast")})),
                       c_static(atom("three_d_location",
                                     {S("baking_pan_interior")})),
                       c_holds(atom("exposed", {S("baking_pan_interior")})),
                       c_contains_star(S("baking_pan"), S("flour")),
                       c_not_holds(atom("contains", {S("baking_pan_interior"),
                                                     S("yeast")}))}),
                true);
    add_precond(d, atom("open", {V("x")}),
                c_and({c_static(atom("openable", {V("x")})),
                       c_not_holds(atom("opened", {V("x")})),
                       c_not_holds(atom("pressed", {S("breadmaker_on_button")}))}),
                true);
    add_precond(d, atom("insert", {V("x"), V("y")}),
                c_and({c_static(atom("fits", {V("x"), V("y")})),
                       c_static(atom("three_d_location", {V("y")})),
                       c_holds(atom("exposed", {V("y")})),
                       c_holds(atom("exposed", {V("x")})),
                       c_not_holds(atom("contains", {V("y"), V("x")})),
                       c_not_holds(atom("removed", {V("x"), V("y")}))}),
                true);
    add_precond(d, atom("remove", {V("x"), V("y")}),
                c_and({c_static(atom("three_d_location", {V("y")})),
                       c_holds(atom("contains", {V("y"), V("x")})),
                       c_holds(atom("exposed", {V("x")}))}));
    add_precond(d, atom("close", {V("x")}),
                c_and({c_static(atom("openable", {V("x")})),
                       c_holds(atom("opened", {V("x")})),
                       c_holds(atom("contains",
                                    {S("main_body_interior"), S("baking_pan")}))}),
                true);
    if (combined) {
        add_precond(d, atom("slice", {S("bread_slice"), S("bread")}),
                    c_and({c_holds(atom("exposed", {S("bread")})),
                           c_not_holds(atom("sliced", {S("bread")}))}),
                    true);
    }
    add_precond(d, atom("press", {V("x")}),
                c_and({c_static(atom("button", {V("x")})),
                       c_not_holds(atom("pressed", {V("x")})),
                       c_contains_star(S("main_body"), S("baking_pan"))}),
                true);
    if (combined) {
        add_precond(d, atom("press", {V("x")}),
                    c_and({c_static(atom("lever", {V("x")})),
                           c_not_holds(atom("pressed", {V("x")})),
                           c_holds(atom("contains", {S("bread_slot"), V("z")}))}),
                    true);
    }
    add_precond(d, atom("steamify", {V("x")}),
                c_and({c_holds(atom("temperature", {V("x"), V("t")})),
                       c_cmp(V("t"), ">=", N(100)),
                       c_contains_star(V("x"), S("water")),
                       c_not_holds(atom("contains", {V("x"), S("steam")}))}),
                true);
    {
        // Heatable things: the main body; the steam vent and (standalone
        // only) the baking pan once steam circulates.
        std::vector<Condition> heatable = {
            c_eq(V("x"), S("main_body")),
            c_and({c_static(atom("vents", {V("x"), S("main_body")})),
                   c_holds(atom("contains", {S("main_body"), S("steam")}))})};
        if (!combined)
            heatable.push_back(
                c_and({c_eq(V("x"), S("baking_pan")),
                       c_holds(atom("contains", {S("main_body"), S("steam")}))}));
        add_precond(d, atom("raise_temp", {V("x")}),
                    c_and({c_or(std::move(heatable)),
                           c_holds(atom("temperature", {V("x"), V("t")})),
                           c_cmp(V("t"), "<", N(200)),
                           c_holds(atom("pressed", {S("breadmaker_on_button")}))}));
    }
    if (combined) {
        add_precond(d, atom("raise_temp", {V("x")}),
                    c_and({c_or({c_eq(V("x"), S("bread_slot")),
                                 c_holds(atom("contains",
                                              {S("bread_slot"), V("x")}))}),
                           c_holds(atom("temperature", {V("x"), V("t")})),
                           c_cmp(V("t"), "<", N(200)),
                           c_holds(atom("pressed", {S("on_lever")})),
                           c_holds(atom("contains", {S("bread_slot"), V("z")}))}),
                    true);
    }
    {
        // The completion light flashes when baking is done; in the combined
        // model the vent temperature is the observable proxy.
        const char* probe = combined ? "steam_vent" : "baking_pan";
        add_precond(d, atom("flash", {V("x")}),
                    c_and({c_eq(V("x"), S("complete_light")),
                           c_holds(atom("temperature", {S(probe), V("t")})),
                           c_cmp(V("t"), ">=", N(200)),
                           c_not_holds(atom("finished", {S("bread")}))}),
                    true);
    }
    if (combined) {
        add_precond(d, atom("pop_up"),
                    c_and({c_holds(atom("temperature", {S("bread_slot"), V("t")})),
                           c_cmp(V("t"), ">=", N(200))}));
    }
    add_get_burned_rule(d);
    add_precond(d, atom("touch", {V("x")}),
                c_and({c_holds(atom("temperature", {V("x"), V("t")})),
                       c_cmp(V("t"), ">", N(70)),
                       c_static(atom("physical_object", {V("x")})),
                       c_holds(atom("exposed", {V("x")}))}),
                true);

    // Successor-state rules.
    {
        std::vector<Condition> dj = {
            c_action_is(atom("insert", {V("x"), V("y")})),
            c_action_is(atom("pour", {V("x"), V("y")})),
            c_and({c_action_is(atom("steamify", {V("y")})),
                   c_eq(V("x"), S("steam"))}),
            c_and({c_action_is(atom("flash", {S("complete_light")})),
                   c_eq(V("x"), S("bread")),
                   c_eq(V("y"), S("baking_pan_interior"))}),
            c_and({c_holds(atom("contains", {V("y"), V("x")})),
                   c_action_is_not(atom("remove", {V("x"), V("y")}))})};
        add_successor(d, atom("contains", {V("y"), V("x")}), std::move(dj),
                      true);
    }
    add_successor(d, atom("attached", {V("x"), V("y")}),
                  {c_action_is(atom("attach", {V("x"), V("y")})),
                   c_and({c_holds(atom("attached", {V("x"), V("y")})),
                          c_action_is_not(atom("remove", {V("x"), V("y")}))})},
                  true);
    add_successor(d, atom("removed", {V("x"), V("y")}),
                  {c_action_is(atom("remove", {V("x"), V("y")})),
                   c_holds(atom("removed", {V("x"), V("y")}))},
                  true);
    add_successor(d, atom("opened", {V("x")}),
                  {c_action_is(atom("open", {V("x")})),
                   c_and({c_holds(atom("opened", {V("x")})),
                          c_action_is_not(atom("close", {V("x")}))})},
                  true);
    {
        std::vector<Condition> persist = {
            c_holds(atom("pressed", {V("x")})),
            c_not(c_and({c_action_is(atom("flash", {S("complete_light")})),
                         c_eq(V("x"), S("breadmaker_on_button"))}))};
        if (combined) persist.push_back(c_action_is_not(atom("pop_up")));
        add_successor(d, atom("pressed", {V("x")}),
                      {c_action_is(atom("press", {V("x")})),
                       c_and(std::move(persist))},
                      true);
    }
    {
        std::vector<Condition> dj;
        if (combined) {
            dj.push_back(c_eq(V("x"), S("bread_slot")));
            dj.push_back(c_and({c_action_is(atom("pop_up")),
                                c_holds(atom("contains",
                                             {S("bread_slot"), V("x")}))}));
        }
        dj.push_back(c_and({c_action_is(atom("open", {S("lid")})),
                            c_eq(V("x"), S("main_body_interior"))}));
        dj.push_back(c_and({c_action_is(atom("open", {S("lid")})),
                            c_contains_star(S("main_body"), V("x")),
                            c_static(atom("physical_object", {V("x")}))}));
        if (combined)
            dj.push_back(c_and({c_action_is(atom("slice", {V("x"), V("w")}))}));
        std::vector<Condition> persist = {
            c_holds(atom("exposed", {V("x")})),
            c_not(c_and({c_action_is(atom("close", {S("lid")})),
                         c_or({c_eq(V("x"), S("main_body_interior")),
                               c_contains_star(S("main_body"), V("x"))})}))};
        if (combined)
            persist.push_back(c_action_is_not(atom("press", {S("on_lever")})));
        dj.push_back(c_and(std::move(persist)));
        add_successor(d, atom("exposed", {V("x")}), std::move(dj), true);
    }
    {
        std::vector<Condition> dj = {
            c_and({c_action_is(atom("raise_temp", {V("x")})),
                   c_holds(atom("temperature", {V("x"), V("t1")})),
                   c_cmp(V("t2"), "=", V("t1"), 50)}),
            c_and({c_action_is(atom("flash", {S("complete_light")})),
                   c_holds(atom("temperature", {V("x"), V("t1")})),
                   c_eq(V("t2"), N(20))})};
        if (combined)
            dj.push_back(c_and({c_action_is(atom("pop_up")),
                                c_holds(atom("temperature", {V("x"), V("t1")})),
                                c_eq(V("t2"), N(20))}));
        dj.push_back(c_and({c_action_is(atom("steamify", {V("w")})),
                            c_eq(V("x"), S("steam")), c_eq(V("t2"), N(100))}));
        if (combined)
            dj.push_back(c_and({c_action_is(atom("slice", {V("x"), V("w")})),
                                c_eq(V("t2"), N(20))}));
        std::vector<Condition> persist = {
            c_holds(atom("temperature", {V("x"), V("t2")})),
            c_action_is_not(atom("raise_temp", {V("x")})),
            c_action_is_not(atom("flash", {S("complete_light")})),
            c_not(c_and({c_action_is(atom("steamify", {V("w")})),
                         c_eq(V("x"), S("steam"))}))};
        if (combined) {
            persist.push_back(c_action_is_not(atom("pop_up")));
            persist.push_back(c_action_is_not(atom("slice", {V("x"), V("w")})));
        }
        dj.push_back(c_and(std::move(persist)));
        add_successor(d, atom("temperature", {V("x"), V("t2")}), std::move(dj),
                      true);
    }
    add_monotone(d, "burned", 0, atom("get_burned"));
    add_monotone(d, "touching", 1, atom("touch", {V("x")}));
    add_successor(d, atom("finished", {V("x")}),
                  {c_and({c_action_is(atom("flash", {S("complete_light")})),
                          c_eq(V("x"), S("bread"))}),
                   c_holds(atom("finished", {V("x")}))},
                  true);
    add_successor(d, atom("flashing", {V("x")}),
                  {c_action_is(atom("flash", {V("x")})),
                   c_holds(atom("flashing", {V("x")}))},
                  true);
    if (combined) {
        add_successor(d, atom("sliced", {V("x")}),
                      {c_action_is(atom("slice", {V("w"), V("x")})),
                       c_holds(atom("sliced", {V("x")}))},
                      true);
        add_toasted(d);
    }

    d.reader_actions = {"insert", "attach", "pour",  "remove",    "press",
                        "open",   "close",  "touch", "get_burned"};
    d.device_actions = {"raise_temp", "steamify", "flash"};
    d.normal_actions = {"attach", "pour",  "open",     "insert",
                        "remove", "close", "press",    "steamify",
                        "raise_temp", "flash"};
    if (combined) {
        d.reader_actions.push_back("slice");
        d.device_actions.push_back("pop_up");
        d.normal_actions.push_back("slice");
        d.normal_actions.push_back("pop_up");
    }
    d.injury_actions = {"touch", "get_burned"};

    d.affects = {
        {atom("insert", {V("x"), V("y")}), atom("contains", {V("y"), V("x")})},
        {atom("pour", {V("x"), V("y")}), atom("contains", {V("y"), V("x")})},
        {atom("remove", {V("x"), V("y")}), atom("removed", {V("x"), V("y")})},
        {atom("remove", {V("x"), V("y")}), atom("contains", {V("y"), V("x")})},
        {atom("attach", {V("x"), V("y")}), atom("attached", {V("x"), V("y")})},
        {atom("open", {V("x")}), atom("opened", {V("x")})},
        {atom("close", {V("x")}), atom("opened", {V("x")})},
        {atom("press", {V("x")}), atom("pressed", {V("x")})},
        {atom("get_burned"), atom("burned")},
        {atom("touch", {V("x")}), atom("touching", {V("x")})},
    };
    if (combined) {
        d.affects.push_back(
            {atom("press", {S("on_lever")}), atom("exposed", {V("x")})});
        d.affects.push_back(
            {atom("slice", {V("x"), V("y")}), atom("sliced", {V("y")})});
    }

    add_role(d, "insert", "actee", 0);
    add_role(d, "insert", "destination", 1);
    add_role(d, "attach", "actee", 0);
    add_role(d, "attach", "destination", 1);
    add_role(d, "pour", "actee", 0);
    add_role(d, "pour", "destination", 1);
    add_role(d, "remove", "actee", 0);
    add_role(d, "remove", "source", 1);
    add_role(d, "press", "actee", 0);
    add_role(d, "open", "actee", 0);
    add_role(d, "close", "actee", 0);
    add_role(d, "touch", "actee", 0);
    add_role(d, "raise_temp", "actee", 0);
    add_role(d, "flash", "actor", 0);
    if (combined) {
        add_role(d, "slice", "actee", 0);
        add_role(d, "slice", "source", 1);
        d.actor_queries = {{"pop_up",
                            atom("contains", {S("bread_slot"), V("actor")}),
                            "actor"}};
    }

    d.collections = {{"heating_period", "raise_temp", {"raise_temp", "steamify"}}};
    d.touch_guard_temp = 70;

    d.lexicon = {{"breadmaker_on_button", "ON button"},
                 {"main_body_interior", "main body"},
                 {"baking_pan_interior", "baking pan"},
                 {"complete_light", "\"complete\" light"},
                 {"heating_period", "heating period"}};
    if (combined) {
        d.lexicon.push_back({"bread_slot", "toaster's bread slot"});
        d.lexicon.push_back({"on_lever", "ON lever"});
    }

    if (combined)
        d.goal = {atom("toasted", {S("bread_slice")}),
                  atom("removed", {S("bread_slice"), V("x")})};
    else
        d.goal = {atom("finished", {S("bread")}),
                  atom("removed", {S("bread"), S("baking_pan_interior")})};
    return d;
}

}  // namespace

DomainModel builtin_domain(const std::string& name) {
    if (name == "toaster") return build_toaster();
    if (name == "breadmaker") return build_breadmaker_like(false);
    if (name == "combined") return build_breadmaker_like(true);
    throw std::invalid_argument("unknown built-in domain: " + name);
}

}  // namespace instrgen
