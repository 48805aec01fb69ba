#pragma once

#include <string>
#include <vector>

#include "instrgen/interpret.hpp"

namespace instrgen {

// A slot filler in a sentence-plan node.
struct Filler {
    enum class Kind { Hearer, Entity, Plain };
    Kind kind = Kind::Plain;
    int id = 0;           // Entity only
    std::string value;    // Entity: lexical symbol; Plain: literal token
};

struct SlotFiller {
    std::string slot;  // actor, actee, source, destination,
                       // exhaustive-duration, tense, speechact
    Filler filler;
};

// One sentence plan: a process with its slot fillers in emission order.
struct SplNode {
    int id = 0;
    std::string process;
    std::vector<SlotFiller> slots;
};

struct RoleGapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// True iff the last action of `prefix` newly exposes a physical object or
// raw material, or is performed by an indicator (a salient state change a
// reader would notice).
bool caused_salient_change(const DomainModel& d, const Situation& prefix);

// Selects which interpreted entries to mention and builds their sentence
// plans.  Mentions every reader action except get_burned; a device action
// is mentioned only when it closes a collection (two consecutive device
// entries followed by a reader entry, with a salient change at the second),
// in which case the second device entry and the reader entry are emitted.
std::vector<SplNode> make_spl(const DomainModel& d, const Interpretation& in);

// Serializes nodes in the archival setq format; byte-exact contract.
std::string write_spl(const std::vector<SplNode>& nodes);

// Parses write_spl output back into nodes (write_spl is a fixpoint over
// parse_spl).
std::vector<SplNode> parse_spl(const std::string& text);

}  // namespace instrgen
