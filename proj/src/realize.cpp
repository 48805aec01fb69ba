#include "instrgen/realize.hpp"

#include <cctype>
#include <map>

namespace instrgen {

namespace {

// Verb frames.  {actee}/{source}/{destination} are noun-phrase holes;
// frames without holes are intransitive.
const std::map<std::string, std::string>& frames() {
    static const std::map<std::string, std::string> f = {
        {"insert", "insert {actee} into {destination}"},
        {"attach", "attach {actee} to {destination}"},
        {"pour", "pour {actee} into {destination}"},
        {"press", "press {actee}"},
        {"open", "open {actee}"},
        {"close", "close {actee}"},
        {"touch", "touch {actee}"},
        {"remove", "take {actee} out of {source}"},
        {"slice", "cut {actee} from {source}"},
        {"pop_up", "pop up"},
        {"flash", "flash"},
    };
    return f;
}

std::string noun_phrase(const DomainModel& d, const Filler& f) {
    if (f.kind == Filler::Kind::Hearer) return "you";
    return "the " + d.surface(f.value);
}

void replace_hole(std::string& text, const std::string& hole,
                  const std::string& value) {
    auto pos = text.find(hole);
    if (pos != std::string::npos) text.replace(pos, hole.size(), value);
}

}  // namespace

std::string realize(const DomainModel& d, const SplNode& node) {
    auto it = frames().find(node.process);
    if (it == frames().end())
        throw RealizeError("no verb frame for process '" + node.process + "'");
    std::string phrase = it->second;

    const Filler* actor = nullptr;
    const Filler* duration = nullptr;
    std::string speechact = "imperative";
    for (const SlotFiller& sf : node.slots) {
        if (sf.slot == "actor") {
            actor = &sf.filler;
        } else if (sf.slot == "exhaustive-duration") {
            duration = &sf.filler;
        } else if (sf.slot == "tense") {
            // Tense is implied by the speech act in these frames.
        } else if (sf.slot == "speechact") {
            speechact = sf.filler.value;
        } else {
            replace_hole(phrase, "{" + sf.slot + "}", noun_phrase(d, sf.filler));
        }
    }
    if (phrase.find('{') != std::string::npos)
        throw RealizeError("unfilled hole in frame for '" + node.process +
                           "': " + phrase);

    std::string sentence;
    if (speechact == "assertion") {
        if (!actor) throw RealizeError("assertion without an actor");
        sentence = noun_phrase(d, *actor) + " will " + phrase;
    } else if (speechact == "neg-imperative") {
        sentence = "do not " + phrase;
    } else {
        sentence = phrase;
    }
    if (duration) sentence += " during " + noun_phrase(d, *duration);
    sentence += ".";
    sentence[0] = toupper(static_cast<unsigned char>(sentence[0]));
    return sentence;
}

std::vector<std::string> realize_plan(const DomainModel& d,
                                      const std::vector<SplNode>& nodes) {
    std::vector<std::string> out;
    out.reserve(nodes.size());
    for (const SplNode& n : nodes) out.push_back(realize(d, n));
    return out;
}

}  // namespace instrgen
