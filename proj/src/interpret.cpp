#include "instrgen/interpret.hpp"

#include <algorithm>

namespace instrgen {

namespace {

bool is_member(const CollectionSpec& c, const std::string& action) {
    return std::find(c.members.begin(), c.members.end(), action) !=
           c.members.end();
}

}  // namespace

IndexedPlan retained_injuries(const IndexedPlan& group) {
    IndexedPlan out;
    std::vector<std::vector<Action>> seen;
    for (const PlanEntry& e : group) {
        std::vector<Action> injuries(e.actions.begin() + 1, e.actions.end());
        PlanEntry kept{e.index, {e.actions.front()}};
        if (!injuries.empty() &&
            std::find(seen.begin(), seen.end(), injuries) == seen.end()) {
            seen.push_back(injuries);
            kept.actions.insert(kept.actions.end(), injuries.begin(),
                                injuries.end());
        }
        out.push_back(std::move(kept));
    }
    return out;
}

Interpretation make_interpretations(const DomainModel& d,
                                    const IndexedPlan& merged) {
    IndexedPlan entries = merged;
    Interpretation out;

    // Scan position: groups are only formed at or after it; once a group is
    // closed, scanning resumes after it.
    size_t scan_from = 0;
    while (true) {
        // Find the next trigger entry together with its collection.
        size_t start = entries.size();
        const CollectionSpec* spec = nullptr;
        for (size_t i = scan_from; i < entries.size() && !spec; ++i) {
            for (const CollectionSpec& c : d.collections) {
                if (entries[i].actions.front().name == c.trigger) {
                    start = i;
                    spec = &c;
                    break;
                }
            }
        }
        if (!spec) break;

        // Extend the run over consecutive collection members.
        size_t end = start;
        while (end + 1 < entries.size() &&
               is_member(*spec, entries[end + 1].actions.front().name))
            ++end;

        // A group must span at least three plan indices beyond its start;
        // the threshold compares against the index following the run.
        int start_index = entries[start].index;
        int boundary = end + 1 < entries.size() ? entries[end + 1].index
                                                : entries[end].index;
        if (boundary <= start_index + 2) {
            scan_from = start + 1;  // too short; try the next trigger
            continue;
        }

        out.patterns.emplace_back(start_index, spec->label);

        IndexedPlan group(entries.begin() + start, entries.begin() + end + 1);
        for (PlanEntry& e : group) e.index = start_index;
        group = retained_injuries(group);
        std::copy(group.begin(), group.end(), entries.begin() + start);

        int next = start_index;
        for (size_t i = end + 1; i < entries.size(); ++i)
            entries[i].index = ++next;
        scan_from = end + 1;
    }

    for (const PlanEntry& e : entries)
        for (const Action& a : e.actions) out.entries.emplace_back(e.index, a);
    return out;
}

}  // namespace instrgen
