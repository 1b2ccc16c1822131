#include "uw/genealogy.hpp"

#include <algorithm>
#include <ostream>

namespace uw {

const char* fertility_name(FertilityClass f) {
    switch (f) {
    case FertilityClass::Patriarch: return "patriarch";
    case FertilityClass::Leaf: return "leaf";
    case FertilityClass::One: return "one";
    case FertilityClass::Two: return "two";
    case FertilityClass::Three: return "three";
    }
    return "?";
}

namespace {

const BirthRecord& record_of(const AutomatonState& s, Cell c) {
    auto it = s.live.find(c);
    if (it == s.live.end())
        throw error("cell " + format_cell(s.kind, c) + " is not live");
    return it->second;
}

} // namespace

std::optional<Cell> parent_of(const AutomatonState& s, Cell c) {
    const BirthRecord& rec = record_of(s, c);
    if (!rec.has_parent) return std::nullopt;
    return rec.parent;
}

std::vector<Cell> children_of(const AutomatonState& s, Cell c) {
    record_of(s, c);
    std::vector<Cell> out;
    for (Cell n : neighbors(s.kind, c)) {
        auto it = s.live.find(n);
        if (it != s.live.end() && it->second.has_parent && it->second.parent == c)
            out.push_back(n);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool children_final(const AutomatonState& s, Cell c) {
    return s.generation >= record_of(s, c).generation + 1;
}

std::vector<Cell> lineage(const AutomatonState& s, Cell c) {
    std::vector<Cell> out{c};
    const BirthRecord* rec = &record_of(s, c);
    while (rec->has_parent) {
        out.push_back(rec->parent);
        rec = &record_of(s, rec->parent);
    }
    return out;
}

FertilityClass fertility_class(const AutomatonState& s, Cell c) {
    const BirthRecord& rec = record_of(s, c);
    if (!rec.has_parent) return FertilityClass::Patriarch;
    if (s.generation < rec.generation + 1)
        throw error("fertility of " + format_cell(s.kind, c) + " is not final at generation " +
                    std::to_string(s.generation));
    switch (children_of(s, c).size()) {
    case 0: return FertilityClass::Leaf;
    case 1: return FertilityClass::One;
    case 2: return FertilityClass::Two;
    case 3: return FertilityClass::Three;
    default:
        throw error("cell " + format_cell(s.kind, c) + " has more than 3 children");
    }
}

std::map<int, uint64_t> fertility_histogram(const AutomatonState& s) {
    std::map<int, uint64_t> hist;
    for (const auto& [cell, rec] : s.live) {
        if (!rec.has_parent) continue; // patriarch excluded
        if (s.generation < rec.generation + 1) continue; // not final yet
        hist[int(children_of(s, cell).size())] += 1;
    }
    return hist;
}

std::vector<std::pair<Cell, Cell>> family_tree_edges(const AutomatonState& s) {
    std::vector<std::pair<Cell, Cell>> edges;
    edges.reserve(s.live.size());
    for (const auto& [cell, rec] : s.live)
        if (rec.has_parent) edges.emplace_back(rec.parent, cell);
    std::sort(edges.begin(), edges.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    return edges;
}

void write_family_tree(const AutomatonState& s, std::ostream& os) {
    for (const auto& [parent, child] : family_tree_edges(s))
        os << format_cell(s.kind, parent) << " " << format_cell(s.kind, child) << "\n";
}

} // namespace uw
