#pragma once

#include <cstdint>
#include <iosfwd>
#include <unordered_map>
#include <vector>

#include "uw/lattice.hpp"

namespace uw {

inline constexpr uint64_t kDefaultCellBudget = 50'000'000;

struct BirthRecord {
    uint32_t generation = 0;
    bool has_parent = false; // false only for the patriarch
    Cell parent{};           // a neighbor of the owning cell when present

    friend bool operator==(const BirthRecord&, const BirthRecord&) = default;
};

using LiveMap = std::unordered_map<Cell, BirthRecord, CellHash>;

// Automaton state. Live cells never die, so `live` only grows; `frontier`
// holds the cells born in the most recent generation, sorted in (x, y)
// order like every emitted birth list.
struct AutomatonState {
    LatticeKind kind = LatticeKind::Square;
    LiveMap live;
    std::vector<Cell> frontier;
    uint32_t generation = 0;
    uint64_t cell_budget = kDefaultCellBudget;
};

AutomatonState new_automaton(LatticeKind kind);

// One growth step: a dead cell is born iff it has exactly one live
// neighbor; the unique neighbor becomes its parent. Candidates are the
// dead neighbors of the frontier, which is lossless: a dead cell with
// exactly one live neighbor outside the frontier would already have been
// born in an earlier generation (live counts only grow). step_naive scans
// every dead cell within Manhattan distance generation+1 instead and is
// the reference the frontier stepper is tested against.
//
// Both return the newborn cells, sorted.
std::vector<Cell> step(AutomatonState& state);
std::vector<Cell> step_naive(AutomatonState& state);

AutomatonState run(LatticeKind kind, uint32_t generations,
                   uint64_t cell_budget = kDefaultCellBudget);

struct PopulationRow {
    uint32_t generation = 0;
    uint64_t births = 0;
    uint64_t cumulative = 0;

    friend bool operator==(const PopulationRow&, const PopulationRow&) = default;
};

std::vector<PopulationRow> population(const AutomatonState& state);

// Line-oriented snapshot: `uwca-snapshot 1 <lattice> <generation>` header,
// then one line per live cell, sorted by cell coordinates:
//   square: <generation> <px> <py> <x> <y>
//   hex:    <generation> <px> <py> <pz> <x> <y> <z>
// with `-` placeholders for the patriarch's missing parent.
void write_snapshot(const AutomatonState& state, std::ostream& os);
AutomatonState read_snapshot(std::istream& is);

} // namespace uw
