#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "uw/engine.hpp"

namespace uw {

// Final child count classes as color-coded in the automaton figures.
// Square non-patriarch cells never reach Two; hex cells use all four
// non-patriarch classes. Both domains are verified, not assumed (see
// analysis::verify_fertility_domain).
enum class FertilityClass { Patriarch, Leaf, One, Two, Three };

const char* fertility_name(FertilityClass f);

std::optional<Cell> parent_of(const AutomatonState& state, Cell c); // throws if not live

// Children are neighbors born one generation later, so a cell's child list
// is final once state.generation >= birth generation + 1.
std::vector<Cell> children_of(const AutomatonState& state, Cell c); // sorted
bool children_final(const AutomatonState& state, Cell c);

std::vector<Cell> lineage(const AutomatonState& state, Cell c); // c .. patriarch

FertilityClass fertility_class(const AutomatonState& state, Cell c); // throws if not final

// Child-count histogram over finalized non-patriarch cells. Keys are raw
// counts; out-of-domain keys surface here instead of being clamped.
std::map<int, uint64_t> fertility_histogram(const AutomatonState& state);

// One (parent, child) edge per non-patriarch live cell, sorted by child.
std::vector<std::pair<Cell, Cell>> family_tree_edges(const AutomatonState& state);

// One edge per line, `<parent coords> <child coords>`, sorted by child.
void write_family_tree(const AutomatonState& state, std::ostream& os);

} // namespace uw
