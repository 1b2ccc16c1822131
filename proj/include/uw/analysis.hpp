#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "uw/engine.hpp"

namespace uw {

// Structured outcome of one mechanically checked claim. passed is true iff
// counterexamples is empty; counts carries named tallies (both claim
// tallies and informational ones). Serialization truncates the
// counterexample list at 100 cells but keeps the full count.
struct VerificationReport {
    std::string claim_id;
    std::vector<std::pair<std::string, std::string>> parameters; // sorted by key
    bool passed = false;
    std::vector<Cell> counterexamples; // sorted
    std::vector<std::pair<std::string, int64_t>> counts; // sorted by key
    LatticeKind kind = LatticeKind::Square; // for formatting counterexamples
};

void write_report(const VerificationReport& r, std::ostream& os);
std::string report_to_string(const VerificationReport& r);

// Cells born at a generation equal to their Manhattan distance from the
// patriarch; their lineages are shortest paths.
std::vector<Cell> pioneers(const AutomatonState& state); // sorted

// Pioneer set of one slice == gasket rows 0..generation, via the slice
// coordinate map (a, b) -> (row a+b, pos b). Mismatches in either
// direction are counterexamples.
VerificationReport verify_pioneer_gasket(const AutomatonState& state, int slice);

// Every gasket pair of every slice is live (one-directional containment).
VerificationReport verify_containment(const AutomatonState& state);

// Live set is invariant under the full dihedral group, and no live cell
// sits on a corner symmetry axis.
VerificationReport verify_symmetry(const AutomatonState& state);

// Parent generation == own generation - 1 for every non-patriarch cell.
VerificationReport verify_parent_generation(const AutomatonState& state);

// Manhattan distance from the patriarch <= birth generation, every cell.
VerificationReport verify_distance_bound(const AutomatonState& state);

// Every shortest path from the patriarch to every cell within the radius
// has strictly increasing geometric distance from the patriarch.
VerificationReport verify_monotone_paths(LatticeKind kind, int radius,
                                         uint64_t path_cap = 1u << 20);

// Forward: every finalized 3-child cell is at even Manhattan distance
// (this is the pass/fail direction). The converse is tallied in counts.
VerificationReport verify_even_distance_children(const AutomatonState& state);

// Square only. Within the radius, compares live cells against the 2-adic
// predicate. live-but-predicate-false cells fail outright;
// predicate-true-but-dead cells fail under the recorded stability
// assertion (no births within the radius over the final `radius` steps).
// Requires generation >= 2*radius and generation+1 a power of two.
VerificationReport verify_eventually_alive(const AutomatonState& state, int radius);

// Histogram keys within the lattice's permitted child-count domain:
// {0,1,3} square, {0,1,2,3} hex.
VerificationReport verify_fertility_domain(const AutomatonState& state);

// Parent of every non-patriarch pioneer is itself a pioneer.
VerificationReport verify_pioneer_closure(const AutomatonState& state);

// CSV population table: header `generation,births,cumulative`.
void sequence_export(LatticeKind kind, uint32_t generations, std::ostream& os,
                     uint64_t cell_budget = kDefaultCellBudget);

} // namespace uw
