#pragma once

#include <cstdint>
#include <string>

#include "uw/engine.hpp"

namespace uw {

enum class RenderMode { Plain, ByGeneration, Fertility, GasketDots, GasketSolid, TreeOverlay };

const char* render_mode_name(RenderMode m);
RenderMode render_mode_from_name(const std::string& name);

// Deterministic SVG knobs. Output is byte-stable: fixed header, elements
// sorted by cell coordinate, all numbers printed with 6 fractional digits.
struct RenderStyle {
    RenderMode mode = RenderMode::Plain;
    bool show_grid = true; // stroke cell outlines
    int cell_size = 20;    // output units per lattice unit
};

// One shape per live cell (unit squares / pointy-top hexagons at the
// lattice embedding). Fertility mode colors finalized cells by final child
// count and frontier cells by potential fertility (the children a one-step
// lookahead would give them): patriarch black, 3 children blue, 2 purple
// (hex only), 1 red, leaves green. GasketDots marks live cells whose slice
// coordinates pass the gasket parity predicate with a dot; GasketSolid
// fills them black; TreeOverlay draws parent-child segments.
std::string render_state(const AutomatonState& state, const RenderStyle& style);

// Standalone gasket triangle, rows 0..n.
std::string render_gasket(uint64_t n, const RenderStyle& style);

// PBM (P1) raster of the live set over [-generation, generation]^2, one
// digit per cell, top row y = +generation. Square lattice only.
std::string render_bitmap(const AutomatonState& state);

} // namespace uw
