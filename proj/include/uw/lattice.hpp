#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "uw/error.hpp"

namespace uw {

enum class LatticeKind { Square, Hex };

int direction_count(LatticeKind kind); // 4 or 6
const char* lattice_name(LatticeKind kind);
LatticeKind lattice_from_name(const std::string& name);

// Lattice cell, the universal spatial key.
//
// Square cells are centers (x, y) with unit spacing. Hex cells are cube
// coordinates (x, y, z) with x + y + z = 0; z is derived from x and y, so
// a malformed triple cannot be represented. Triples coming in from outside
// go through hex_cell(), which enforces the invariant.
struct Cell {
    int32_t x = 0;
    int32_t y = 0;

    int32_t z() const { return -x - y; } // hex cube component

    friend auto operator<=>(const Cell&, const Cell&) = default; // (x, y) order
};

Cell hex_cell(int64_t x, int64_t y, int64_t z); // throws unless x + y + z == 0

inline constexpr Cell kPatriarch{0, 0};

struct CellHash {
    size_t operator()(const Cell& c) const noexcept {
        uint64_t k = (uint64_t(uint32_t(c.x)) << 32) | uint32_t(c.y);
        k ^= k >> 33;
        k *= 0xff51afd7ed558ccdULL;
        k ^= k >> 33;
        k *= 0xc4ceb9fe1a85ec53ULL;
        k ^= k >> 33;
        return size_t(k);
    }
};

// "2 1" for square, "3 -2 -1" for hex (cube triple).
std::string format_cell(LatticeKind kind, Cell c);

// Neighbor directions in the fixed cyclic order all outputs depend on.
// Square: E, N, W, S. Hex: the six unit cube directions u_0..u_5,
// counterclockwise, stored as (x, y) with z implied:
//   u_0 = ( 1,-1, 0)   u_1 = ( 1, 0,-1)   u_2 = ( 0, 1,-1)
//   u_3 = (-1, 1, 0)   u_4 = (-1, 0, 1)   u_5 = ( 0,-1, 1)
std::span<const Cell> directions(LatticeKind kind);

std::vector<Cell> neighbors(LatticeKind kind, Cell c);

// Minimum number of neighbor-to-neighbor moves between a and b.
int64_t manhattan_distance(LatticeKind kind, Cell a, Cell b);

// Planar embedding of cell centers, unit spacing between adjacent centers.
// Hex cells are pointy-top with u_0 pointing right:
//   (x, y, z) -> ((x - y) / 2, sqrt(3)/2 * (x + y))
struct Vec2 {
    double x = 0;
    double y = 0;
};
Vec2 embed(LatticeKind kind, Cell c);

double geometric_distance(LatticeKind kind, Cell a, Cell b);

// Slices: the 4 (square) or 6 (hex) sectors spanned by adjacent axis ray
// pairs (directions()[k], directions()[k+1]) out of the patriarch. A cell
// is in slice k iff it is a non-negative integer combination of the two
// rays. Boundary-ray cells belong to both adjacent slices; the patriarch
// belongs to all of them.
int slice_count(LatticeKind kind);

struct SliceCoord {
    int slice = 0; // [0, slice_count)
    int64_t a = 0; // component along directions()[slice]
    int64_t b = 0; // component along directions()[(slice + 1) % slice_count]

    friend auto operator<=>(const SliceCoord&, const SliceCoord&) = default;
};

bool in_slice(LatticeKind kind, int slice, Cell c);
std::vector<int> slices_of(LatticeKind kind, Cell c); // ascending
SliceCoord slice_coords(LatticeKind kind, int slice, Cell c); // throws if not in slice
Cell cell_from_slice(LatticeKind kind, const SliceCoord& sc);

// True iff the cell center lies on a reflection line through the corners
// of the patriarch cell (and the cell is not the patriarch itself).
// Square: |x| == |y|. Hex: two cube coordinates are equal.
bool on_corner_axis(LatticeKind kind, Cell c);

// Dihedral group fixing the patriarch, order 8 (square) or 12 (hex).
// rotation counts quarter or sixth turns counterclockwise; reflect applies
// the base reflection first (square: across the x-axis; hex: swap of the
// y and z cube axes, which fixes the 30-degree corner line).
struct SymmetryElement {
    int rotation = 0;
    bool reflect = false;
};

std::vector<SymmetryElement> symmetry_group(LatticeKind kind);
Cell apply_symmetry(LatticeKind kind, SymmetryElement g, Cell c); // throws on bad rotation

// Shortest lattice paths from a to b. Counting is exact with saturation
// well above any enforceable cap; enumeration refuses to materialize more
// than cap paths.
uint64_t count_shortest_paths(LatticeKind kind, Cell a, Cell b);
std::vector<std::vector<Cell>> enumerate_shortest_paths(LatticeKind kind, Cell a, Cell b,
                                                        uint64_t cap);

} // namespace uw
