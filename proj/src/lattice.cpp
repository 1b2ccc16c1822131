#include "uw/lattice.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <unordered_map>

namespace uw {

namespace {

constexpr std::array<Cell, 4> kSquareDirs = {{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};

// u_0..u_5 as (x, y); z = -x - y.
constexpr std::array<Cell, 6> kHexDirs = {{{1, -1}, {1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}}};

constexpr double kSqrt3 = 1.7320508075688772;

} // namespace

int direction_count(LatticeKind kind) {
    return kind == LatticeKind::Square ? 4 : 6;
}

const char* lattice_name(LatticeKind kind) {
    return kind == LatticeKind::Square ? "square" : "hex";
}

LatticeKind lattice_from_name(const std::string& name) {
    if (name == "square") return LatticeKind::Square;
    if (name == "hex") return LatticeKind::Hex;
    throw error("unknown lattice: " + name);
}

Cell hex_cell(int64_t x, int64_t y, int64_t z) {
    if (x + y + z != 0)
        throw error("invalid hex coordinate: " + std::to_string(x) + " " + std::to_string(y) +
                    " " + std::to_string(z) + " does not satisfy x + y + z = 0");
    return Cell{int32_t(x), int32_t(y)};
}

std::string format_cell(LatticeKind kind, Cell c) {
    std::string s = std::to_string(c.x) + " " + std::to_string(c.y);
    if (kind == LatticeKind::Hex) s += " " + std::to_string(c.z());
    return s;
}

std::span<const Cell> directions(LatticeKind kind) {
    if (kind == LatticeKind::Square) return {kSquareDirs.data(), kSquareDirs.size()};
    return {kHexDirs.data(), kHexDirs.size()};
}

std::vector<Cell> neighbors(LatticeKind kind, Cell c) {
    std::vector<Cell> out;
    out.reserve(direction_count(kind));
    for (Cell d : directions(kind)) out.push_back(Cell{c.x + d.x, c.y + d.y});
    return out;
}

int64_t manhattan_distance(LatticeKind kind, Cell a, Cell b) {
    int64_t dx = int64_t(a.x) - b.x;
    int64_t dy = int64_t(a.y) - b.y;
    if (kind == LatticeKind::Square) return std::abs(dx) + std::abs(dy);
    int64_t dz = -dx - dy;
    return (std::abs(dx) + std::abs(dy) + std::abs(dz)) / 2;
}

Vec2 embed(LatticeKind kind, Cell c) {
    if (kind == LatticeKind::Square) return Vec2{double(c.x), double(c.y)};
    return Vec2{(double(c.x) - c.y) / 2.0, kSqrt3 / 2.0 * (double(c.x) + c.y)};
}

double geometric_distance(LatticeKind kind, Cell a, Cell b) {
    Vec2 pa = embed(kind, a);
    Vec2 pb = embed(kind, b);
    return std::hypot(pa.x - pb.x, pa.y - pb.y);
}

int slice_count(LatticeKind kind) {
    return direction_count(kind);
}

namespace {

// Decompose c = a * rays[k] + b * rays[k+1]. Adjacent direction pairs have
// determinant 1 in both lattices, so (a, b) is always integral.
struct Decomposition {
    int64_t a;
    int64_t b;
};

Decomposition decompose(LatticeKind kind, int slice, Cell c) {
    auto dirs = directions(kind);
    Cell r1 = dirs[size_t(slice)];
    Cell r2 = dirs[size_t((slice + 1) % dirs.size())];
    // det == 1 for every adjacent pair in the cyclic order
    int64_t a = int64_t(c.x) * r2.y - int64_t(c.y) * r2.x;
    int64_t b = int64_t(r1.x) * c.y - int64_t(r1.y) * c.x;
    return {a, b};
}

void check_slice_index(LatticeKind kind, int slice) {
    if (slice < 0 || slice >= slice_count(kind))
        throw error("slice index " + std::to_string(slice) + " out of range for " +
                    lattice_name(kind) + " lattice");
}

} // namespace

bool in_slice(LatticeKind kind, int slice, Cell c) {
    check_slice_index(kind, slice);
    auto [a, b] = decompose(kind, slice, c);
    return a >= 0 && b >= 0;
}

std::vector<int> slices_of(LatticeKind kind, Cell c) {
    std::vector<int> out;
    for (int k = 0; k < slice_count(kind); ++k)
        if (in_slice(kind, k, c)) out.push_back(k);
    return out;
}

SliceCoord slice_coords(LatticeKind kind, int slice, Cell c) {
    check_slice_index(kind, slice);
    auto [a, b] = decompose(kind, slice, c);
    if (a < 0 || b < 0)
        throw error("cell " + format_cell(kind, c) + " is not in slice " + std::to_string(slice));
    return SliceCoord{slice, a, b};
}

Cell cell_from_slice(LatticeKind kind, const SliceCoord& sc) {
    check_slice_index(kind, sc.slice);
    if (sc.a < 0 || sc.b < 0) throw error("slice components must be non-negative");
    auto dirs = directions(kind);
    Cell r1 = dirs[size_t(sc.slice)];
    Cell r2 = dirs[size_t((sc.slice + 1) % dirs.size())];
    return Cell{int32_t(sc.a * r1.x + sc.b * r2.x), int32_t(sc.a * r1.y + sc.b * r2.y)};
}

bool on_corner_axis(LatticeKind kind, Cell c) {
    if (c == kPatriarch) return false;
    if (kind == LatticeKind::Square) return std::abs(c.x) == std::abs(c.y);
    // Corner lines are the rays along u_i + u_{i+1}; their cells are exactly
    // those with two equal cube coordinates.
    int32_t z = c.z();
    return c.x == c.y || c.y == z || c.x == z;
}

std::vector<SymmetryElement> symmetry_group(LatticeKind kind) {
    std::vector<SymmetryElement> out;
    int order = direction_count(kind);
    for (int f = 0; f < 2; ++f)
        for (int r = 0; r < order; ++r) out.push_back(SymmetryElement{r, f != 0});
    return out;
}

Cell apply_symmetry(LatticeKind kind, SymmetryElement g, Cell c) {
    int order = direction_count(kind);
    if (g.rotation < 0 || g.rotation >= order)
        throw error("rotation " + std::to_string(g.rotation) + " out of range for " +
                    lattice_name(kind) + " dihedral group");
    if (kind == LatticeKind::Square) {
        if (g.reflect) c = Cell{c.x, -c.y};
        for (int i = 0; i < g.rotation; ++i) c = Cell{-c.y, c.x}; // 90 deg ccw
        return c;
    }
    if (g.reflect) c = Cell{c.x, c.z()}; // swap cube y and z
    for (int i = 0; i < g.rotation; ++i) c = Cell{-c.y, -c.z()}; // 60 deg ccw: u_k -> u_k+1
    return c;
}

namespace {

constexpr uint64_t kPathCountSaturation = std::numeric_limits<uint64_t>::max() / 2;

uint64_t saturating_add(uint64_t a, uint64_t b) {
    uint64_t s = a + b;
    return (s < a || s > kPathCountSaturation) ? kPathCountSaturation : s;
}

// Paths-to-target counts for every cell on some shortest path from a to b.
uint64_t count_paths_memo(LatticeKind kind, Cell c, Cell b,
                          std::unordered_map<Cell, uint64_t, CellHash>& memo) {
    if (c == b) return 1;
    auto it = memo.find(c);
    if (it != memo.end()) return it->second;
    int64_t d = manhattan_distance(kind, c, b);
    uint64_t total = 0;
    for (Cell n : neighbors(kind, c))
        if (manhattan_distance(kind, n, b) == d - 1)
            total = saturating_add(total, count_paths_memo(kind, n, b, memo));
    memo.emplace(c, total);
    return total;
}

void enumerate_rec(LatticeKind kind, Cell c, Cell b, std::vector<Cell>& prefix,
                   std::vector<std::vector<Cell>>& out) {
    prefix.push_back(c);
    if (c == b) {
        out.push_back(prefix);
    } else {
        int64_t d = manhattan_distance(kind, c, b);
        for (Cell n : neighbors(kind, c))
            if (manhattan_distance(kind, n, b) == d - 1) enumerate_rec(kind, n, b, prefix, out);
    }
    prefix.pop_back();
}

} // namespace

uint64_t count_shortest_paths(LatticeKind kind, Cell a, Cell b) {
    std::unordered_map<Cell, uint64_t, CellHash> memo;
    return count_paths_memo(kind, a, b, memo);
}

std::vector<std::vector<Cell>> enumerate_shortest_paths(LatticeKind kind, Cell a, Cell b,
                                                        uint64_t cap) {
    uint64_t n = count_shortest_paths(kind, a, b);
    if (n > cap)
        throw error("shortest path count " + std::to_string(n) + " exceeds cap " +
                    std::to_string(cap));
    std::vector<std::vector<Cell>> out;
    out.reserve(size_t(n));
    std::vector<Cell> prefix;
    enumerate_rec(kind, a, b, prefix, out);
    return out;
}

} // namespace uw
