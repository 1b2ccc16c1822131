#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <unordered_map>

#include "uw/engine.hpp"
#include "uw/lattice.hpp"

using namespace uw;

namespace {

std::vector<Cell> ball(LatticeKind kind, int64_t r) {
    std::vector<Cell> out;
    if (kind == LatticeKind::Square) {
        for (int64_t x = -r; x <= r; ++x)
            for (int64_t y = -(r - std::abs(x)); y <= r - std::abs(x); ++y)
                out.push_back(Cell{int32_t(x), int32_t(y)});
    } else {
        for (int64_t x = -r; x <= r; ++x)
            for (int64_t y = std::max(-r, -x - r); y <= std::min(r, -x + r); ++y)
                out.push_back(Cell{int32_t(x), int32_t(y)});
    }
    return out;
}

// independent oracle: hop counts by breadth-first search over neighbor moves
std::unordered_map<Cell, int64_t, CellHash> bfs_distances(LatticeKind kind, Cell from,
                                                          int64_t max_dist) {
    std::unordered_map<Cell, int64_t, CellHash> dist{{from, 0}};
    std::queue<Cell> q;
    q.push(from);
    while (!q.empty()) {
        Cell c = q.front();
        q.pop();
        int64_t d = dist.at(c);
        if (d == max_dist) continue;
        for (Cell n : neighbors(kind, c))
            if (dist.emplace(n, d + 1).second) q.push(n);
    }
    return dist;
}

} // namespace

TEST_CASE("neighbor lists and their fixed order") {
    CHECK(neighbors(LatticeKind::Square, Cell{0, 0}) ==
          std::vector<Cell>{{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
    CHECK(neighbors(LatticeKind::Square, Cell{2, 1}) ==
          std::vector<Cell>{{3, 1}, {2, 2}, {1, 1}, {2, 0}});

    auto hex = neighbors(LatticeKind::Hex, Cell{0, 0});
    CHECK(hex.size() == 6);
    std::set<Cell> expected{hex_cell(1, -1, 0), hex_cell(-1, 1, 0), hex_cell(1, 0, -1),
                            hex_cell(-1, 0, 1), hex_cell(0, 1, -1), hex_cell(0, -1, 1)};
    CHECK(std::set<Cell>(hex.begin(), hex.end()) == expected);
}

TEST_CASE("hex cube triples are validated at the boundary") {
    CHECK(hex_cell(3, -2, -1) == Cell{3, -2});
    CHECK(hex_cell(3, -2, -1).z() == -1);
    CHECK_THROWS_AS(hex_cell(1, 1, 1), error);
}

TEST_CASE("neighbor symmetry within radius 10") {
    for (LatticeKind kind : {LatticeKind::Square, LatticeKind::Hex}) {
        for (Cell a : ball(kind, 10)) {
            for (Cell b : neighbors(kind, a)) {
                auto back = neighbors(kind, b);
                CHECK(std::find(back.begin(), back.end(), a) != back.end());
            }
        }
    }
}

TEST_CASE("manhattan distance examples") {
    CHECK(manhattan_distance(LatticeKind::Square, Cell{0, 0}, Cell{2, 1}) == 3);
    CHECK(manhattan_distance(LatticeKind::Hex, Cell{0, 0}, hex_cell(3, -2, -1)) == 3);
    CHECK(manhattan_distance(LatticeKind::Square, Cell{5, -7}, Cell{5, -7}) == 0);
    CHECK(manhattan_distance(LatticeKind::Hex, hex_cell(2, -1, -1), hex_cell(2, -1, -1)) == 0);
}

TEST_CASE("manhattan distance equals breadth-first hop count within radius 8") {
    for (LatticeKind kind : {LatticeKind::Square, LatticeKind::Hex}) {
        auto cells = ball(kind, 8);
        for (Cell a : cells) {
            auto dist = bfs_distances(kind, a, 16);
            for (Cell b : cells) CHECK(manhattan_distance(kind, a, b) == dist.at(b));
        }
    }
}

TEST_CASE("manhattan distance metric axioms on random triples") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int32_t> coord(-20, 20);
    for (LatticeKind kind : {LatticeKind::Square, LatticeKind::Hex}) {
        for (int i = 0; i < 300; ++i) {
            Cell a{coord(rng), coord(rng)}, b{coord(rng), coord(rng)}, c{coord(rng), coord(rng)};
            CHECK(manhattan_distance(kind, a, a) == 0);
            CHECK(manhattan_distance(kind, a, b) == manhattan_distance(kind, b, a));
            if (a != b) CHECK(manhattan_distance(kind, a, b) > 0);
            CHECK(manhattan_distance(kind, a, c) <=
                  manhattan_distance(kind, a, b) + manhattan_distance(kind, b, c));
        }
    }
}

TEST_CASE("geometric distance examples") {
    CHECK(geometric_distance(LatticeKind::Square, Cell{0, 0}, Cell{3, 4}) == doctest::Approx(5.0));
    CHECK(geometric_distance(LatticeKind::Square, Cell{0, 0}, Cell{1, 1}) ==
          doctest::Approx(std::sqrt(2.0)));
    for (Cell n : neighbors(LatticeKind::Hex, Cell{0, 0}))
        CHECK(geometric_distance(LatticeKind::Hex, Cell{0, 0}, n) == doctest::Approx(1.0));
    // unit spacing holds away from the origin too
    for (Cell n : neighbors(LatticeKind::Hex, hex_cell(4, -1, -3)))
        CHECK(geometric_distance(LatticeKind::Hex, hex_cell(4, -1, -3), n) ==
              doctest::Approx(1.0));
}

TEST_CASE("slice membership") {
    CHECK(slices_of(LatticeKind::Square, Cell{2, 1}) == std::vector<int>{0});
    CHECK(slices_of(LatticeKind::Square, Cell{3, 0}) == std::vector<int>{0, 3});
    CHECK(slices_of(LatticeKind::Hex, Cell{0, 0}) == std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK(slices_of(LatticeKind::Square, Cell{0, 0}) == std::vector<int>{0, 1, 2, 3});
    // boundary rays belong to exactly two slices, interior cells to one
    for (LatticeKind kind : {LatticeKind::Square, LatticeKind::Hex}) {
        for (Cell c : ball(kind, 12)) {
            if (c == kPatriarch) continue;
            size_t n = slices_of(kind, c).size();
            CHECK((n == 1 || n == 2));
        }
    }
}

TEST_CASE("slice coordinates and reconstruction") {
    SliceCoord sq = slice_coords(LatticeKind::Square, 0, Cell{2, 1});
    CHECK(sq.a == 2);
    CHECK(sq.b == 1);

    // derived example: 2*u_0 + 1*u_1 = (3,-2,-1); confirmed by reconstruction
    SliceCoord hx = slice_coords(LatticeKind::Hex, 0, hex_cell(3, -2, -1));
    CHECK(hx.a == 2);
    CHECK(hx.b == 1);
    CHECK(cell_from_slice(LatticeKind::Hex, hx) == hex_cell(3, -2, -1));

    SliceCoord origin = slice_coords(LatticeKind::Square, 0, Cell{0, 0});
    CHECK(origin.a == 0);
    CHECK(origin.b == 0);

    CHECK_THROWS_AS(slice_coords(LatticeKind::Square, 0, Cell{-2, 1}), error);
    CHECK_THROWS_AS(slice_coords(LatticeKind::Square, 4, Cell{1, 1}), error);
}

TEST_CASE("slice coords o reconstruction is the identity within radius 20") {
    for (LatticeKind kind : {LatticeKind::Square, LatticeKind::Hex}) {
        for (Cell c : ball(kind, 20)) {
            for (int k : slices_of(kind, c)) {
                SliceCoord sc = slice_coords(kind, k, c);
                CHECK(sc.a >= 0);
                CHECK(sc.b >= 0);
                CHECK(cell_from_slice(kind, sc) == c);
                CHECK(sc.a + sc.b == manhattan_distance(kind, kPatriarch, c));
            }
        }
        // and the other direction, for every slice
        for (int k = 0; k < slice_count(kind); ++k) {
            for (int64_t a = 0; a <= 20; ++a) {
                for (int64_t b = 0; b + a <= 20; ++b) {
                    Cell c = cell_from_slice(kind, SliceCoord{k, a, b});
                    SliceCoord back = slice_coords(kind, k, c);
                    CHECK(back.a == a);
                    CHECK(back.b == b);
                }
            }
        }
    }
}

TEST_CASE("corner axis predicate") {
    CHECK(on_corner_axis(LatticeKind::Square, Cell{3, 3}));
    CHECK(on_corner_axis(LatticeKind::Square, Cell{-2, 2}));
    CHECK_FALSE(on_corner_axis(LatticeKind::Square, Cell{3, 0}));
    CHECK_FALSE(on_corner_axis(LatticeKind::Square, Cell{0, 0}));
    CHECK(on_corner_axis(LatticeKind::Hex, hex_cell(2, -1, -1)));
    CHECK(on_corner_axis(LatticeKind::Hex, hex_cell(-4, 2, 2)));
    CHECK(on_corner_axis(LatticeKind::Hex, hex_cell(1, 1, -2)));
    CHECK_FALSE(on_corner_axis(LatticeKind::Hex, Cell{0, 0}));
    CHECK_FALSE(on_corner_axis(LatticeKind::Hex, hex_cell(1, 0, -1)));
    CHECK_FALSE(on_corner_axis(LatticeKind::Hex, hex_cell(3, -2, -1)));
}

TEST_CASE("corner-axis cells are never born: hex (2,-1,-1) through generation 16") {
    AutomatonState s = run(LatticeKind::Hex, 16);
    CHECK_FALSE(s.live.contains(hex_cell(2, -1, -1)));
}

TEST_CASE("symmetry group basics") {
    CHECK(symmetry_group(LatticeKind::Square).size() == 8);
    CHECK(symmetry_group(LatticeKind::Hex).size() == 12);

    CHECK(apply_symmetry(LatticeKind::Square, {0, true}, Cell{2, 1}) == Cell{2, -1});
    CHECK(apply_symmetry(LatticeKind::Square, {1, false}, Cell{1, 0}) == Cell{0, 1});

    auto hex_dirs = directions(LatticeKind::Hex);
    for (int k = 0; k < 6; ++k)
        CHECK(apply_symmetry(LatticeKind::Hex, {1, false}, hex_dirs[size_t(k)]) ==
              hex_dirs[size_t((k + 1) % 6)]);

    CHECK_THROWS_AS(apply_symmetry(LatticeKind::Square, {4, false}, Cell{1, 0}), error);
    CHECK_THROWS_AS(apply_symmetry(LatticeKind::Hex, {-1, true}, Cell{1, 0}), error);
}

TEST_CASE("symmetries are adjacency- and distance-preserving bijections") {
    for (LatticeKind kind : {LatticeKind::Square, LatticeKind::Hex}) {
        for (SymmetryElement g : symmetry_group(kind)) {
            std::set<Cell> images;
            for (Cell c : ball(kind, 5)) {
                Cell gc = apply_symmetry(kind, g, c);
                images.insert(gc);
                CHECK(manhattan_distance(kind, kPatriarch, gc) ==
                      manhattan_distance(kind, kPatriarch, c));
                std::set<Cell> mapped_neighbors;
                for (Cell n : neighbors(kind, c))
                    mapped_neighbors.insert(apply_symmetry(kind, g, n));
                auto gn = neighbors(kind, gc);
                CHECK(mapped_neighbors == std::set<Cell>(gn.begin(), gn.end()));
            }
            CHECK(images.size() == ball(kind, 5).size()); // injective on the ball
        }
    }
}

TEST_CASE("shortest path enumeration examples") {
    auto two = enumerate_shortest_paths(LatticeKind::Square, Cell{0, 0}, Cell{1, 1}, 100);
    CHECK(two.size() == 2);

    // C(3,1) = 3 routes to (2,1)
    auto three = enumerate_shortest_paths(LatticeKind::Square, Cell{0, 0}, Cell{2, 1}, 100);
    CHECK(three.size() == 3);
    CHECK(count_shortest_paths(LatticeKind::Square, Cell{0, 0}, Cell{2, 1}) == 3);

    auto self = enumerate_shortest_paths(LatticeKind::Hex, Cell{2, -1}, Cell{2, -1}, 100);
    CHECK(self == std::vector<std::vector<Cell>>{{Cell{2, -1}}});

    CHECK_THROWS_AS(enumerate_shortest_paths(LatticeKind::Square, Cell{0, 0}, Cell{4, 4}, 10),
                    error);
}

TEST_CASE("shortest paths are valid, distinct, and complete within radius 5") {
    for (LatticeKind kind : {LatticeKind::Square, LatticeKind::Hex}) {
        for (Cell b : ball(kind, 5)) {
            int64_t d = manhattan_distance(kind, kPatriarch, b);
            auto paths = enumerate_shortest_paths(kind, kPatriarch, b, 1 << 20);
            CHECK(uint64_t(paths.size()) == count_shortest_paths(kind, kPatriarch, b));
            std::set<std::vector<Cell>> distinct(paths.begin(), paths.end());
            CHECK(distinct.size() == paths.size());
            for (const auto& p : paths) {
                REQUIRE(!p.empty());
                CHECK(p.front() == kPatriarch);
                CHECK(p.back() == b);
                CHECK(int64_t(p.size()) == d + 1);
                for (size_t i = 0; i + 1 < p.size(); ++i)
                    CHECK(manhattan_distance(kind, p[i], p[i + 1]) == 1);
            }
        }
    }
}
