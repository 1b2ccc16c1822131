#include "doctest.h"

#include <vector>

#include "uw/engine.hpp"
#include "uw/fast_engine.hpp"

using namespace uw;

TEST_CASE("bit grid index and cell are inverse") {
    BitGrid g(17);
    CHECK(g.side() == 35);
    for (int32_t y = -17; y <= 17; ++y) {
        for (int32_t x = -17; x <= 17; ++x) {
            Cell c{x, y};
            int64_t idx = g.index(c);
            CHECK(idx >= 0);
            CHECK(idx < g.side() * g.side());
            CHECK(g.cell(idx) == c);
        }
    }
}

TEST_CASE("bit grid set, test and count") {
    BitGrid g(3);
    CHECK(g.count() == 0);
    g.set(g.index(Cell{0, 0}));
    g.set(g.index(Cell{-3, 3}));
    g.set(g.index(Cell{2, -1}));
    g.set(g.index(Cell{2, -1})); // idempotent
    CHECK(g.count() == 3);
    CHECK(g.test_cell(Cell{0, 0}));
    CHECK(g.test_cell(Cell{-3, 3}));
    CHECK(g.test_cell(Cell{2, -1}));
    CHECK_FALSE(g.test_cell(Cell{1, 1}));
    CHECK_FALSE(g.test_cell(Cell{4, 0})); // outside the grid reads as dead
}

TEST_CASE("bitmap runs match the record-keeping engine through generation 64") {
    for (LatticeKind kind : {LatticeKind::Square, LatticeKind::Hex}) {
        AutomatonState rich = run(kind, 64);
        auto pop = population(rich);
        FastRunResult fast = fast_run(kind, 64, kDefaultCellBudget, StepKernel::Serial);
        REQUIRE(fast.births.size() == 65);
        for (size_t g = 0; g <= 64; ++g) CHECK(fast.births[g] == pop[g].births);
        CHECK(fast.total == rich.live.size());
    }
}

TEST_CASE("final bitmap holds exactly the live set at generation 32") {
    for (LatticeKind kind : {LatticeKind::Square, LatticeKind::Hex}) {
        AutomatonState rich = run(kind, 32);
        FastRunResult fast = fast_run(kind, 32, kDefaultCellBudget, StepKernel::OpenMP);
        CHECK(fast.live.count() == rich.live.size());
        for (const auto& [c, rec] : rich.live) CHECK(fast.live.test_cell(c));
    }
}

TEST_CASE("serial and parallel kernels produce identical results at generation 1023") {
    // at this size the frontier (tens of thousands of cells) is well past
    // the serial cutoff, so the chunked parallel path actually runs
    FastRunResult a = fast_run(LatticeKind::Square, 1023, kDefaultCellBudget, StepKernel::Serial);
    FastRunResult b = fast_run(LatticeKind::Square, 1023, kDefaultCellBudget, StepKernel::OpenMP);
    CHECK(a.births == b.births);
    CHECK(a.total == b.total);
    CHECK(a.live.words() == b.live.words());
    // closed-form cross-check: 1023 = 2^10 - 1
    CHECK(a.total == 1 + 4 * ((uint64_t(1) << 20) - 1) / 3);
}

TEST_CASE("hex kernels agree at generation 255") {
    FastRunResult a = fast_run(LatticeKind::Hex, 255, kDefaultCellBudget, StepKernel::Serial);
    FastRunResult b = fast_run(LatticeKind::Hex, 255, kDefaultCellBudget, StepKernel::OpenMP);
    CHECK(a.births == b.births);
    CHECK(a.live.words() == b.live.words());
    // regression constant, frozen after the record-keeping engine produced
    // the same value (hex growth has no simple power-of-four closed form)
    CHECK(a.total == 125119);
}

TEST_CASE("bitmap runs enforce the cell budget") {
    CHECK_THROWS_AS(fast_run(LatticeKind::Square, 10, 20), error);
    CHECK(fast_run(LatticeKind::Square, 3, 21).total == 21);
}
