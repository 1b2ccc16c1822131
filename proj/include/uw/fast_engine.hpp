#pragma once

#include <cstdint>
#include <vector>

#include "uw/engine.hpp"
#include "uw/lattice.hpp"

namespace uw {

// Dense bit grid over [-radius, radius]^2 in lattice storage coordinates
// (square (x, y); hex (x, y) with z implied). Row-major, y outer.
class BitGrid {
  public:
    BitGrid() = default;
    explicit BitGrid(int32_t radius)
        : radius_(radius), side_(2 * int64_t(radius) + 1),
          words_(size_t((side_ * side_ + 63) / 64), 0) {}

    int32_t radius() const { return radius_; }
    int64_t side() const { return side_; }

    int64_t index(Cell c) const {
        return (int64_t(c.y) + radius_) * side_ + (int64_t(c.x) + radius_);
    }
    Cell cell(int64_t idx) const {
        return Cell{int32_t(idx % side_ - radius_), int32_t(idx / side_ - radius_)};
    }

    bool test(int64_t idx) const {
        return (words_[size_t(idx >> 6)] >> (idx & 63)) & 1u;
    }
    void set(int64_t idx) { words_[size_t(idx >> 6)] |= uint64_t(1) << (idx & 63); }

    bool test_cell(Cell c) const {
        if (std::abs(c.x) > radius_ || std::abs(c.y) > radius_) return false;
        return test(index(c));
    }

    uint64_t count() const;
    const std::vector<uint64_t>& words() const { return words_; }

  private:
    int32_t radius_ = 0;
    int64_t side_ = 0;
    std::vector<uint64_t> words_;
};

enum class StepKernel { Serial, OpenMP };

// Population-only result of a large run: per-generation birth counts and
// the final live set as a bitmap. No birth records are kept, which is what
// makes generation ~2^14 runs fit in memory.
struct FastRunResult {
    LatticeKind kind = LatticeKind::Square;
    uint32_t generations = 0;
    std::vector<uint64_t> births; // births[g], births[0] == 1
    uint64_t total = 0;
    BitGrid live;
};

// Frontier stepper on the bit grid. Same birth rule and same frontier
// candidate restriction as engine::step; candidate evaluation runs in
// parallel when kernel == OpenMP, chunked so that the (sorted) birth list
// is identical whatever the thread count. Tested against engine::step.
FastRunResult fast_run(LatticeKind kind, uint32_t generations,
                       uint64_t cell_budget = kDefaultCellBudget,
                       StepKernel kernel = StepKernel::OpenMP);

} // namespace uw
