#include "uw/fast_engine.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>

namespace uw {

uint64_t BitGrid::count() const {
    uint64_t n = 0;
    for (uint64_t w : words_) n += uint64_t(std::popcount(w));
    return n;
}

namespace {

struct Offsets {
    std::array<int64_t, 6> d{};
    int n = 0;
};

Offsets linear_offsets(LatticeKind kind, int64_t side) {
    Offsets o;
    for (Cell d : directions(kind)) o.d[size_t(o.n++)] = int64_t(d.y) * side + d.x;
    return o;
}

// Scan one frontier range; newborns are the dead neighbors with exactly
// one live neighbor. A newborn is proposed only by its unique live
// neighbor, so no cell can be appended twice, by any thread.
void scan_range(const BitGrid& live, const Offsets& offs, const std::vector<int64_t>& frontier,
                size_t begin, size_t end, std::vector<int64_t>& out) {
    for (size_t i = begin; i < end; ++i) {
        int64_t f = frontier[i];
        for (int k = 0; k < offs.n; ++k) {
            int64_t c = f + offs.d[size_t(k)];
            if (live.test(c)) continue;
            int cnt = 0;
            for (int j = 0; j < offs.n; ++j) cnt += int(live.test(c + offs.d[size_t(j)]));
            if (cnt == 1) out.push_back(c);
        }
    }
}

constexpr size_t kChunk = 1 << 14;

void step_births(const BitGrid& live, const Offsets& offs, const std::vector<int64_t>& frontier,
                 std::vector<int64_t>& births, StepKernel kernel) {
    births.clear();
    if (kernel == StepKernel::Serial || frontier.size() < 2 * kChunk) {
        scan_range(live, offs, frontier, 0, frontier.size(), births);
    } else {
        size_t nchunks = (frontier.size() + kChunk - 1) / kChunk;
        std::vector<std::vector<int64_t>> parts(nchunks);
#pragma omp parallel for schedule(dynamic, 1)
        for (size_t i = 0; i < nchunks; ++i) {
            size_t begin = i * kChunk;
            size_t end = std::min(begin + kChunk, frontier.size());
            parts[i].reserve((end - begin) * size_t(offs.n - 1));
            scan_range(live, offs, frontier, begin, end, parts[i]);
        }
        for (auto& p : parts) births.insert(births.end(), p.begin(), p.end());
    }
    // canonical order, independent of chunking and thread count
    std::sort(births.begin(), births.end());
}

} // namespace

FastRunResult fast_run(LatticeKind kind, uint32_t generations, uint64_t cell_budget,
                       StepKernel kernel) {
    // +2 pad: live cells reach distance <= generations, candidate probes
    // reach two steps further
    FastRunResult r;
    r.kind = kind;
    r.generations = generations;
    r.live = BitGrid(int32_t(generations) + 2);
    r.births.reserve(size_t(generations) + 1);

    Offsets offs = linear_offsets(kind, r.live.side());
    std::vector<int64_t> frontier{r.live.index(kPatriarch)};
    r.live.set(frontier[0]);
    r.births.push_back(1);
    r.total = 1;

    std::vector<int64_t> births;
    for (uint32_t g = 1; g <= generations; ++g) {
        step_births(r.live, offs, frontier, births, kernel);
        if (r.total + births.size() > cell_budget)
            throw error("cell budget " + std::to_string(cell_budget) +
                        " exceeded at generation " + std::to_string(g));
        for (int64_t b : births) r.live.set(b);
        r.births.push_back(births.size());
        r.total += births.size();
        frontier.swap(births);
    }
    return r;
}

} // namespace uw
