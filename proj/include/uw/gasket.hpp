#pragma once

#include <cstdint>
#include <vector>

#include "uw/error.hpp"

namespace uw {

// 2-adic order: exponent of the highest power of 2 dividing n. Every power
// of 2 divides 0, so nu2(0) is the distinguished infinite order; that
// convention makes axis cells (n, 0), n != 0, have different orders.
struct TwoAdicOrder {
    bool is_infinite = false;
    uint32_t value = 0; // meaningful only when finite

    friend bool operator==(const TwoAdicOrder&, const TwoAdicOrder&) = default;
};

TwoAdicOrder nu2(int64_t n);

// C(row, pos) is odd iff adding pos and row-pos in binary carries nowhere,
// i.e. (pos & (row - pos)) == 0 (Kummer).
bool binomial_is_odd(uint64_t row, uint64_t pos); // throws if pos > row

// One gasket row as a bitmask; cheap up to rows of ~2^20 positions.
class GasketRow {
  public:
    GasketRow() = default;
    GasketRow(uint64_t row, std::vector<uint64_t> bits) : row_(row), bits_(std::move(bits)) {}

    uint64_t row() const { return row_; }
    bool test(uint64_t pos) const {
        return pos <= row_ && ((bits_[size_t(pos >> 6)] >> (pos & 63)) & 1u);
    }
    uint64_t count() const;
    std::vector<uint64_t> positions() const; // ascending

    friend bool operator==(const GasketRow&, const GasketRow&) = default;

  private:
    uint64_t row_ = 0;
    std::vector<uint64_t> bits_;
};

// Closed form: position present iff C(row, pos) is odd.
GasketRow gasket_row(uint64_t row);

// Rows 0 through n inclusive by the local rule: row 0 = {0}; (r, p) present
// iff exactly one of (r-1, p-1), (r-1, p) is present. Equals gasket_row(r)
// for every r; the equality is enforced by tests, not assumed.
std::vector<GasketRow> gasket_generate(uint64_t n);

// Known characterization of the square automaton's eventually-live cells:
// the patriarch, plus every cell whose center coordinates have different
// 2-adic orders. The patriarch is included by fiat; the order test alone
// would exclude it.
bool eventually_alive_square(int64_t x, int64_t y);

} // namespace uw
