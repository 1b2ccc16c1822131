#include "uw/gasket.hpp"

#include <bit>

namespace uw {

TwoAdicOrder nu2(int64_t n) {
    if (n == 0) return TwoAdicOrder{true, 0};
    return TwoAdicOrder{false, uint32_t(std::countr_zero(uint64_t(std::abs(n))))};
}

bool binomial_is_odd(uint64_t row, uint64_t pos) {
    if (pos > row)
        throw error("binomial position " + std::to_string(pos) + " out of range for row " +
                    std::to_string(row));
    return (pos & (row - pos)) == 0;
}

uint64_t GasketRow::count() const {
    uint64_t n = 0;
    for (uint64_t w : bits_) n += uint64_t(std::popcount(w));
    return n;
}

std::vector<uint64_t> GasketRow::positions() const {
    std::vector<uint64_t> out;
    for (uint64_t p = 0; p <= row_; ++p)
        if (test(p)) out.push_back(p);
    return out;
}

GasketRow gasket_row(uint64_t row) {
    std::vector<uint64_t> bits((row >> 6) + 1, 0);
    for (uint64_t p = 0; p <= row; ++p)
        if ((p & (row - p)) == 0) bits[size_t(p >> 6)] |= uint64_t(1) << (p & 63);
    return GasketRow(row, std::move(bits));
}

std::vector<GasketRow> gasket_generate(uint64_t n) {
    std::vector<GasketRow> rows;
    rows.reserve(size_t(n) + 1);
    std::vector<uint64_t> cur{1}; // row 0 = {0}
    rows.emplace_back(0, cur);
    for (uint64_t r = 1; r <= n; ++r) {
        // exactly one of the two upper neighbors = XOR of the row with its
        // shift by one position
        std::vector<uint64_t> next((r >> 6) + 1, 0);
        uint64_t carry = 0;
        for (size_t w = 0; w < next.size(); ++w) {
            uint64_t v = w < cur.size() ? cur[w] : 0;
            uint64_t shifted = (v << 1) | carry;
            carry = v >> 63;
            next[w] = v ^ shifted;
        }
        cur = next;
        rows.emplace_back(r, cur);
    }
    return rows;
}

bool eventually_alive_square(int64_t x, int64_t y) {
    if (x == 0 && y == 0) return true;
    return nu2(x) != nu2(y);
}

} // namespace uw
