#pragma once

#include <stdexcept>
#include <string>

namespace uw {

// Domain error for contract violations: bad coordinates, out-of-slice
// cells, exceeded budgets, queries on unfinalized cells, and the like.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace uw
