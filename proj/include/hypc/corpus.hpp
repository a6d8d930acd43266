#pragma once

#include <cstddef>
#include <vector>

#include "hypc/core_seq.hpp"

namespace hypc {

// Exhaustive grid of norm-one functionals: every f = (±a_1/q, ..., ±a_S/q)
// with a common denominator q <= max_den and sum a_j = q, deduplicated and
// returned in a deterministic order. Support length is at most max_support.
std::vector<L1Functional> functional_grid(unsigned max_den, unsigned max_support);

}  // namespace hypc
