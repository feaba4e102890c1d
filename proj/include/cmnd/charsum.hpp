#pragma once

#include <span>
#include <vector>

#include "cmnd/group.hpp"

namespace cmnd {

// For each character chi, the exact weighted sum
//     sum_{g in G} weights[index(g)] * chi(g)   in Z[zeta_e].
//
// This is the inner loop of both nondegeneracy character tests: the generic
// test uses the CM-type indicator as weights, the reduction test the slope
// numerators.  Characters are independent, so the scan is OpenMP parallel
// over them; results are merged in enumeration order and are identical to
// the serial reference.
std::vector<CycInt> weighted_character_sums(const FinAbGroup& g,
                                            std::span<const i64> weights,
                                            std::span<const Character> chars);

// Straightforward reference: evaluates each term with ring operations
// instead of exponent bucketing.  Kept for tests and the benchmark.
std::vector<CycInt> weighted_character_sums_serial(const FinAbGroup& g,
                                                   std::span<const i64> weights,
                                                   std::span<const Character> chars);

}  // namespace cmnd
