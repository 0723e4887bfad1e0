#pragma once

// The poset of conditions growing a family of eventually different
// functions: same shape as the scale poset, but every newly decided column
// must take pairwise distinct values across the weaker condition's domain.

#include "posetlab/seq_condition.hpp"

namespace posetlab {

bool evdiff_leq(const EvDiffCondition& weak, const EvDiffCondition& strong);

// Common lower bound of `base` and `side` (side on `within`, extending
// restrict_to(base, within), at least as long as base). New cells of base's
// leftover indices take the smallest value distinct from every value already
// placed in that column, assigned in increasing index order.
EvDiffCondition evdiff_amalgamate(const EvDiffCondition& base,
                                  const IndexSet& within,
                                  const EvDiffCondition& side);

std::vector<EvDiffCondition> enumerate_evdiff_universe(
    const Truncation& t, std::uint64_t cap = kDefaultUniverseCap);

}  // namespace posetlab
