#pragma once

// The poset of conditions growing a <<-increasing scale of functions: a
// stronger condition extends every sequence and keeps each newly decided
// column ordered along the index order. Carries the constructive common
// lower bound (amalgamate) that witnesses restriction being a reduction.

#include "posetlab/seq_condition.hpp"

namespace posetlab {

// True iff `strong` extends `weak` (strong carries at least the same
// information; in forcing orientation strong <= weak).
bool scale_leq(const ScaleCondition& weak, const ScaleCondition& strong);

// Common lower bound of `base` and `side`, where side lives on the index set
// `within` and extends restrict_to(base, within) with at least base's length.
// New cells of base's leftover indices copy the side value at the largest
// smaller index inside `within`, or 0 when there is none.
ScaleCondition amalgamate(const ScaleCondition& base, const IndexSet& within,
                          const ScaleCondition& side);

// Lengthens every sequence to `target`, filling each new column with the
// value just assigned at the largest smaller index (0 for the least index),
// which keeps the column ordered. The domain is unchanged.
ScaleCondition pad_to(const ScaleCondition& cond, Len target);

// Finite reading of strict domination between equal-length fragments:
// f(i) <= g(i) for every i >= threshold, and f(i) < g(i) somewhere.
bool ll_check(const Seq& f, const Seq& g, Len threshold);

std::vector<ScaleCondition> enumerate_scale_universe(
    const Truncation& t, std::uint64_t cap = kDefaultUniverseCap);

}  // namespace posetlab
