#pragma once

// Cohen conditions: finite partial two-valued functions ordered by
// extension. Two conditions are compatible exactly when their union is a
// function, and the union is then the weakest common strengthening.

#include "posetlab/core.hpp"

namespace posetlab {

struct CohenCondition {
  std::map<Index, Val> entries;

  auto operator<=>(const CohenCondition&) const = default;

  bool empty() const { return entries.empty(); }
  bool valid() const {
    for (const auto& [idx, bit] : entries)
      if (bit > 1) return false;
    return true;
  }
};

// True iff `strong` extends `weak`.
bool cohen_leq(const CohenCondition& weak, const CohenCondition& strong);

// True iff the two agree on the intersection of their domains.
bool cohen_compatible(const CohenCondition& a, const CohenCondition& b);

CohenCondition cohen_restrict(const CohenCondition& cond, const IndexSet& within);

// Union of two compatible conditions; throws when they conflict.
CohenCondition cohen_union(const CohenCondition& a, const CohenCondition& b);

std::uint64_t cohen_universe_size(const Truncation& t);

std::vector<CohenCondition> enumerate_cohen_universe(
    const Truncation& t, std::uint64_t cap = kDefaultUniverseCap);

}  // namespace posetlab
