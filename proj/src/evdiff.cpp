#include "posetlab/evdiff.hpp"

namespace posetlab {

bool evdiff_leq(const EvDiffCondition& weak, const EvDiffCondition& strong) {
  return detail::seq_leq_impl(weak, strong,
                              [](Val lo, Val hi) { return lo != hi; });
}

EvDiffCondition evdiff_amalgamate(const EvDiffCondition& base,
                                  const IndexSet& within,
                                  const EvDiffCondition& side) {
  for (const auto& [idx, seq] : side.entries)
    if (!within.count(idx))
      throw PreconditionError(
          "evdiff_amalgamate: side condition leaves the index set");
  if (!evdiff_leq(restrict_to(base, within), side))
    throw PreconditionError(
        "evdiff_amalgamate: side condition does not extend the restriction of the base");
  if (side.len < base.len)
    throw PreconditionError(
        "evdiff_amalgamate: side condition is shorter than the base");

  EvDiffCondition out = side;
  for (const auto& [idx, seq] : base.entries) {
    if (out.has(idx)) continue;
    Seq row = seq;
    row.resize(side.len, 0);
    out.entries.emplace(idx, std::move(row));
  }
  // Fresh values column by column, increasing index order: each avoids every
  // value already present in the column.
  for (Len col = base.len; col < side.len; ++col) {
    std::set<Val> taken;
    for (const auto& [idx, row] : out.entries)
      if (side.has(idx)) taken.insert(row[col]);
    for (auto& [idx, row] : out.entries) {
      if (side.has(idx)) continue;
      row[col] = smallest_not_in(taken);
      taken.insert(row[col]);
    }
  }
  out.len = out.entries.empty() ? 0 : side.len;
  return out;
}

std::vector<EvDiffCondition> enumerate_evdiff_universe(const Truncation& t,
                                                       std::uint64_t cap) {
  return enumerate_seq_universe<EvDiffTag>(t, cap);
}

}  // namespace posetlab
