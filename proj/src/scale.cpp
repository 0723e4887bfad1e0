#include "posetlab/scale.hpp"

namespace posetlab {

bool scale_leq(const ScaleCondition& weak, const ScaleCondition& strong) {
  return detail::seq_leq_impl(weak, strong,
                              [](Val lo, Val hi) { return lo <= hi; });
}

ScaleCondition amalgamate(const ScaleCondition& base, const IndexSet& within,
                          const ScaleCondition& side) {
  for (const auto& [idx, seq] : side.entries)
    if (!within.count(idx))
      throw PreconditionError("amalgamate: side condition leaves the index set");
  if (!scale_leq(restrict_to(base, within), side))
    throw PreconditionError(
        "amalgamate: side condition does not extend the restriction of the base");
  if (side.len < base.len)
    throw PreconditionError("amalgamate: side condition is shorter than the base");

  ScaleCondition out = side;
  for (const auto& [idx, seq] : base.entries) {
    if (out.has(idx)) continue;
    // donor: largest index of the base inside `within` below idx; its side
    // values keep every new column ordered.
    const Seq* donor = nullptr;
    for (const auto& [cand, unused] : base.entries) {
      if (cand >= idx) break;
      if (within.count(cand)) donor = &out.entries.at(cand);
    }
    Seq row = seq;
    row.reserve(side.len);
    for (Len col = base.len; col < side.len; ++col)
      row.push_back(donor ? (*donor)[col] : 0);
    out.entries.emplace(idx, std::move(row));
  }
  out.len = out.entries.empty() ? 0 : side.len;
  return out;
}

ScaleCondition pad_to(const ScaleCondition& cond, Len target) {
  if (cond.empty()) {
    if (target != 0)
      throw PreconditionError("pad_to: the empty condition cannot be lengthened");
    return cond;
  }
  if (target < cond.len)
    throw PreconditionError("pad_to: target length below the current length");
  ScaleCondition out = cond;
  out.len = target;
  for (Len col = cond.len; col < target; ++col) {
    Val prev = 0;
    for (auto& [idx, seq] : out.entries) {
      seq.push_back(prev);
      prev = seq.back();
    }
  }
  return out;
}

bool ll_check(const Seq& f, const Seq& g, Len threshold) {
  if (f.size() != g.size())
    throw PreconditionError("ll_check: fragments differ in length");
  if (threshold > f.size())
    throw PreconditionError("ll_check: threshold beyond the fragment length");
  for (std::size_t i = threshold; i < f.size(); ++i)
    if (f[i] > g[i]) return false;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] < g[i]) return true;
  return false;
}

std::vector<ScaleCondition> enumerate_scale_universe(const Truncation& t,
                                                     std::uint64_t cap) {
  return enumerate_seq_universe<ScaleTag>(t, cap);
}

}  // namespace posetlab
