#include "posetlab/cohen.hpp"

namespace posetlab {

bool cohen_leq(const CohenCondition& weak, const CohenCondition& strong) {
  for (const auto& [idx, bit] : weak.entries) {
    auto it = strong.entries.find(idx);
    if (it == strong.entries.end() || it->second != bit) return false;
  }
  return true;
}

bool cohen_compatible(const CohenCondition& a, const CohenCondition& b) {
  for (const auto& [idx, bit] : a.entries) {
    auto it = b.entries.find(idx);
    if (it != b.entries.end() && it->second != bit) return false;
  }
  return true;
}

CohenCondition cohen_restrict(const CohenCondition& cond, const IndexSet& within) {
  CohenCondition out;
  for (const auto& [idx, bit] : cond.entries)
    if (within.count(idx)) out.entries.emplace(idx, bit);
  return out;
}

CohenCondition cohen_union(const CohenCondition& a, const CohenCondition& b) {
  if (!cohen_compatible(a, b))
    throw PreconditionError("cohen_union: conditions conflict on a common index");
  CohenCondition out = a;
  out.entries.insert(b.entries.begin(), b.entries.end());
  return out;
}

namespace {

// Values are two-valued; a wider max_val bound is clamped.
Val cohen_val_bound(const Truncation& t) { return std::min<Val>(t.max_val, 2); }

}  // namespace

std::uint64_t cohen_universe_size(const Truncation& t) {
  return detail::sat_pow(1 + cohen_val_bound(t), t.indices.size());
}

std::vector<CohenCondition> enumerate_cohen_universe(const Truncation& t,
                                                     std::uint64_t cap) {
  const std::uint64_t size = cohen_universe_size(t);
  if (size > cap)
    throw EnumerationOverflowError(
        "enumerate: universe size " + std::to_string(size) + " exceeds cap " +
            std::to_string(cap),
        size);
  const Val bound = cohen_val_bound(t);
  std::vector<CohenCondition> out;
  out.reserve(size);
  // Per index: absent, or one of the allowed bits; a base-(bound+1) odometer.
  std::vector<Index> items(t.indices.begin(), t.indices.end());
  std::vector<Val> digits(items.size(), 0);
  while (true) {
    CohenCondition cond;
    for (std::size_t i = 0; i < items.size(); ++i)
      if (digits[i] > 0) cond.entries.emplace(items[i], digits[i] - 1);
    out.push_back(std::move(cond));
    std::size_t pos = items.size();
    while (pos > 0) {
      if (++digits[pos - 1] <= bound) break;
      digits[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) break;
  }
  return out;
}

}  // namespace posetlab
