#pragma once

// Common shape of the two sequence posets: a condition is a finite map from
// indices to sequences of one common length. The empty condition is the
// unique weakest element; its length is pinned to 0, and a nonempty domain
// requires a positive length, so equal conditions compare equal as values.

#include <functional>
#include <utility>

#include "posetlab/core.hpp"

namespace posetlab {

template <class Tag>
struct SeqCondition {
  std::map<Index, Seq> entries;
  Len len = 0;

  auto operator<=>(const SeqCondition&) const = default;

  bool empty() const { return entries.empty(); }
  bool has(Index idx) const { return entries.count(idx) != 0; }

  IndexSet domain() const {
    IndexSet out;
    for (const auto& [idx, seq] : entries) out.insert(idx);
    return out;
  }

  bool valid() const {
    if (entries.empty()) return len == 0;
    if (len == 0) return false;
    for (const auto& [idx, seq] : entries)
      if (seq.size() != len) return false;
    return true;
  }
};

struct ScaleTag {};
struct EvDiffTag {};

using ScaleCondition = SeqCondition<ScaleTag>;
using EvDiffCondition = SeqCondition<EvDiffTag>;

template <class Tag>
SeqCondition<Tag> restrict_to(const SeqCondition<Tag>& cond, const IndexSet& within) {
  SeqCondition<Tag> out;
  for (const auto& [idx, seq] : cond.entries)
    if (within.count(idx)) out.entries.emplace(idx, seq);
  out.len = out.entries.empty() ? 0 : cond.len;
  return out;
}

template <class Tag, class... Rows>
SeqCondition<Tag> make_seq_condition(Len len, Rows&&... rows) {
  SeqCondition<Tag> out;
  out.len = len;
  (out.entries.insert(std::forward<Rows>(rows)), ...);
  return out;
}

namespace detail {

// Order skeleton shared by the two sequence posets. pair_ok(lo, hi) is the
// per-column constraint on index pairs lo < hi from the weaker domain.
template <class Tag, class PairOk>
bool seq_leq_impl(const SeqCondition<Tag>& weak, const SeqCondition<Tag>& strong,
                  PairOk pair_ok) {
  if (weak.len > strong.len) return false;
  for (const auto& [idx, seq] : weak.entries) {
    auto it = strong.entries.find(idx);
    if (it == strong.entries.end() || !is_prefix(seq, it->second)) return false;
  }
  if (weak.entries.size() < 2 || weak.len == strong.len) return true;
  for (auto lo = weak.entries.begin(); lo != weak.entries.end(); ++lo) {
    const Seq& lo_row = strong.entries.at(lo->first);
    for (auto hi = std::next(lo); hi != weak.entries.end(); ++hi) {
      const Seq& hi_row = strong.entries.at(hi->first);
      for (Len col = weak.len; col < strong.len; ++col)
        if (!pair_ok(lo_row[col], hi_row[col])) return false;
    }
  }
  return true;
}

}  // namespace detail

// 1 (empty condition) plus, per nonempty domain and length, one condition for
// every cell assignment below max_val.
inline std::uint64_t seq_universe_size(const Truncation& t) {
  std::uint64_t total = 1;
  const std::uint64_t n = t.indices.size();
  std::uint64_t binom = 1;
  for (std::uint64_t k = 1; k <= n; ++k) {
    binom = detail::sat_mul(binom, n - k + 1) / k;
    std::uint64_t per_domain = 0;
    for (Len length = 1; length <= t.max_len; ++length)
      per_domain = detail::sat_add(
          per_domain, detail::sat_pow(t.max_val, static_cast<std::uint64_t>(length) * k));
    total = detail::sat_add(total, detail::sat_mul(binom, per_domain));
  }
  return total;
}

// Every condition with domain inside t.indices, length at most t.max_len and
// entries below t.max_val, in a fixed deterministic order.
template <class Tag>
std::vector<SeqCondition<Tag>> enumerate_seq_universe(
    const Truncation& t, std::uint64_t cap = kDefaultUniverseCap) {
  if (!t.valid()) throw PreconditionError("enumerate: invalid truncation bounds");
  const std::uint64_t size = seq_universe_size(t);
  if (size > cap)
    throw EnumerationOverflowError(
        "enumerate: universe size " + std::to_string(size) + " exceeds cap " +
            std::to_string(cap),
        size);

  std::vector<SeqCondition<Tag>> out;
  out.reserve(size);
  for_each_subset(t.indices, [&](const IndexSet& domain) {
    if (domain.empty()) {
      out.push_back({});
      return;
    }
    for (Len length = 1; length <= t.max_len; ++length) {
      SeqCondition<Tag> cond;
      cond.len = length;
      std::vector<Val*> cells;
      for (Index idx : domain) {
        auto it = cond.entries.emplace(idx, Seq(length, 0)).first;
        for (Len col = 0; col < length; ++col) cells.push_back(&it->second[col]);
      }
      while (true) {
        out.push_back(cond);
        std::size_t pos = cells.size();
        while (pos > 0) {
          Val& cell = *cells[pos - 1];
          if (++cell < t.max_val) break;
          cell = 0;
          --pos;
        }
        if (pos == 0) break;
      }
    }
  });
  return out;
}

// Visits every strengthening of `weak` whose domain stays inside `within`,
// whose length lies in [len_lo, len_hi] and whose entries are below max_val.
// The candidate passed to fn is only valid for the duration of the call.
template <class Tag, class LeqFn, class Fn>
void for_each_extension(const SeqCondition<Tag>& weak, const IndexSet& within,
                        Len len_lo, Len len_hi, Val max_val, LeqFn leq, Fn fn) {
  for (const auto& [idx, seq] : weak.entries)
    if (!within.count(idx))
      throw PreconditionError("for_each_extension: condition leaves the index set");

  IndexSet fresh;
  for (Index idx : within)
    if (!weak.has(idx)) fresh.insert(idx);

  for_each_subset(fresh, [&](const IndexSet& added) {
    if (weak.empty() && added.empty()) {
      if (len_lo == 0) fn(weak);
      return;
    }
    const Len lo = std::max<Len>(std::max<Len>(len_lo, weak.len), 1);
    for (Len length = lo; length <= len_hi; ++length) {
      SeqCondition<Tag> cand;
      cand.len = length;
      std::vector<Val*> cells;
      for (const auto& [idx, seq] : weak.entries) {
        auto it = cand.entries.emplace(idx, seq).first;
        it->second.resize(length, 0);
        for (Len col = weak.len; col < length; ++col) cells.push_back(&it->second[col]);
      }
      for (Index idx : added) {
        auto it = cand.entries.emplace(idx, Seq(length, 0)).first;
        for (Len col = 0; col < length; ++col) cells.push_back(&it->second[col]);
      }
      while (true) {
        if (leq(weak, cand)) fn(cand);
        std::size_t pos = cells.size();
        while (pos > 0) {
          Val& cell = *cells[pos - 1];
          if (++cell < max_val) break;
          cell = 0;
          --pos;
        }
        if (pos == 0) break;
      }
    }
  });
}

}  // namespace posetlab
