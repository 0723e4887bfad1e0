#pragma once

// Shared vocabulary for the finite condition posets: index/value types,
// truncation bounds, the error hierarchy, and a deterministic RNG.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace posetlab {

using Index = std::uint32_t;
using Val = std::uint32_t;
using Len = std::uint32_t;
using Seq = std::vector<Val>;
using IndexSet = std::set<Index>;

// Bounds carving a finite slice out of an infinite condition poset.
struct Truncation {
  IndexSet indices;
  Len max_len = 1;
  Val max_val = 1;

  bool valid() const { return max_len >= 1 && max_val >= 1; }
};

inline constexpr std::uint64_t kDefaultUniverseCap = 1'000'000;

// Which per-column clause a pair of sequences must satisfy: the dominating
// order (lower index stays <=) or the eventually-different order (!=).
enum class OrderMode { scale, evdiff };

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A universe would exceed the configured cap; carries the computed size.
class EnumerationOverflowError : public Error {
 public:
  EnumerationOverflowError(const std::string& what, std::uint64_t size)
      : Error(what), size_(size) {}
  std::uint64_t size() const { return size_; }

 private:
  std::uint64_t size_ = 0;
};

struct PreconditionError : Error {
  using Error::Error;
};

// separate() was asked to split a pair whose first member already extends
// the second.
struct NotSeparableError : PreconditionError {
  using PreconditionError::PreconditionError;
};

struct DenseSetViolationError : Error {
  using Error::Error;
};

struct MalformedConditionError : Error {
  using Error::Error;
};

struct InternalError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

inline bool is_prefix(const Seq& head, const Seq& whole) {
  if (head.size() > whole.size()) return false;
  return std::equal(head.begin(), head.end(), whole.begin());
}

inline Seq seq_prefix(const Seq& whole, std::size_t count) {
  return Seq(whole.begin(), whole.begin() + static_cast<std::ptrdiff_t>(count));
}

inline Val smallest_not_in(const std::set<Val>& banned) {
  Val v = 0;
  while (banned.count(v)) ++v;
  return v;
}

// Seeded source with platform-independent draws (std::uniform_int_distribution
// is not pinned across standard libraries; a modulo draw is).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : eng_() % bound; }
  Val val_below(Val bound) { return static_cast<Val>(below(bound)); }
  bool coin() { return (eng_() & 1u) != 0; }

 private:
  std::mt19937_64 eng_;
};

template <class Fn>
void for_each_subset(const IndexSet& base, Fn fn) {
  std::vector<Index> items(base.begin(), base.end());
  if (items.size() >= 20)
    throw PreconditionError("for_each_subset: index set too large to sweep");
  const std::uint32_t masks = 1u << items.size();
  for (std::uint32_t mask = 0; mask < masks; ++mask) {
    IndexSet subset;
    for (std::size_t bit = 0; bit < items.size(); ++bit)
      if (mask & (1u << bit)) subset.insert(items[bit]);
    fn(subset);
  }
}

namespace detail {

inline std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  return a > kMax - b ? kMax : a + b;
}

inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  if (a == 0 || b == 0) return 0;
  return a > kMax / b ? kMax : a * b;
}

inline std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) out = sat_mul(out, base);
  return out;
}

}  // namespace detail

}  // namespace posetlab
