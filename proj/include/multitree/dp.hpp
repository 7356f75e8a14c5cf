#ifndef MULTITREE_DP_HPP
#define MULTITREE_DP_HPP

// Memoized dynamic program counting rooted tree-like multigraphs.
//
// Subproblems restrict the class profile of the root's children. Each of the
// four profile coordinates (vertices f, loops g, internal extras h,
// attachment extras k) is bounded either by "<=" or by "="; equality bounds
// always precede inequality bounds, giving five family shapes. The
// inequality families telescope into the next-tighter shape, and the
// all-equality family is expanded by choosing how many children y realise
// the maximal class and recursing on the residual graph left after removing
// them.

#include <algorithm>
#include <atomic>
#include <compare>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bigcount.hpp"
#include "core.hpp"

namespace multitree {

/// Which of the bounds (f, g, h, k) are equalities (E) versus upper bounds (L).
enum class BoundPattern : std::uint8_t { LLLL, ELLL, EELL, EEEL, EEEE };

inline constexpr std::string_view pattern_name(BoundPattern p) {
  switch (p) {
    case BoundPattern::LLLL: return "LLLL";
    case BoundPattern::ELLL: return "ELLL";
    case BoundPattern::EELL: return "EELL";
    case BoundPattern::EEEL: return "EEEL";
    case BoundPattern::EEEE: return "EEEE";
  }
  return "?";
}

inline std::optional<BoundPattern> parse_pattern(std::string_view text) {
  for (auto p : {BoundPattern::LLLL, BoundPattern::ELLL, BoundPattern::EELL,
                 BoundPattern::EEEL, BoundPattern::EEEE})
    if (pattern_name(p) == text) return p;
  return std::nullopt;
}

/// Number of leading equality bounds.
inline constexpr int equality_prefix(BoundPattern p) { return static_cast<int>(p); }

struct DpKey {
  BoundPattern pattern = BoundPattern::LLLL;
  Size f = 0, g = 0, h = 0, k = 0;
  Size n = 1, s = 0, m = 0;

  // Field order matches the snapshot line layout and fixes its sort order.
  friend auto operator<=>(const DpKey&, const DpKey&) = default;
};

inline DpKey make_key(BoundPattern p, Size n, Size s, Size m, Size f, Size g, Size h, Size k) {
  return DpKey{p, f, g, h, k, n, s, m};
}

/// Clamps inequality bounds to the budgets: f <= n-1, g <= s, h <= m, k <= m.
/// Equality bounds are untouched.
inline constexpr DpKey normalize(DpKey key) {
  const int eq = equality_prefix(key.pattern);
  if (eq < 1) key.f = std::min(key.f, key.n == 0 ? 0 : key.n - 1);
  if (eq < 2) key.g = std::min(key.g, key.s);
  if (eq < 3) key.h = std::min(key.h, key.m);
  if (eq < 4) key.k = std::min(key.k, key.m);
  return key;
}

/// True when no graph can satisfy the key's equality bounds.
inline constexpr bool structurally_empty(const DpKey& key) {
  if (key.n == 1 && key.m > 0) return true;
  const int eq = equality_prefix(key.pattern);
  if (eq >= 1) {
    if (key.n == 1 ? key.f != 0 : (key.f == 0 || key.f > key.n - 1)) return true;
  }
  if (eq >= 2 && key.g > key.s) return true;
  if (eq >= 3 && (key.h > key.m || (key.f == 1 && key.h > 0))) return true;
  if (eq >= 4 && key.h + key.k > key.m) return true;
  return false;
}

/// Memo store. Safe for concurrent use: each key is written at most once and
/// readers see either no entry or the final value.
class CountTable {
 public:
  CountTable() = default;
  CountTable(const CountTable& other) : entries_(other.snapshot()) {}
  CountTable& operator=(const CountTable& other) {
    if (this != &other) {
      auto copy = other.snapshot();
      std::unique_lock lock(mutex_);
      entries_ = std::move(copy);
    }
    return *this;
  }

  std::optional<BigCount> find(const DpKey& key) const {
    std::shared_lock lock(mutex_);
    if (auto it = entries_.find(key); it != entries_.end()) {
      hits_.fetch_add(1, std::memory_order_relaxed);
      return it->second;
    }
    misses_.fetch_add(1, std::memory_order_relaxed);
    return std::nullopt;
  }

  /// Stores value unless the key is already present; returns the stored value.
  BigCount insert(const DpKey& key, BigCount value) {
    std::unique_lock lock(mutex_);
    return entries_.try_emplace(key, std::move(value)).first->second;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
  }

  std::uint64_t hits() const { return hits_.load(std::memory_order_relaxed); }
  std::uint64_t misses() const { return misses_.load(std::memory_order_relaxed); }

  /// Entries ordered by key.
  std::map<DpKey, BigCount> snapshot() const {
    std::shared_lock lock(mutex_);
    return entries_;
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<DpKey, BigCount> entries_;
  mutable std::atomic<std::uint64_t> hits_{0};
  mutable std::atomic<std::uint64_t> misses_{0};
};

inline BigCount evaluate(const DpKey& key, CountTable* table);

namespace detail {

inline BigCount evaluate_exact(const DpKey& key, CountTable* table);

inline BigCount compute(const DpKey& key, CountTable* table) {
  if (structurally_empty(key)) return 0;
  auto with = [&key](BoundPattern p, auto&& edit) {
    DpKey sub = key;
    sub.pattern = p;
    edit(sub);
    return sub;
  };
  switch (key.pattern) {
    case BoundPattern::LLLL:
      if (key.f == 0) return evaluate(with(BoundPattern::ELLL, [](DpKey&) {}), table);
      return evaluate(with(BoundPattern::LLLL, [](DpKey& d) { --d.f; }), table) +
             evaluate(with(BoundPattern::ELLL, [](DpKey&) {}), table);
    case BoundPattern::ELLL:
      if (key.g == 0) return evaluate(with(BoundPattern::EELL, [](DpKey&) {}), table);
      return evaluate(with(BoundPattern::ELLL, [](DpKey& d) { --d.g; }), table) +
             evaluate(with(BoundPattern::EELL, [](DpKey&) {}), table);
    case BoundPattern::EELL:
      if (key.h == 0) return evaluate(with(BoundPattern::EEEL, [](DpKey&) {}), table);
      return evaluate(with(BoundPattern::EELL, [](DpKey& d) { --d.h; }), table) +
             evaluate(with(BoundPattern::EEEL, [](DpKey&) {}), table);
    case BoundPattern::EEEL:
      if (key.k == 0) return evaluate(with(BoundPattern::EEEE, [](DpKey&) {}), table);
      return evaluate(with(BoundPattern::EEEL, [](DpKey& d) { --d.k; }), table) +
             evaluate(with(BoundPattern::EEEE, [](DpKey&) {}), table);
    case BoundPattern::EEEE:
      return evaluate_exact(key, table);
  }
  return 0;
}

}  // namespace detail

/// Value of any subproblem. Keys are normalized before memo lookup; a null
/// table disables memoization.
inline BigCount evaluate(const DpKey& raw, CountTable* table) {
  const DpKey key = normalize(raw);
  if (table) {
    if (auto hit = table->find(key)) return *std::move(hit);
  }
  BigCount value = detail::compute(key, table);
  if (table) return table->insert(key, std::move(value));
  return value;
}

/// Number of rooted tree-like multigraphs with stats (n, s, m).
inline BigCount count_rooted(Size n, Size s, Size m, CountTable* table) {
  if (n == 0) throw std::domain_error("count_rooted: n must be at least 1");
  return evaluate(make_key(BoundPattern::LLLL, n, s, m, n - 1, s, m, m), table);
}

inline BigCount family_le(Size n, Size s, Size m, Size f, Size g, Size h, Size k,
                          CountTable* table) {
  return evaluate(make_key(BoundPattern::LLLL, n, s, m, f, g, h, k), table);
}

inline BigCount family_eq_v(Size n, Size s, Size m, Size f, Size g, Size h, Size k,
                            CountTable* table) {
  return evaluate(make_key(BoundPattern::ELLL, n, s, m, f, g, h, k), table);
}

inline BigCount family_eq_vs(Size n, Size s, Size m, Size f, Size g, Size h, Size k,
                             CountTable* table) {
  return evaluate(make_key(BoundPattern::EELL, n, s, m, f, g, h, k), table);
}

inline BigCount family_eq_vsm(Size n, Size s, Size m, Size f, Size g, Size h, Size k,
                              CountTable* table) {
  return evaluate(make_key(BoundPattern::EEEL, n, s, m, f, g, h, k), table);
}

inline BigCount family_exact(Size n, Size s, Size m, Size f, Size g, Size h, Size k,
                             CountTable* table) {
  return evaluate(make_key(BoundPattern::EEEE, n, s, m, f, g, h, k), table);
}

/// Number of multisets of y subtrees, each with f vertices, g loops and h
/// internal extras: C(p + y - 1, y) with p = count_rooted(f, g, h).
inline BigCount w_multiset(Size f, Size g, Size h, Size y, CountTable* table) {
  if (y == 0) return 1;
  if (f == 0) return 0;
  return binomial(count_rooted(f, g, h, table) + (y - 1), y);
}

namespace detail {

inline BigCount evaluate_exact(const DpKey& key, CountTable* table) {
  const auto [pattern, f, g, h, k, n, s, m] = key;
  if (f == 0) return (n == 1 && m == 0 && g == 0 && h == 0 && k == 0) ? 1 : 0;

  Size yMax = (n - 1) / f;
  if (g >= 1) yMax = std::min(yMax, s / g);
  if (h + k >= 1) yMax = std::min(yMax, m / (h + k));

  const BigCount subtrees = count_rooted(f, g, h, table);
  if (subtrees == 0) return 0;

  BigCount total = 0;
  for (Size y = 1; y <= yMax; ++y) {
    const Size rn = n - y * f;
    const Size rs = s - y * g;
    const Size rm = m - y * (h + k);

    // Residual graphs whose children are all strictly below (f, g, h, k).
    BigCount residual = family_le(rn, rs, rm, std::min(rn - 1, f - 1), rs, rm, rm, table);
    if (g >= 1) residual += family_eq_v(rn, rs, rm, f, std::min(rs, g - 1), rm, rm, table);
    if (h >= 1) residual += family_eq_vs(rn, rs, rm, f, g, std::min(rm, h - 1), rm, table);
    if (k >= 1) residual += family_eq_vsm(rn, rs, rm, f, g, h, std::min(rm, k - 1), table);

    if (residual != 0) total += binomial(subtrees + (y - 1), y) * residual;
  }
  return total;
}

}  // namespace detail

}  // namespace multitree

#endif  // MULTITREE_DP_HPP
