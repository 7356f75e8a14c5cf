#include <gtest/gtest.h>

#include <thread>

#include "multitree/dp.hpp"
#include "multitree/oracle.hpp"
#include "support/brute_force.hpp"

using namespace multitree;

namespace {

constexpr auto LLLL = BoundPattern::LLLL;
constexpr auto ELLL = BoundPattern::ELLL;
constexpr auto EELL = BoundPattern::EELL;
constexpr auto EEEL = BoundPattern::EEEL;
constexpr auto EEEE = BoundPattern::EEEE;

// Every key with the given stats and bounds inside the natural ranges.
template <typename Fn>
void for_each_key(Size maxN, Size maxS, Size maxM, Fn&& fn) {
  for (Size n = 1; n <= maxN; ++n)
    for (Size s = 0; s <= maxS; ++s)
      for (Size m = 0; m <= maxM; ++m)
        for (Size f = 0; f + 1 <= n; ++f)
          for (Size g = 0; g <= s; ++g)
            for (Size h = 0; h <= m; ++h)
              for (Size k = 0; k <= m; ++k) fn(n, s, m, f, g, h, k);
}

}  // namespace

TEST(Normalize, Examples) {
  EXPECT_EQ(normalize(make_key(LLLL, 5, 2, 3, 9, 7, 9, 9)), make_key(LLLL, 5, 2, 3, 4, 2, 3, 3));
  const DpKey normal = make_key(LLLL, 5, 2, 3, 4, 2, 3, 3);
  EXPECT_EQ(normalize(normal), normal);
  const DpKey base = make_key(LLLL, 1, 0, 0, 0, 0, 0, 0);
  EXPECT_EQ(normalize(base), base);
}

TEST(Normalize, LeavesEqualityBounds) {
  EXPECT_EQ(normalize(make_key(ELLL, 3, 1, 1, 7, 5, 5, 5)), make_key(ELLL, 3, 1, 1, 7, 1, 1, 1));
  EXPECT_EQ(normalize(make_key(EEEE, 3, 1, 1, 7, 5, 5, 5)), make_key(EEEE, 3, 1, 1, 7, 5, 5, 5));
  const DpKey k = make_key(EELL, 4, 2, 2, 9, 9, 9, 9);
  EXPECT_EQ(normalize(normalize(k)), normalize(k));
}

TEST(Binomial, Examples) {
  EXPECT_EQ(binomial(4, 3), 4);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(100, 50), BigCount("100891344545564193334812497256"));
}

TEST(WMultiset, Examples) {
  CountTable table;
  EXPECT_EQ(w_multiset(3, 2, 1, 0, &table), 1);
  // p(2, 1, 0) = 2, so w = C(4, 3)
  ASSERT_EQ(count_rooted(2, 1, 0, &table), 2);
  EXPECT_EQ(w_multiset(2, 1, 0, 3, &table), 4);
  EXPECT_EQ(w_multiset(1, 0, 0, 5, &table), 1);
}

TEST(WMultiset, MatchesMultisetsOfEnumeratedSubtrees) {
  // Multisets of size y drawn from p types, counted by walking
  // non-increasing index sequences.
  auto multisets = [](std::size_t p, Size y) {
    std::function<std::uint64_t(std::size_t, Size)> go = [&](std::size_t ceiling, Size left) {
      if (left == 0) return std::uint64_t{1};
      std::uint64_t total = 0;
      for (std::size_t i = 0; i <= ceiling && i < p; ++i) total += go(i, left - 1);
      return total;
    };
    return p == 0 ? std::uint64_t{y == 0} : go(p - 1, y);
  };
  CountTable table;
  Enumerator e;
  for (Size f = 1; f <= 4; ++f)
    for (Size g = 0; g <= 2; ++g)
      for (Size h = 0; h <= 2; ++h)
        for (Size y = 0; y <= 4; ++y)
          EXPECT_EQ(w_multiset(f, g, h, y, &table), multisets(e.trees(f, g, h).size(), y))
              << f << g << h << y;
}

TEST(WMultiset, RecurrenceIsExact) {
  CountTable table;
  for (Size f = 1; f <= 5; ++f)
    for (Size g = 0; g <= 2; ++g)
      for (Size h = 0; h <= 2; ++h) {
        const BigCount p = count_rooted(f, g, h, &table);
        for (Size y = 1; y <= 6; ++y) {
          const BigCount numerator = w_multiset(f, g, h, y - 1, &table) * (p + y - 1);
          EXPECT_EQ(numerator % y, 0);
          EXPECT_EQ(w_multiset(f, g, h, y, &table) * y, numerator);
        }
      }
}

TEST(FamilyLe, Examples) {
  CountTable t;
  EXPECT_EQ(family_le(1, 0, 0, 0, 0, 0, 0, &t), 1);
  EXPECT_EQ(family_le(2, 0, 0, 1, 0, 0, 0, &t), 1);
  EXPECT_EQ(family_le(3, 0, 0, 2, 0, 0, 0, &t), 2);
}

TEST(FamilyEqV, Examples) {
  CountTable t;
  EXPECT_EQ(family_eq_v(3, 0, 0, 1, 0, 0, 0, &t), 1);
  EXPECT_EQ(family_eq_v(3, 0, 0, 2, 0, 0, 0, &t), 1);
  EXPECT_EQ(family_eq_v(2, 0, 0, 0, 0, 0, 0, &t), 0);
  EXPECT_EQ(family_eq_v(3, 0, 0, 3, 0, 0, 0, &t), 0);
}

TEST(FamilyEqVs, Examples) {
  CountTable t;
  EXPECT_EQ(family_eq_vs(2, 0, 1, 1, 0, 0, 1, &t), 1);
  EXPECT_EQ(family_eq_vs(2, 0, 1, 1, 0, 0, 0, &t), 0);
  for (Size s = 0; s <= 3; ++s) EXPECT_EQ(family_eq_vs(4, s, 2, 2, s + 1, 2, 2, &t), 0);
}

TEST(FamilyEqVsm, Examples) {
  CountTable t;
  EXPECT_EQ(family_eq_vsm(2, 1, 0, 1, 1, 0, 0, &t), 1);
  EXPECT_EQ(family_eq_vsm(2, 1, 0, 1, 0, 0, 0, &t), 1);
  EXPECT_EQ(family_le(2, 1, 0, 1, 1, 0, 0, &t), 2);
}

TEST(FamilyExact, Examples) {
  CountTable t;
  EXPECT_EQ(family_exact(3, 0, 0, 1, 0, 0, 0, &t), 1);
  EXPECT_EQ(family_exact(2, 2, 0, 1, 1, 0, 0, &t), 1);
  EXPECT_EQ(family_exact(2, 0, 2, 1, 0, 0, 2, &t), 1);
}

TEST(FamilyExact, BaseCases) {
  CountTable t;
  EXPECT_EQ(family_exact(1, 0, 0, 0, 0, 0, 0, &t), 1);
  EXPECT_EQ(family_exact(1, 4, 0, 0, 0, 0, 0, &t), 1);
  EXPECT_EQ(family_exact(1, 0, 1, 0, 0, 0, 0, &t), 0);
  EXPECT_EQ(family_exact(1, 2, 0, 0, 1, 0, 0, &t), 0);
  EXPECT_EQ(family_exact(3, 0, 0, 0, 0, 0, 0, &t), 0);
  EXPECT_EQ(family_exact(3, 0, 0, 3, 0, 0, 0, &t), 0);
  EXPECT_EQ(family_exact(3, 1, 2, 1, 2, 0, 0, &t), 0);
  EXPECT_EQ(family_exact(3, 0, 2, 2, 0, 1, 2, &t), 0);
  // a single vertex cannot hold internal extras
  EXPECT_EQ(family_exact(3, 0, 2, 1, 0, 1, 0, &t), 0);
}

TEST(CountRooted, Examples) {
  CountTable t;
  EXPECT_EQ(count_rooted(1, 0, 0, &t), 1);
  EXPECT_EQ(count_rooted(1, 0, 1, &t), 0);
  const int trees[] = {1, 1, 2, 4, 9, 20, 48, 115};
  for (Size n = 1; n <= 8; ++n) EXPECT_EQ(count_rooted(n, 0, 0, &t), trees[n - 1]);
  EXPECT_EQ(count_rooted(3, 1, 0, &t), 5);
  EXPECT_EQ(count_rooted(3, 0, 1, &t), 3);
  for (Size s = 0; s <= 10; ++s)
    for (Size m = 0; m <= 10; ++m) EXPECT_EQ(count_rooted(2, s, m, &t), s + 1);
}

TEST(CountRooted, RejectsZeroVertices) {
  CountTable t;
  EXPECT_THROW(count_rooted(0, 0, 0, &t), std::domain_error);
}

TEST(CountRooted, LargeTreeCountsMatchDivisorRecurrence) {
  CountTable t;
  const auto expected = bruteforce::rooted_tree_counts(40);
  for (Size n = 1; n <= 40; ++n) EXPECT_EQ(count_rooted(n, 0, 0, &t), expected[n]) << n;
}

TEST(Families, MatchBruteForceOnEveryKey) {
  CountTable t;
  Enumerator e;
  for_each_key(5, 2, 2, [&](Size n, Size s, Size m, Size f, Size g, Size h, Size k) {
    for (auto p : {LLLL, ELLL, EELL, EEEL, EEEE}) {
      const DpKey key = make_key(p, n, s, m, f, g, h, k);
      EXPECT_EQ(evaluate(key, &t), bruteforce::brute_family_count(e, key))
          << pattern_name(p) << ' ' << n << s << m << ' ' << f << g << h << k;
    }
  });
}

TEST(Families, Telescoping) {
  CountTable t;
  for_each_key(6, 2, 2, [&](Size n, Size s, Size m, Size f, Size g, Size h, Size k) {
    const BigCount eqv = family_eq_v(n, s, m, f, g, h, k, &t);
    const BigCount eqvs = family_eq_vs(n, s, m, f, g, h, k, &t);
    const BigCount eqvsm = family_eq_vsm(n, s, m, f, g, h, k, &t);
    const BigCount exact = family_exact(n, s, m, f, g, h, k, &t);
    EXPECT_GE(exact, 0);
    EXPECT_EQ(family_le(n, s, m, f, g, h, k, &t) -
                  (f ? family_le(n, s, m, f - 1, g, h, k, &t) : BigCount(0)),
              eqv);
    EXPECT_EQ(eqv - (g ? family_eq_v(n, s, m, f, g - 1, h, k, &t) : BigCount(0)), eqvs);
    EXPECT_EQ(eqvs - (h ? family_eq_vs(n, s, m, f, g, h - 1, k, &t) : BigCount(0)), eqvsm);
    EXPECT_EQ(eqvsm - (k ? family_eq_vsm(n, s, m, f, g, h, k - 1, &t) : BigCount(0)), exact);
  });
}

TEST(Families, MonotoneInEachBound) {
  CountTable t;
  for_each_key(6, 2, 2, [&](Size n, Size s, Size m, Size f, Size g, Size h, Size k) {
    const BigCount base = family_le(n, s, m, f, g, h, k, &t);
    EXPECT_GE(family_le(n, s, m, f + 1, g, h, k, &t), base);
    EXPECT_GE(family_le(n, s, m, f, g + 1, h, k, &t), base);
    EXPECT_GE(family_le(n, s, m, f, g, h + 1, k, &t), base);
    EXPECT_GE(family_le(n, s, m, f, g, h, k + 1, &t), base);
  });
}

TEST(Families, ClassPartitionSumsToTotal) {
  CountTable t;
  for (Size n = 2; n <= 7; ++n)
    for (Size s = 0; s <= 3; ++s)
      for (Size m = 0; m <= 3; ++m) {
        BigCount sum = 0;
        for (Size f = 1; f < n; ++f)
          for (Size g = 0; g <= s; ++g)
            for (Size h = 0; h <= m; ++h)
              for (Size k = 0; h + k <= m; ++k) sum += family_exact(n, s, m, f, g, h, k, &t);
        EXPECT_EQ(sum, count_rooted(n, s, m, &t));
      }
}

TEST(Memo, TransparentAndStable) {
  CountTable t;
  for (Size n = 1; n <= 6; ++n)
    for (Size s = 0; s <= 2; ++s)
      for (Size m = 0; m <= 2; ++m) {
        const BigCount cold = count_rooted(n, s, m, nullptr);
        EXPECT_EQ(count_rooted(n, s, m, &t), cold);
        EXPECT_EQ(count_rooted(n, s, m, &t), cold);
      }
  EXPECT_GT(t.size(), 0u);
  EXPECT_GT(t.hits(), 0u);
  EXPECT_GT(t.misses(), 0u);
}

TEST(Memo, StoresOnlyNormalizedKeys) {
  CountTable t;
  count_rooted(6, 2, 2, &t);
  for (const auto& [key, value] : t.snapshot()) EXPECT_EQ(normalize(key), key);
}

TEST(Memo, InsertIsWriteOnce) {
  CountTable t;
  const DpKey key = make_key(LLLL, 2, 0, 0, 1, 0, 0, 0);
  EXPECT_EQ(t.insert(key, 1), 1);
  EXPECT_EQ(t.insert(key, 5), 1);
  EXPECT_EQ(*t.find(key), 1);
}

TEST(Memo, ConcurrentSweepsShareOneTable) {
  CountTable shared;
  std::vector<std::thread> workers;
  std::vector<BigCount> results(8);
  for (Size i = 0; i < 8; ++i)
    workers.emplace_back([&, i] { results[i] = count_rooted(12 + i % 4, i % 3, 2, &shared); });
  for (auto& w : workers) w.join();
  CountTable serial;
  for (Size i = 0; i < 8; ++i) EXPECT_EQ(results[i], count_rooted(12 + i % 4, i % 3, 2, &serial));
  EXPECT_EQ(shared.snapshot(), serial.snapshot());
}
