#include <gtest/gtest.h>

#include "alglength/bounds.hpp"
#include "alglength/families.hpp"
#include "alglength/length.hpp"
#include "support/random_algebra.hpp"

using namespace alglength;

namespace {

CharSeq seq(std::initializer_list<std::uint64_t> xs) { return CharSeq{xs, false}; }

/// Reference search: every h with m_h >= 2 needs t1 <= t2 < h (t1 < t2 when
/// strict) and t1 > 0 with m_t1 + m_t2 = m_h.
bool chain_by_search(const CharSeq &s, bool strict) {
  for (std::size_t h = 1; h < s.size(); ++h) {
    if (s[h] < 2)
      continue;
    bool found = false;
    for (std::size_t t1 = 1; t1 < h && !found; ++t1)
      for (std::size_t t2 = strict ? t1 + 1 : t1; t2 < h && !found; ++t2)
        found = s[t1] + s[t2] == s[h];
    if (!found)
      return false;
  }
  return true;
}

CharSeq random_sequence(testkit::Rng &rng) {
  CharSeq s{{0}, false};
  const std::size_t len = testkit::uniform(rng, 1, 8);
  std::uint64_t m = 1;
  for (std::size_t i = 0; i < len; ++i) {
    m += testkit::uniform(rng, 0, 3);
    s.terms.push_back(i == 0 ? 1 : m);
  }
  return s;
}

} // namespace

TEST(AdditionChain, Examples) {
  EXPECT_TRUE(check_addition_chain(seq({0, 1, 2, 4}), false).holds);
  ASSERT_FALSE(chain_by_search(seq({0, 1, 2, 4}), true));
  EXPECT_FALSE(check_addition_chain(seq({0, 1, 2, 4}), true).holds);
  EXPECT_TRUE(check_addition_chain(seq({0, 1, 1, 2, 3, 5}), true).holds);
}

TEST(AdditionChain, WitnessesAreValid) {
  const auto s = seq({0, 1, 1, 2, 3, 5});
  const auto v = check_addition_chain(s, true);
  ASSERT_TRUE(v.holds);
  ASSERT_EQ(v.witnesses.size(), 3u);
  for (const auto &w : v.witnesses) {
    EXPECT_LT(w.t1, w.t2);
    EXPECT_LT(w.t2, w.h);
    EXPECT_GT(w.t1, 0u);
    EXPECT_EQ(s[w.t1] + s[w.t2], s[w.h]);
  }
}

TEST(AdditionChain, ReportsOffendingTerms) {
  const auto v = check_addition_chain(seq({0, 1, 2, 4}), true);
  ASSERT_EQ(v.violations.size(), 2u);
  EXPECT_EQ(v.violations[0], (Violation{2, 2}));
}

TEST(AdditionChain, Malformed) {
  EXPECT_THROW(check_addition_chain(seq({1, 2}), false), WellformednessError);
  EXPECT_THROW(check_addition_chain(seq({0, 2, 1}), false), WellformednessError);
  EXPECT_THROW(check_power_bound(seq({0, 0, 1})), WellformednessError);
  EXPECT_THROW(check_fibonacci_bound(seq({}), 1), WellformednessError);
}

TEST(AdditionChain, AgreesWithSearchOnRandomSequences) {
  testkit::Rng rng(1);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto s = random_sequence(rng);
    EXPECT_EQ(check_addition_chain(s, false).holds, chain_by_search(s, false));
    EXPECT_EQ(check_addition_chain(s, true).holds, chain_by_search(s, true));
  }
}

TEST(PowerBound, Examples) {
  const auto ex = make_example({Family::power2, 6});
  const auto r = compute_length(ex.table, ex.gens);
  ASSERT_EQ(r.charseq, seq({0, 1, 2, 4, 8, 16}));
  const auto v = check_power_bound(r.charseq);
  EXPECT_TRUE(v.holds);
  EXPECT_TRUE(v.tight);

  const auto bad = check_power_bound(seq({0, 1, 3}));
  EXPECT_FALSE(bad.holds);
  ASSERT_EQ(bad.violations.size(), 1u);
  EXPECT_EQ(bad.violations[0].h, 2u);

  EXPECT_TRUE(check_power_bound(seq({0, 1, 1, 1})).holds);
}

TEST(FibonacciBound, Examples) {
  const auto ex = make_example({Family::fib_lc, 6});
  const auto r = compute_length(ex.table, ex.gens);
  ASSERT_EQ(r.charseq, seq({0, 1, 1, 2, 3, 5}));
  const auto v = check_fibonacci_bound(r.charseq, 1);
  EXPECT_TRUE(v.holds);
  EXPECT_TRUE(v.tight);

  const auto bad = check_fibonacci_bound(seq({0, 1, 2, 4}), 1);
  EXPECT_FALSE(bad.holds);
  ASSERT_FALSE(bad.violations.empty());
  EXPECT_EQ(bad.violations[0].h, 2u);

  const auto ones = seq({0, 1, 1, 1, 1});
  for (std::size_t k = 1; k <= 4; ++k)
    EXPECT_TRUE(check_fibonacci_bound(ones, k).holds) << k;
}

TEST(FibonacciBound, GeneralK) {
  EXPECT_TRUE(check_fibonacci_bound(seq({0, 1, 1, 1, 2, 3, 5}), 3).holds);
  EXPECT_FALSE(check_fibonacci_bound(seq({0, 1, 1, 2, 3}), 3).holds);
  EXPECT_FALSE(check_fibonacci_bound(seq({0, 1, 1, 1, 3}), 3).holds);
  EXPECT_THROW(check_fibonacci_bound(seq({0, 1, 1}), 0), KOutOfRange);
  EXPECT_THROW(check_fibonacci_bound(seq({0, 1, 1}), 3), KOutOfRange);
}

TEST(Fibonacci, Values) {
  EXPECT_EQ(fibonacci(1), 1);
  EXPECT_EQ(fibonacci(2), 1);
  EXPECT_EQ(fibonacci(7), 13);
  Integer a = 1, b = 1;
  for (int i = 3; i <= 14; ++i) {
    const Integer c = a + b;
    a = b;
    b = c;
  }
  EXPECT_EQ(fibonacci(14), b);
  EXPECT_EQ(fibonacci(14), 377);
  EXPECT_EQ(fibonacci(100), Integer("354224848179261915075"));
  EXPECT_THROW(fibonacci(0), RangeError);
  EXPECT_THROW(fibonacci(-3), RangeError);
}

TEST(BoundProperties, FibonacciImpliesPower) {
  testkit::Rng rng(2);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto s = random_sequence(rng);
    if (check_fibonacci_bound(s, 1).holds) {
      EXPECT_TRUE(check_power_bound(s).holds);
    }
  }
}

TEST(BoundProperties, GeneralSequencesObeyChainAndPowerBound) {
  testkit::Rng rng(3);
  int generating = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto f = FieldDescriptor::prime(trial % 2 ? 2 : 3);
    const std::size_t n = testkit::uniform(rng, 2, 6);
    const auto a = testkit::random_algebra(rng, f, n, 0.3);
    const auto r = compute_length(a, testkit::random_gens(rng, a, 1));
    if (!r.generating())
      continue;
    ++generating;
    EXPECT_TRUE(is_wellformed(r.charseq));
    EXPECT_TRUE(check_addition_chain(r.charseq, false).holds);
    EXPECT_TRUE(check_power_bound(r.charseq).holds);
  }
  EXPECT_GT(generating, 50);
}

TEST(BoundProperties, LocallyComplexSequences) {
  testkit::Rng rng(4);
  int generating = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = testkit::uniform(rng, 3, 7);
    const auto a = testkit::random_lc_algebra(rng, n, 0.35);
    const auto s = testkit::random_gens(rng, a, testkit::uniform(rng, 1, 2));
    const auto r = compute_length(a, s);
    if (!r.generating())
      continue;
    ++generating;
    EXPECT_TRUE(check_addition_chain(r.charseq, true).holds);
    EXPECT_TRUE(check_fibonacci_bound(r.charseq, 1).holds);
    const std::size_t k = r.dims[1] - 1;
    if (k >= 1 && k < r.charseq.size()) {
      EXPECT_TRUE(check_fibonacci_bound(r.charseq, k).holds);
    }
    EXPECT_TRUE(check_dimension_gap(r.dims, n).holds);
    EXPECT_EQ(compute_length(a, s, [] {
                LengthOptions o;
                o.lc_shortcut = true;
                return o;
              }()),
              r);
  }
  EXPECT_GT(generating, 30);
}

TEST(DimensionGap, Families) {
  const auto gap7 = make_example({Family::lc_gap7, 0});
  EXPECT_TRUE(check_dimension_gap(compute_length(gap7.table, gap7.gens).dims, 7).holds);
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto ex = make_example({Family::lc_gap_family, n});
    const auto r = compute_length(ex.table, ex.gens);
    EXPECT_TRUE(check_dimension_gap(r.dims, ex.table.dim()).holds) << n;
  }
  EXPECT_FALSE(check_dimension_gap({1, 2, 3, 3, 3, 3}, 6).holds);
}

TEST(VerifyBounds, CollectsEveryCheck) {
  const auto r = verify_bounds(seq({0, 1, 1, 2, 3}), 2);
  EXPECT_TRUE(r.wellformed);
  ASSERT_TRUE(r.strict_addition_chain && r.fibonacci_bound && r.k_bound && r.power_bound);
  EXPECT_TRUE(r.strict_addition_chain->holds);
  EXPECT_TRUE(r.fibonacci_bound->holds);
  EXPECT_TRUE(r.k_bound->holds);

  const auto bad = verify_bounds(seq({0, 2, 1}), 1);
  EXPECT_FALSE(bad.wellformed);
  EXPECT_FALSE(bad.addition_chain.has_value());
}
