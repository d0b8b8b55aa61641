#include <gtest/gtest.h>

#include <random>

#include "reference_oracle.hpp"
#include "sdnim/harness.hpp"
#include "sdnim/oracle.hpp"

using namespace sdnim;

TEST(Solve, Examples) {
  OracleTable t;
  EXPECT_EQ(solve(Position{1, 1, 1, 1}, t), Outcome::P);
  EXPECT_EQ(solve(Position{1, 1, 1, 2}, t), Outcome::N);
  EXPECT_EQ(solve(Position{2, 2, 2, 2, 2}, t), Outcome::N);
}

TEST(SolveWithLength, Examples) {
  OracleTable t;
  EXPECT_EQ(solve_with_length(Position{1, 1, 1, 1}, t), (Solution{Outcome::P, 0}));
  EXPECT_EQ(solve_with_length(Position{1, 1, 1, 2}, t), (Solution{Outcome::N, 1}));
  EXPECT_EQ(solve_with_length(Position{1, 2, 2, 2}, t), (Solution{Outcome::P, 2}));
  // The two-pile line 4,3 -> 3,1 -> 2,1 -> 1,1 is three plies.
  EXPECT_EQ(solve_with_length(Position{4, 3}, t), (Solution{Outcome::N, 3}));
  EXPECT_EQ(solve_with_length(Position{3, 5, 8}, t), (Solution{Outcome::N, 5}));
}

TEST(Solve, PermutationSound) {
  OracleTable shared;
  std::mt19937_64 rng(21);
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<Pile> piles(2 + rng() % 3);
    for (Pile& p : piles) p = 1 + rng() % 9;
    Solution expected = shared.solve(Position(piles));
    std::shuffle(piles.begin(), piles.end(), rng);
    OracleTable fresh;
    ASSERT_EQ(fresh.solve(Position(piles)), expected);
  }
}

TEST(Solve, LengthBoundedBySumMinusCount) {
  OracleTable t;
  for_each_multiset(4, 24, [&](const Position& p) {
    ASSERT_LE(t.solve(p).length, p.sum() - p.size());
  });
}

TEST(Solve, AgreesWithReferenceBruteForce) {
  OracleTable t;
  sdnim::testing::ReferenceOracle ref;
  for (std::size_t n : {2u, 3u, 4u, 5u}) {
    for_each_multiset(n, n == 5 ? 16 : 22, [&](const Position& p) {
      ASSERT_EQ(t.solve(p).outcome == Outcome::P, ref.is_p(p)) << format_position(p);
    });
  }
}

TEST(Solve, BudgetExceededIsAnError) {
  OracleTable tiny(10);
  try {
    tiny.solve(Position{9, 9, 9, 9});
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.position().size(), 4u);
  }
}

TEST(Sweep, Examples) {
  OracleTable t;
  auto only = sweep(4, 4, t);
  ASSERT_EQ(only.size(), 1u);
  EXPECT_EQ(only[0].position, (Position{1, 1, 1, 1}));
  EXPECT_EQ(only[0].outcome, Outcome::P);

  auto p_of = [&](std::size_t n, Pile s) {
    std::vector<Position> out;
    for (const auto& e : sweep(n, s, t))
      if (e.outcome == Outcome::P) out.push_back(e.position);
    return out;
  };
  EXPECT_EQ(p_of(4, 7), (std::vector<Position>{{1, 1, 1, 1}, {1, 1, 1, 3}, {1, 2, 2, 2}}));
  EXPECT_EQ(p_of(2, 4), (std::vector<Position>{{1, 1}, {1, 3}}));

  auto all = sweep(4, 7, t);
  ASSERT_EQ(all.size(), 7u);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.position < b.position; }));
  EXPECT_EQ(csv_row(all[3].position, all[3].outcome, all[3].length), "1;1;1;4,7,N,3");

  EXPECT_THROW(sweep(4, 3, t), std::invalid_argument);
}

TEST(ForEachMultiset, Counts) {
  std::size_t count = 0;
  for_each_multiset(4, 40, [&](const Position&) { ++count; });
  EXPECT_EQ(count, 5104u);
  count = 0;
  for_each_multiset(3, 60, [&](const Position&) { ++count; });
  EXPECT_EQ(count, 6145u);
  count = 0;
  for_each_multiset(2, 100, [&](const Position&) { ++count; });
  EXPECT_EQ(count, 2500u);
}

TEST(CompareWithClassifier, SmallSweepsAgree) {
  EXPECT_TRUE(compare_with_classifier(2, 60).mismatches.empty());
  EXPECT_TRUE(compare_with_classifier(3, 40).mismatches.empty());
  Comparison four = compare_with_classifier(4, 30);
  EXPECT_TRUE(four.mismatches.empty());
  EXPECT_GT(four.ordered_positions, four.multisets);
  EXPECT_THROW(compare_with_classifier(5, 10), std::invalid_argument);
}

TEST(Families, AllOddIsP) {
  OracleTable t;
  std::mt19937_64 rng(4);
  for (int iter = 0; iter < 100; ++iter) {
    std::vector<Pile> piles(2 + rng() % 4);
    for (Pile& p : piles) p = 2 * (rng() % 4) + 1;
    ASSERT_EQ(solve(Position(piles), t), Outcome::P) << format_position(Position(piles));
  }
}

TEST(Families, AllTwos) {
  OracleTable t;
  const std::size_t lengths[] = {1, 2, 2, 3, 4, 4, 5};
  for (std::size_t n = 2; n <= 8; ++n) {
    Solution s = t.solve(Position(std::vector<Pile>(n, 2)));
    EXPECT_EQ(s.outcome, n % 3 == 2 ? Outcome::N : Outcome::P) << n;
    EXPECT_EQ(s.length, lengths[n - 2]) << n;
  }
}

// The four-pile closed form is exact through total 80; at 81 brute force
// finds P-positions the rule calls N. These all have valuations 0<1<2<3 and
// an all-zero digit column between d+2 and the first column whose sum is 1.
TEST(KnownLimits, FourPileRuleFirstDisagreesAtSum81) {
  sdnim::testing::ReferenceOracle ref;
  OracleTable t;
  for (Position p : {Position{8, 12, 14, 47}, Position{8, 12, 15, 46}, Position{8, 14, 15, 44}, Position{12, 14, 15, 40}}) {
    EXPECT_EQ(classify(p), Outcome::N) << format_position(p);
    EXPECT_TRUE(ref.is_p(p)) << format_position(p);
    EXPECT_EQ(solve(p, t), Outcome::P) << format_position(p);
  }
}
