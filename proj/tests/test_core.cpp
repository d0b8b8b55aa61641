#include <gtest/gtest.h>

#include <random>

#include "sdnim/core.hpp"

using namespace sdnim;

TEST(V2, PaperRows) {
  EXPECT_EQ(v2(1440), 5u);
  EXPECT_EQ(v2(13312), 10u);
  EXPECT_EQ(v2(1), 0u);
  EXPECT_EQ(v2(Pile{1} << 63), 63u);
}

TEST(V2, RejectsZero) { EXPECT_THROW(v2(0), std::domain_error); }

TEST(BitAt, OneBasedFromTheRight) {
  EXPECT_EQ(bit_at(294, 2), 1u);
  EXPECT_EQ(bit_at(294, 5), 0u);
  EXPECT_EQ(bit_at(294, 20), 0u);
  EXPECT_EQ(bit_at(294, 64), 0u);
  EXPECT_EQ(bit_at(294, 65), 0u);
  EXPECT_EQ(bit_at(~Pile{0}, 64), 1u);
  EXPECT_THROW(bit_at(294, 0), std::domain_error);
}

TEST(BitLength, Examples) {
  EXPECT_EQ(bit_length(1440), 11u);
  EXPECT_EQ(bit_length(1), 1u);
  EXPECT_EQ(bit_length(64512), 16u);
}

TEST(V2, MatchesLowestSetDigit) {
  for (Pile z = 1; z <= (Pile{1} << 16); ++z) {
    unsigned k = 1;
    while (bit_at(z, k) == 0) ++k;
    ASSERT_EQ(v2(z), k - 1) << z;
  }
}

TEST(Valuation, SumOfEqualValuationsRises) {
  // Exhaustive to 2^9 here; the acceptance suite covers 2^12.
  for (Pile x = 1; x <= 512; ++x)
    for (Pile y = 1; y <= 512; ++y) {
      if (v2(x) == v2(y)) ASSERT_GT(v2(x + y), v2(x));
      else ASSERT_EQ(v2(x + y), std::min(v2(x), v2(y)));
    }
}

TEST(Standardize, Examples) {
  StandardForm sf = standardize(Position{304, 294, 432, 208});
  EXPECT_EQ(sf.piles, (std::vector<Pile>{294, 208, 304, 432}));
  EXPECT_EQ(sf.vals, (std::vector<unsigned>{1, 4, 4, 4}));
  EXPECT_EQ(sf.perm, (std::vector<std::size_t>{1, 3, 0, 2}));

  sf = standardize(Position{1, 1, 1, 1});
  EXPECT_EQ(sf.piles, (std::vector<Pile>{1, 1, 1, 1}));
  EXPECT_EQ(sf.perm, (std::vector<std::size_t>{0, 1, 2, 3}));

  sf = standardize(Position{669, 468, 800, 288});
  EXPECT_EQ(sf.piles, (std::vector<Pile>{669, 468, 288, 800}));
  EXPECT_EQ(sf.vals, (std::vector<unsigned>{0, 2, 5, 5}));
}

TEST(Standardize, SortedPermutation) {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 500; ++iter) {
    std::vector<Pile> piles(2 + rng() % 5);
    for (Pile& p : piles) p = 1 + rng() % 5000;
    Position pos(piles);
    StandardForm sf = standardize(pos);
    ASSERT_TRUE(std::is_sorted(sf.vals.begin(), sf.vals.end()));
    for (std::size_t r = 0; r < piles.size(); ++r) ASSERT_EQ(sf.piles[r], pos[sf.perm[r]]);
    auto sorted_in = piles, sorted_out = sf.piles;
    std::sort(sorted_in.begin(), sorted_in.end());
    std::sort(sorted_out.begin(), sorted_out.end());
    ASSERT_EQ(sorted_in, sorted_out);
  }
}

TEST(LegalMoves, Examples) {
  EXPECT_TRUE(legal_moves(Position{1, 1}).empty());
  auto moves = legal_moves(Position{1, 1, 1, 2});
  ASSERT_EQ(moves.size(), 3u);
  for (const Move& m : moves) {
    EXPECT_EQ(m.split_index, 3u);
    EXPECT_EQ(m.left, 1u);
    EXPECT_EQ(m.right, 1u);
  }
  moves = legal_moves(Position{4, 3});
  EXPECT_EQ(moves, (std::vector<Move>{{0, 1, 1, 2}, {1, 0, 1, 3}, {1, 0, 2, 2}}));
}

TEST(LegalMoves, EmptyExactlyAtTerminal) {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 300; ++iter) {
    std::vector<Pile> piles(2 + rng() % 4);
    for (Pile& p : piles) p = 1 + rng() % 3;
    Position pos(piles);
    ASSERT_EQ(legal_moves(pos).empty(), is_terminal(pos));
  }
}

TEST(ApplyMove, Examples) {
  EXPECT_EQ(apply_move(Position{4, 3}, Move{1, 0, 1, 3}), (Position{3, 1}));
  EXPECT_EQ(apply_move(Position{310, 208, 304, 432}, Move{1, 0, 16, 294}), (Position{294, 16, 304, 432}));
  EXPECT_EQ(apply_move(Position{1, 1, 1, 2}, Move{0, 3, 1, 1}), (Position{1, 1, 1, 1}));
}

TEST(ApplyMove, RejectsIllegal) {
  Position p{4, 3};
  EXPECT_THROW(apply_move(p, Move{2, 0, 1, 3}), std::invalid_argument);  // index out of range
  EXPECT_THROW(apply_move(p, Move{0, 0, 1, 3}), std::invalid_argument);  // delete == split
  EXPECT_THROW(apply_move(p, Move{1, 0, 1, 2}), std::invalid_argument);  // parts do not sum
  EXPECT_THROW(apply_move(p, Move{1, 0, 0, 4}), std::invalid_argument);  // empty part
  EXPECT_THROW(apply_move(p, Move{1, 0, 3, 1}), std::invalid_argument);  // not left <= right
}

TEST(ApplyMove, PreservesCountAndDropsDeletedPile) {
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 500; ++iter) {
    std::vector<Pile> piles(2 + rng() % 4);
    for (Pile& p : piles) p = 1 + rng() % 40;
    Position pos(piles);
    auto moves = legal_moves(pos);
    if (moves.empty()) continue;
    const Move& m = moves[rng() % moves.size()];
    Position next = apply_move(pos, m);
    ASSERT_EQ(next.size(), pos.size());
    ASSERT_EQ(next.sum(), pos.sum() - pos[m.delete_index]);
  }
}

TEST(SplitAtLevel, Examples) {
  EXPECT_EQ(split_at_level(8, 0), (Split{1, 7}));
  EXPECT_EQ(split_at_level(800, 4), (Split{16, 784}));
  EXPECT_EQ(split_at_level(64512, 9), (Split{512, 64000}));
  EXPECT_THROW(split_at_level(64512, 12), std::invalid_argument);
  EXPECT_THROW(split_at_level(800, 5), std::invalid_argument);
  EXPECT_THROW(split_at_level(7, 0), std::invalid_argument);
}

TEST(SplitAtLevel, PartsShareTheLevel) {
  for (Pile z = 2; z <= 4096; ++z)
    for (unsigned k = 0; k < v2(z); ++k) {
      Split s = split_at_level(z, k);
      ASSERT_EQ(s.power + s.rest, z);
      ASSERT_EQ(v2(s.power), k);
      ASSERT_EQ(v2(s.rest), k);
    }
}

TEST(IsTerminal, Examples) {
  EXPECT_TRUE(is_terminal(Position{1, 1, 1, 1}));
  EXPECT_TRUE(is_terminal(Position{1, 1}));
  EXPECT_FALSE(is_terminal(Position{1, 1, 1, 2}));
}

TEST(Position, Invariants) {
  EXPECT_THROW(Position({3}), std::invalid_argument);
  EXPECT_THROW(Position({3, 0}), std::invalid_argument);
}

TEST(ParsePosition, TextFormat) {
  EXPECT_EQ(parse_position("294,208,304,432"), (Position{294, 208, 304, 432}));
  EXPECT_EQ(parse_position(" 4, 3"), (Position{4, 3}));
  EXPECT_EQ(format_position(Position{294, 208, 304, 432}), "294,208,304,432");
  for (const char* bad : {"", "5", "0,4", "-1,3", "1,,2", "1,2,", "a,b", "1.5,2", "99999999999999999999,1"})
    EXPECT_THROW(parse_position(bad), std::invalid_argument) << bad;
}
