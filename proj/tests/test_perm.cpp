#include "schubert/guard.hpp"
#include "schubert/perm.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>

using namespace schubert;

namespace {

// Inversion count straight from the definition.
int inversions(const std::vector<int>& v) {
  int c = 0;
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b) c += v[a] > v[b];
  return c;
}

} // namespace

TEST(Permutation, ParsesEveryForm) {
  EXPECT_EQ(Permutation::parse("2143").images(), (std::vector<int>{2, 1, 4, 3}));
  EXPECT_EQ(Permutation::parse("[2,1,4,3]"), Permutation::parse("2143"));
  EXPECT_EQ(Permutation::parse("2,1,4,3"), Permutation::parse("2143"));
  EXPECT_EQ(Permutation::parse("[1, 2, 3, 4, 5, 6, 7, 8, 9, 10]").n(), 10);
}

TEST(Permutation, RejectsMalformedInput) {
  EXPECT_THROW(Permutation::parse("2243"), std::invalid_argument);
  EXPECT_THROW(Permutation::parse("21x3"), std::invalid_argument);
  EXPECT_THROW(Permutation::parse("2,1,5"), std::invalid_argument);
  EXPECT_THROW(Permutation({0, 1}), std::invalid_argument);
}

TEST(Permutation, StringFormSwitchesToCommasFromTen) {
  EXPECT_EQ(Permutation::parse("13865742").str(), "13865742");
  EXPECT_EQ(Permutation::identity(10).str(), "1,2,3,4,5,6,7,8,9,10");
}

TEST(Permutation, CompositionAppliesRightFactorFirst) {
  Permutation u = Permutation::parse("231"), v = Permutation::parse("213");
  EXPECT_EQ((u * v).images(), (std::vector<int>{3, 2, 1}));
  for (auto& w : all_permutations(4)) {
    EXPECT_EQ(w * w.inverse(), Permutation::identity(4));
    EXPECT_EQ(w.inverse().inverse(), w);
  }
}

TEST(Length, MatchesInversionCount) {
  for (int n = 1; n <= 6; ++n)
    for (auto& w : all_permutations(n)) EXPECT_EQ(length(w), inversions(w.images()));
  EXPECT_EQ(length(Permutation::longest(5)), 10);
  EXPECT_EQ(length(Permutation::parse("13865742")), 14);
}

TEST(RankMatrix, CountsNorthwestOnes) {
  Permutation w = Permutation::parse("2143");
  RankMatrix r(w);
  EXPECT_EQ(r(1, 1), 0);
  EXPECT_EQ(r(1, 2), 1);
  EXPECT_EQ(r(3, 3), 2);
  EXPECT_EQ(r(4, 4), 4);
  EXPECT_EQ(r(0, 3), 0);
}

TEST(RankMatrix, RoundTripsOnS4AndS5) {
  for (int n : {4, 5})
    for (auto& w : all_permutations(n)) EXPECT_EQ(from_rank_matrix(rank_matrix(w)), w);
}

TEST(Transpositions, RightSwapsPositionsLeftSwapsValues) {
  Permutation w = Permutation::parse("13865742");
  EXPECT_EQ(apply_right_transposition(w, 3), Permutation::parse("13685742"));
  EXPECT_EQ(apply_left_transposition(3, w), Permutation::parse("14865732"));
  for (auto& v : all_permutations(4))
    for (int i = 1; i < 4; ++i) {
      Permutation s = apply_right_transposition(Permutation::identity(4), i);
      EXPECT_EQ(apply_right_transposition(v, i), v * s);
      EXPECT_EQ(apply_left_transposition(i, v), s * v);
      EXPECT_EQ(has_right_descent(v, i), length(v * s) < length(v));
    }
}

TEST(ReducedWord, MultipliesToLongestTimesW) {
  for (int n = 1; n <= 5; ++n)
    for (auto& w : all_permutations(n)) {
      Word word = reduced_word_to_w0(w);
      Permutation w0 = Permutation::longest(n);
      EXPECT_EQ(static_cast<int>(word.size()), length(w0 * w));
      EXPECT_EQ(product_of_word(word, n), w0 * w);
    }
  EXPECT_EQ(reduced_word_to_w0(Permutation::parse("2143")), (Word{2, 1, 3, 2}));
}

TEST(ReducedWord, ProductOfWordIsLeftToRight) {
  EXPECT_EQ(product_of_word({1, 2}, 3), Permutation::parse("231"));
  EXPECT_EQ(product_of_word({2, 1}, 3), Permutation::parse("312"));
}

TEST(LehmerCode, SumsToLength) {
  for (auto& w : all_permutations(5)) {
    auto c = lehmer_code(w);
    int sum = 0;
    for (int k : c) sum += k;
    EXPECT_EQ(sum, length(w));
  }
  EXPECT_EQ(lehmer_code(Permutation::parse("13865742")), (std::vector<int>{0, 1, 5, 3, 2, 2, 1, 0}));
}

TEST(Enumeration, AllPermutationsAndCoveringPairs) {
  auto s4 = all_permutations(4);
  EXPECT_EQ(s4.size(), 24u);
  EXPECT_TRUE(std::is_sorted(s4.begin(), s4.end()));
  // Each w has as many descents as covering pairs below it; over S_4 that sums to 36.
  EXPECT_EQ(covering_pairs(4).size(), 36u);
  for (auto& [w, i] : covering_pairs(4)) EXPECT_EQ(length(apply_right_transposition(w, i)), length(w) - 1);
}

TEST(Embed, FixesNewLetters) {
  Permutation w = Permutation::parse("213").embed(5);
  EXPECT_EQ(w, Permutation::parse("21345"));
  EXPECT_THROW(Permutation::parse("213").embed(2), std::invalid_argument);
}

TEST(SizeGuard, ReadsEnvironment) {
  ::setenv("SCHUBERT_MAX_N", "4", 1);
  EXPECT_EQ(env_max_n(), 4);
  EXPECT_THROW(require_size(5, 10, "test"), SizeGuardError);
  EXPECT_NO_THROW(require_size(4, 10, "test"));
  ::setenv("SCHUBERT_MAX_N", "junk", 1);
  EXPECT_THROW(env_max_n(), std::invalid_argument);
  ::unsetenv("SCHUBERT_MAX_N");
  EXPECT_THROW(require_size(7, 6, "test"), SizeGuardError);
}
