#include "schubert/families.hpp"
#include "schubert/json_io.hpp"

#include <gtest/gtest.h>

using namespace schubert;

TEST(Json, PermutationRoundTrip) {
  Permutation w = Permutation::parse("13865742");
  EXPECT_EQ(to_json(w), json::parse("[1,3,8,6,5,7,4,2]"));
  EXPECT_EQ(permutation_from_json(to_json(w)), w);
  EXPECT_THROW(permutation_from_json(json::parse("[1,1]")), std::invalid_argument);
}

TEST(Json, PolynomialRoundTrip) {
  for (auto& w : all_permutations(4)) {
    EXPECT_EQ(polynomial_from_json(to_json(schubert::schubert(w))), schubert::schubert(w));
    EXPECT_EQ(polynomial_from_json(to_json(double_grothendieck(w))), double_grothendieck(w));
  }
  auto j = to_json(schubert::schubert(Permutation::parse("2143")));
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[0]["coeff"], 1);
  EXPECT_EQ(j[0]["exps"]["x1"], 2);
}

TEST(Json, BigCoefficientsBecomeStrings) {
  mpz_class big("123456789012345678901234567890");
  LaurentPolynomial f = LaurentPolynomial(big) * LaurentPolynomial::var(xvar(1));
  auto j = to_json(f);
  EXPECT_TRUE(j[0]["coeff"].is_string());
  EXPECT_EQ(polynomial_from_json(j), f);
}

TEST(Json, PipeDreamRoundTrip) {
  PipeDream D(4, {{1, 1}, {1, 3}});
  EXPECT_EQ(to_json(D), json::parse(R"({"n":4,"crosses":[[1,1],[1,3]]})"));
  EXPECT_EQ(pipe_dream_from_json(to_json(D)), D);
}

TEST(Json, StructuredValues) {
  EXPECT_EQ(to_json(Minor{{1, 2}, {3, 4}}), json::parse(R"({"rows":[1,2],"cols":[3,4]})"));
  auto J = antidiagonal_ideal(Permutation::parse("2143"));
  EXPECT_EQ(to_json(J), json::parse("[[[1,1]],[[1,3],[2,2],[3,1]]]"));
  EXPECT_EQ(to_json(FacetSet{{1, 2}, {2, 3}}), json::parse("[[1,2],[2,3]]"));
  EXPECT_EQ(to_json(ExponentArray::from_rows({{1, 0}, {0, 2}})), json::parse("[[1,0],[0,2]]"));
  auto tree = vertex_decompose(subword_complex({2, 3, 2}, Permutation::parse("1432")));
  auto t = to_json(tree);
  EXPECT_EQ(t["kind"], "split");
}
