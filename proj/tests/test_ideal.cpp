#include "schubert/ideal.hpp"
#include "schubert/pipedream.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>

using namespace schubert;

namespace {

std::map<int, std::size_t> sizes(const std::set<Minor>& minors) {
  std::map<int, std::size_t> out;
  for (auto& m : minors) ++out[m.size()];
  return out;
}

std::set<CellSet> gens(std::initializer_list<CellSet> list) { return std::set<CellSet>(list); }

// Minimal vertex covers by checking every subset of the grid.
std::set<CellSet> covers_by_subsets(const SquarefreeMonomialIdeal& J) {
  const int n = J.n(), N = n * n;
  auto cell = [n](int v) { return Cell{v / n + 1, v % n + 1}; };
  std::vector<unsigned> edges;
  for (auto& g : J.generators()) {
    unsigned e = 0;
    for (auto [i, j] : g) e |= 1u << ((i - 1) * n + (j - 1));
    edges.push_back(e);
  }
  auto covers = [&](unsigned s) {
    return std::all_of(edges.begin(), edges.end(), [&](unsigned e) { return (e & s) != 0; });
  };
  std::set<CellSet> out;
  for (unsigned s = 0; s < (1u << N); ++s) {
    if (!covers(s)) continue;
    bool minimal = true;
    for (int v = 0; v < N && minimal; ++v)
      if ((s >> v & 1u) && covers(s & ~(1u << v))) minimal = false;
    if (!minimal) continue;
    CellSet c;
    for (int v = 0; v < N; ++v)
      if (s >> v & 1u) c.push_back(cell(v));
    out.insert(c);
  }
  return out;
}

bool meets(const CellSet& g, const std::set<Cell>& crosses) {
  return std::any_of(g.begin(), g.end(), [&](const Cell& c) { return crosses.count(c) > 0; });
}

} // namespace

TEST(Generators, Fixture2143) {
  Permutation w = Permutation::parse("2143");
  std::set<Minor> expected = {Minor{{1}, {1}}, Minor{{1, 2, 3}, {1, 2, 3}}};
  EXPECT_EQ(schubert_generators(w), expected);
  EXPECT_EQ(schubert_generators(w, GeneratorSet::Essential), expected);
  EXPECT_EQ(essential_set(w), (std::vector<Cell>{{1, 1}, {3, 3}}));
  EXPECT_EQ(antidiagonal_ideal(w).generators(), gens({{{1, 1}}, {{1, 3}, {2, 2}, {3, 1}}}));
}

TEST(Generators, LongestElementGivesVariables) {
  for (int n = 2; n <= 5; ++n) {
    std::set<Minor> expected;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; i + j <= n; ++j) expected.insert(Minor{{i}, {j}});
    EXPECT_EQ(schubert_generators(Permutation::longest(n)), expected);
  }
}

TEST(Generators, CountsFor13865742) {
  Permutation w = Permutation::parse("13865742");
  auto regions = schubert_generators(w);
  EXPECT_EQ(regions.size(), 165u);
  EXPECT_EQ(sizes(regions), (std::map<int, std::size_t>{{2, 21}, {3, 144}}));
  auto essential = schubert_generators(w, GeneratorSet::Essential);
  auto full = schubert_generators(w, GeneratorSet::Full);
  EXPECT_TRUE(std::includes(regions.begin(), regions.end(), essential.begin(), essential.end()));
  EXPECT_TRUE(std::includes(full.begin(), full.end(), regions.begin(), regions.end()));
  EXPECT_EQ(antidiagonal_ideal(w, GeneratorSet::Essential), antidiagonal_ideal(w, GeneratorSet::Full));
  EXPECT_EQ(antidiagonal_ideal(w, GeneratorSet::Regions), antidiagonal_ideal(w, GeneratorSet::Full));
}

TEST(Generators, AllSetsGiveTheSameAntidiagonalIdeal) {
  for (int n = 1; n <= 5; ++n)
    for (auto& w : all_permutations(n)) {
      auto J = antidiagonal_ideal(w, GeneratorSet::Full);
      EXPECT_EQ(antidiagonal_ideal(w, GeneratorSet::Essential), J) << w.str();
      EXPECT_EQ(antidiagonal_ideal(w, GeneratorSet::Regions), J) << w.str();
    }
}

TEST(Antidiagonals, Fixture1432) {
  auto J = antidiagonal_ideal(Permutation::parse("1432"));
  EXPECT_EQ(J.generators(), gens({{{1, 2}, {2, 1}}, {{1, 3}, {2, 1}}, {{1, 3}, {2, 2}}, {{1, 2}, {3, 1}}, {{2, 2}, {3, 1}}}));
  auto facets = stanley_reisner_facets(J);
  EXPECT_EQ(facets.size(), 5u);
  for (auto& F : facets) EXPECT_EQ(F.size(), 13u);
}

TEST(Antidiagonals, MinorCellsRunSouthwest) {
  EXPECT_EQ(antidiagonal(Minor{{1, 3}, {2, 4}}), (std::vector<Cell>{{1, 4}, {3, 2}}));
}

TEST(Ideal, MinimalizeAndMembership) {
  SquarefreeMonomialIdeal J(3, gens({{{1, 1}}, {{1, 1}, {2, 2}}, {{2, 1}, {1, 2}}}));
  J.minimalize();
  EXPECT_EQ(J.generators().size(), 2u);
  EXPECT_TRUE(J.contains_support({{1, 1}, {3, 3}}));
  EXPECT_FALSE(J.contains_support({{1, 2}, {3, 3}}));
}

TEST(VertexCovers, MatchSubsetSearch) {
  for (int n = 2; n <= 4; ++n)
    for (auto& w : all_permutations(n)) {
      auto J = antidiagonal_ideal(w);
      EXPECT_EQ(minimal_vertex_covers(J), covers_by_subsets(J)) << w.str();
    }
}

TEST(VertexCovers, PurityAndPipeDreamsOnS5) {
  for (int n = 1; n <= 5; ++n)
    for (auto& w : all_permutations(n)) {
      auto facets = stanley_reisner_facets(antidiagonal_ideal(w));
      PipeDreamSet complements;
      for (auto& F : facets) {
        EXPECT_EQ(static_cast<int>(F.size()), n * n - length(w)) << w.str();
        complements.insert(facet_complement(F, n));
      }
      EXPECT_EQ(complements, rp_bruteforce(w)) << w.str();
      EXPECT_TRUE(prime_decomposition_check(w));
    }
}

TEST(VertexCovers, ZeroIdealHasTheFullFacet) {
  auto facets = stanley_reisner_facets(antidiagonal_ideal(Permutation::identity(3)));
  ASSERT_EQ(facets.size(), 1u);
  EXPECT_EQ(facets.begin()->size(), 9u);
}

TEST(VertexCovers, MinimalPoisoning) {
  // Every generator meets every reduced pipe dream, and no cross can be spared.
  for (int n = 2; n <= 4; ++n)
    for (auto& w : all_permutations(n)) {
      auto J = antidiagonal_ideal(w);
      for (auto& D : rp_mitosis(w)) {
        for (auto& g : J.generators()) EXPECT_TRUE(meets(g, D.crosses()));
        for (auto& c : D.crosses()) {
          auto fewer = D.crosses();
          fewer.erase(c);
          bool all_met = std::all_of(J.generators().begin(), J.generators().end(),
                                     [&](const CellSet& g) { return meets(g, fewer); });
          EXPECT_FALSE(all_met) << w.str();
        }
      }
    }
}

TEST(VertexCovers, GuardRefusesLargeGrids) {
  EXPECT_THROW(stanley_reisner_facets(antidiagonal_ideal(Permutation::identity(7))), std::runtime_error);
}

TEST(Complement, RoundTrip) {
  CellSet s = {{1, 2}, {2, 1}};
  EXPECT_EQ(complement(complement(s, 3), 3), s);
  EXPECT_EQ(complement(s, 3).size(), 7u);
  EXPECT_EQ(facet_complement(complement(s, 3), 3), PipeDream(3, {{1, 2}, {2, 1}}));
}
