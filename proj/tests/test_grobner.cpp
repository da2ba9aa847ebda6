#include "schubert/grobner.hpp"
#include "schubert/ideal.hpp"

#include <gtest/gtest.h>

#include <cstdint>
#include <map>

using namespace schubert;

namespace {

const OrderTag antidiagonal_orders[] = {OrderTag::AntidiagRevlexNW, OrderTag::AntidiagLexNE};

// All exponent vectors over N variables of total degree d.
void monomials_of_degree(int N, int d, std::vector<ZMonomial>& out) {
  ZMonomial m(N, 0);
  auto rec = [&](auto&& self, int v, int left) -> void {
    if (v == N - 1) {
      m[v] = static_cast<std::uint8_t>(left);
      out.push_back(m);
      m[v] = 0;
      return;
    }
    for (int e = left; e >= 0; --e) {
      m[v] = static_cast<std::uint8_t>(e);
      self(self, v + 1, left - e);
    }
    m[v] = 0;
  };
  rec(rec, 0, d);
}

// Rank modulo a large prime of the rows.
std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> rows) {
  const std::int64_t p = 1000000007;
  auto inv = [&](std::int64_t a) {
    std::int64_t r = 1, e = p - 2;
    a %= p;
    while (e) {
      if (e & 1) r = r * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    std::int64_t s = inv(rows[rank][c]);
    for (auto& x : rows[rank]) x = x * s % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      std::int64_t f = rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] = ((rows[r][k] - f * rows[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

// dim_k of the degree-d part of the ideal generated by the minors of w.
std::size_t ideal_dimension(const Permutation& w, int d) {
  const int n = w.n(), N = n * n;
  std::vector<ZMonomial> basis;
  monomials_of_degree(N, d, basis);
  std::map<ZMonomial, std::size_t> index;
  for (std::size_t k = 0; k < basis.size(); ++k) index[basis[k]] = k;
  std::vector<std::vector<std::int64_t>> rows;
  for (auto& m : schubert_generators(w)) {
    ZPolynomial f = minor_polynomial(m, n);
    int e = d - m.size();
    if (e < 0) continue;
    std::vector<ZMonomial> shifts;
    monomials_of_degree(N, e, shifts);
    for (auto& s : shifts) {
      std::vector<std::int64_t> row(basis.size(), 0);
      for (auto& t : f.terms) {
        ZMonomial prod = t.mono;
        for (int v = 0; v < N; ++v) prod[v] += s[v];
        row[index.at(prod)] = (t.coeff.get_si() % 1000000007 + 1000000007) % 1000000007;
      }
      rows.push_back(std::move(row));
    }
  }
  return rank_mod_p(std::move(rows));
}

// Degree-d monomials divisible by some antidiagonal generator of J_w.
std::size_t antidiagonal_count(const Permutation& w, int d) {
  const int n = w.n();
  auto J = antidiagonal_ideal(w);
  std::vector<ZMonomial> all;
  monomials_of_degree(n * n, d, all);
  std::size_t c = 0;
  for (auto& m : all) {
    std::set<Cell> s;
    for (auto& cell : support(m, n)) s.insert(cell);
    c += J.contains_support(s);
  }
  return c;
}

} // namespace

TEST(TermOrders, NamesAndVariableOrders) {
  EXPECT_EQ(TermOrder(parse_order("antidiag-revlex"), 3).name(), "antidiag-revlex");
  EXPECT_EQ(TermOrder(parse_order("antidiag-lex"), 3).name(), "antidiag-lex");
  EXPECT_EQ(TermOrder(parse_order("diag"), 3).name(), "diag");
  EXPECT_THROW(parse_order("grevlex"), std::invalid_argument);
  // Lex snakes from the northeast corner one row at a time.
  EXPECT_EQ(TermOrder(OrderTag::AntidiagLexNE, 3).variable_order(), (std::vector<int>{2, 1, 0, 5, 4, 3, 8, 7, 6}));
  EXPECT_EQ(TermOrder(OrderTag::AntidiagRevlexNW, 3).variable_order(), (std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8}));
}

TEST(TermOrders, AreMultiplicativeTotalOrders) {
  std::vector<ZMonomial> mons;
  for (int d = 0; d <= 2; ++d) monomials_of_degree(4, d, mons);
  for (OrderTag tag : {OrderTag::AntidiagRevlexNW, OrderTag::AntidiagLexNE, OrderTag::DiagLex}) {
    TermOrder ord(tag, 2);
    for (auto& a : mons)
      for (auto& b : mons) {
        EXPECT_EQ(ord.compare(a, b), -ord.compare(b, a));
        if (a != b) EXPECT_NE(ord.compare(a, b), 0);
        for (auto& c : mons) {
          ZMonomial ac = a, bc = b;
          for (int v = 0; v < 4; ++v) {
            ac[v] += c[v];
            bc[v] += c[v];
          }
          EXPECT_EQ(ord.compare(ac, bc), ord.compare(a, b));
        }
      }
  }
}

TEST(Minors, ExpansionAndInitialTerms) {
  Minor m{{1, 2, 3}, {1, 2, 3}};
  ZPolynomial f = minor_polynomial(m, 3);
  EXPECT_EQ(f.terms.size(), 6u);
  for (OrderTag tag : antidiagonal_orders) {
    TermOrder ord(tag, 3);
    const ZTerm& t = initial_term(f, ord);
    EXPECT_EQ(t.mono, zmonomial(3, {{1, 3}, {2, 2}, {3, 1}}));
    EXPECT_EQ(t.coeff, -1);
  }
  TermOrder diag(OrderTag::DiagLex, 3);
  EXPECT_EQ(initial_term(f, diag).mono, zmonomial(3, {{1, 1}, {2, 2}, {3, 3}}));
  EXPECT_EQ(initial_term(f, diag).coeff, 1);
  normalize(f, diag);
  EXPECT_EQ(f.str().substr(0, 11), "z11*z22*z33");
}

TEST(Minors, EveryMinorHasAntidiagonalInitialTerm) {
  const int n = 4;
  std::vector<int> idx = {1, 2, 3, 4};
  for (OrderTag tag : antidiagonal_orders) {
    TermOrder ord(tag, n);
    for (int k = 1; k <= n; ++k)
      for (unsigned rm = 0; rm < 16; ++rm)
        for (unsigned cm = 0; cm < 16; ++cm) {
          if (__builtin_popcount(rm) != k || __builtin_popcount(cm) != k) continue;
          Minor m;
          for (int a = 0; a < n; ++a) {
            if (rm >> a & 1u) m.rows.push_back(a + 1);
            if (cm >> a & 1u) m.cols.push_back(a + 1);
          }
          EXPECT_EQ(initial_term(minor_polynomial(m, n), ord).mono, zmonomial(n, antidiagonal(m)));
        }
  }
}

TEST(Buchberger, DiagonalControlFor2143) {
  Permutation w = Permutation::parse("2143");
  TermOrder diag(OrderTag::DiagLex, 4);
  auto gens = generator_polynomials(w, diag);
  EXPECT_FALSE(is_groebner_basis(gens, diag));
  BuchbergerStats stats;
  auto basis = buchberger(gens, diag, &stats);
  EXPECT_GT(basis.size(), gens.size());
  EXPECT_GT(stats.nonzero_remainders, 0u);
  EXPECT_TRUE(is_groebner_basis(basis, diag));
  std::vector<ZMonomial> J;
  auto Jw = antidiagonal_ideal(w);
  for (auto& g : Jw.generators()) J.push_back(zmonomial(4, g));
  std::sort(J.begin(), J.end());
  EXPECT_NE(initial_ideal(basis, diag), J);
  EXPECT_THROW(verify_theorem_B(w, diag), std::invalid_argument);
}

TEST(Buchberger, GuardStopsRunawayBases) {
  Permutation w = Permutation::parse("2143");
  TermOrder diag(OrderTag::DiagLex, 4);
  GrobnerLimits lim;
  lim.max_basis_size = 2;
  EXPECT_THROW(buchberger(generator_polynomials(w, diag), diag, nullptr, lim), GrobnerGuardError);
}

TEST(AntidiagonalBasis, AllOfS4AndS5UnderBothOrders) {
  for (int n : {3, 4, 5})
    for (auto& w : all_permutations(n))
      for (OrderTag tag : antidiagonal_orders) {
        auto rep = verify_theorem_B(w, TermOrder(tag, n));
        EXPECT_TRUE(rep.initial_terms_are_antidiagonals) << w.str() << " " << rep.order;
        EXPECT_TRUE(rep.minors_form_basis) << w.str() << " " << rep.order;
        EXPECT_TRUE(rep.initial_ideal_matches) << w.str() << " " << rep.order;
        EXPECT_EQ(rep.basis_size, rep.generators);
      }
}

TEST(AntidiagonalBasis, InstanceWith165Minors) {
  Permutation w = Permutation::parse("13865742");
  for (OrderTag tag : antidiagonal_orders) {
    auto rep = verify_theorem_B(w, TermOrder(tag, 8));
    EXPECT_EQ(rep.generators, 165u);
    EXPECT_TRUE(rep.ok()) << rep.order;
  }
}

TEST(AntidiagonalBasis, HilbertFunctionOracle) {
  // dim I_d from linear algebra equals the number of degree-d monomials in
  // J_w; with J_w inside in(I_w) this forces equality in degree d.
  for (auto& w : all_permutations(3))
    for (int d = 1; d <= 4; ++d) EXPECT_EQ(ideal_dimension(w, d), antidiagonal_count(w, d)) << w.str() << " " << d;
  for (const char* s : {"2143", "1432", "3412", "4231", "1342"}) {
    Permutation w = Permutation::parse(s);
    for (int d = 1; d <= 3; ++d) EXPECT_EQ(ideal_dimension(w, d), antidiagonal_count(w, d)) << s << " " << d;
  }
}

TEST(AntidiagonalBasis, GeneratorSetsGiveTheSameInitialIdeal) {
  for (auto& w : all_permutations(4)) {
    TermOrder ord(OrderTag::AntidiagRevlexNW, 4);
    auto a = initial_ideal(buchberger(generator_polynomials(w, ord, GeneratorSet::Essential), ord), ord);
    auto b = initial_ideal(buchberger(generator_polynomials(w, ord, GeneratorSet::Full), ord), ord);
    EXPECT_EQ(a, b) << w.str();
  }
}
