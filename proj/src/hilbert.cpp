#include "schubert/hilbert.hpp"
#include "schubert/families.hpp"
#include "schubert/guard.hpp"

#include <algorithm>
#include <map>

namespace schubert {

Grading parse_grading(const std::string& s) {
  if (s == "z") return Grading::Z;
  if (s == "zn") return Grading::Zn;
  if (s == "z2n") return Grading::Z2n;
  if (s == "zn2") return Grading::Zn2;
  throw std::invalid_argument("unknown grading: " + s);
}

std::string grading_name(Grading g) {
  switch (g) {
  case Grading::Z: return "z";
  case Grading::Zn: return "zn";
  case Grading::Z2n: return "z2n";
  case Grading::Zn2: return "zn2";
  }
  return "?";
}

LaurentPolynomial exponential_weight(Grading g, int i, int j) {
  switch (g) {
  case Grading::Z: return LaurentPolynomial::var(tvar());
  case Grading::Zn: return LaurentPolynomial::var(xvar(i));
  case Grading::Z2n: {
    Monomial m;
    m.set(xvar(i), 1);
    m.set(yvar(j), -1);
    return LaurentPolynomial::term(m, 1);
  }
  case Grading::Zn2: return LaurentPolynomial::var(zvar(i, j));
  }
  return {};
}

LaurentPolynomial ordinary_weight(Grading g, int i, int j) {
  if (g == Grading::Z2n) return LaurentPolynomial::var(xvar(i)) - LaurentPolynomial::var(yvar(j));
  return exponential_weight(g, i, j);
}

namespace {

using Ideal = std::vector<ZMonomial>;

bool divides(const ZMonomial& a, const ZMonomial& b) {
  for (std::size_t v = 0; v < a.size(); ++v)
    if (a[v] > b[v]) return false;
  return true;
}

Ideal minimal_generators(Ideal I) {
  std::sort(I.begin(), I.end());
  I.erase(std::unique(I.begin(), I.end()), I.end());
  Ideal out;
  for (std::size_t a = 0; a < I.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < I.size() && !redundant; ++b)
      if (a != b && divides(I[b], I[a])) redundant = true;
    if (!redundant) out.push_back(I[a]);
  }
  return out;
}

int total(const ZMonomial& m) {
  int d = 0;
  for (auto e : m) d += e;
  return d;
}

class KRecursion {
public:
  KRecursion(int n, Grading g) : n_(n) {
    for (int v = 0; v < n * n; ++v) weights_.push_back(exponential_weight(g, v / n + 1, v % n + 1));
  }

  LaurentPolynomial run(Ideal I) {
    I = minimal_generators(std::move(I));
    auto it = memo_.find(I);
    if (it != memo_.end()) return it->second;
    LaurentPolynomial K = compute(I);
    memo_.emplace(std::move(I), K);
    return K;
  }

private:
  LaurentPolynomial compute(const Ideal& I) {
    if (I.empty()) return LaurentPolynomial(1);
    for (auto& m : I)
      if (total(m) == 0) return LaurentPolynomial();
    // K(I) = K(I + <v>) + wt(v) K(I : v), pivoting on the variable that
    // occurs most often among non-linear generators.
    std::vector<int> freq(n_ * n_, 0);
    bool all_linear = true;
    for (auto& m : I) {
      if (total(m) == 1) continue;
      all_linear = false;
      for (int v = 0; v < n_ * n_; ++v)
        if (m[v]) ++freq[v];
    }
    if (all_linear) {
      LaurentPolynomial K(1);
      for (auto& m : I)
        for (int v = 0; v < n_ * n_; ++v)
          if (m[v]) K *= LaurentPolynomial(1) - weights_[v];
      return K;
    }
    int pivot = static_cast<int>(std::max_element(freq.begin(), freq.end()) - freq.begin());
    Ideal plus = I, colon;
    ZMonomial var(n_ * n_, 0);
    var[pivot] = 1;
    plus.push_back(var);
    for (auto m : I) {
      if (m[pivot]) --m[pivot];
      colon.push_back(std::move(m));
    }
    return run(std::move(plus)) + weights_[pivot] * run(std::move(colon));
  }

  int n_;
  std::vector<LaurentPolynomial> weights_;
  std::map<Ideal, LaurentPolynomial> memo_;
};

} // namespace

LaurentPolynomial k_polynomial(const std::vector<ZMonomial>& gens, int n, Grading g) {
  require_size(n, 6, "k_polynomial");
  KRecursion rec(n, g);
  return rec.run(gens);
}

LaurentPolynomial k_polynomial(const SquarefreeMonomialIdeal& J, Grading g) {
  std::vector<ZMonomial> gens;
  for (auto& c : J.generators()) gens.push_back(zmonomial(J.n(), c));
  return k_polynomial(gens, J.n(), g);
}

namespace {

int fineness(Grading g) {
  switch (g) {
  case Grading::Zn2: return 3;
  case Grading::Z2n: return 2;
  case Grading::Zn: return 1;
  case Grading::Z: return 0;
  }
  return -1;
}

} // namespace

LaurentPolynomial coarsen(const LaurentPolynomial& K, Grading from, Grading to) {
  if (fineness(to) > fineness(from))
    throw std::invalid_argument("cannot coarsen from " + grading_name(from) + " to " + grading_name(to));
  LaurentPolynomial f = K;
  Grading cur = from;
  while (cur != to) {
    if (cur == Grading::Zn2) {
      f = f.substitute([](VarId v) -> std::optional<LaurentPolynomial> {
        if (block_of(v) != Block::Z) return std::nullopt;
        return exponential_weight(Grading::Z2n, first_index(v), second_index(v));
      });
      cur = Grading::Z2n;
    } else if (cur == Grading::Z2n) {
      f = specialize_blocks(f, block_mask(Block::Y), 1);
      cur = Grading::Zn;
    } else {
      f = f.substitute([](VarId v) -> std::optional<LaurentPolynomial> {
        if (block_of(v) != Block::X) return std::nullopt;
        return LaurentPolynomial::var(tvar());
      });
      cur = Grading::Z;
    }
  }
  return f;
}

LaurentPolynomial multidegree(const LaurentPolynomial& K, Grading g, std::optional<int> degree_bound) {
  unsigned blocks = 0;
  switch (g) {
  case Grading::Z: blocks = block_mask(Block::T); break;
  case Grading::Zn: blocks = block_mask(Block::X); break;
  case Grading::Z2n: blocks = block_mask(Block::X) | block_mask(Block::Y); break;
  case Grading::Zn2: blocks = block_mask(Block::Z); break;
  }
  LaurentPolynomial sub = one_minus_substitute(K, blocks, degree_bound);
  if (sub.is_zero()) throw std::invalid_argument("multidegree: expansion vanished below the truncation bound");
  return lowest_degree_terms(sub);
}

LaurentPolynomial multidegree_via_fine(const LaurentPolynomial& K_fine, Grading g) {
  LaurentPolynomial in_u = K_fine.substitute([](VarId v) -> std::optional<LaurentPolynomial> {
    if (block_of(v) != Block::Z) return std::nullopt;
    return LaurentPolynomial(1) - LaurentPolynomial::var(uvar(first_index(v), second_index(v)));
  });
  if (in_u.is_zero()) throw std::invalid_argument("multidegree of the zero module");
  return lowest_degree_terms(in_u).substitute([g](VarId v) -> std::optional<LaurentPolynomial> {
    if (block_of(v) != Block::U) return std::nullopt;
    return ordinary_weight(g, first_index(v), second_index(v));
  });
}

LaurentPolynomial multidegree_additive(const std::set<CellSet>& facets, int n, Grading g) {
  LaurentPolynomial s;
  for (auto& F : facets) {
    LaurentPolynomial t(1);
    for (auto [i, j] : complement(F, n)) t *= ordinary_weight(g, i, j);
    s += t;
  }
  return s;
}

LaurentPolynomial multidegree_of(const Permutation& w, Grading g) {
  auto J = antidiagonal_ideal(w);
  if (g == Grading::Z2n) return multidegree_via_fine(k_polynomial(J, Grading::Zn2), g);
  return multidegree(k_polynomial(J, g), g);
}

TheoremAReport theorem_A_check(const Permutation& w) {
  require_size(w.n(), 5, "theorem_A_check");
  TheoremAReport rep;
  auto J = antidiagonal_ideal(w);
  LaurentPolynomial K_fine = k_polynomial(J, Grading::Zn2);
  LaurentPolynomial K2n = coarsen(K_fine, Grading::Zn2, Grading::Z2n);
  LaurentPolynomial Kn = coarsen(K_fine, Grading::Zn2, Grading::Zn);
  rep.k_single = Kn == grothendieck(w);
  rep.k_double = K2n == double_grothendieck(w);
  LaurentPolynomial S = schubert(w), S2 = double_schubert(w);
  LaurentPolynomial m1 = multidegree(Kn, Grading::Zn);
  LaurentPolynomial m2 = multidegree_via_fine(K_fine, Grading::Z2n);
  rep.mdeg_single = m1 == S;
  rep.mdeg_double = m2 == S2;
  auto facets = stanley_reisner_facets(J);
  rep.additive_single = multidegree_additive(facets, w.n(), Grading::Zn) == m1;
  rep.additive_double = multidegree_additive(facets, w.n(), Grading::Z2n) == m2;
  return rep;
}

bool divided_difference_identity_check(const Permutation& w, int i) {
  if (!has_right_descent(w, i)) throw std::invalid_argument("divided_difference_identity_check needs length(ws_i) < length(w)");
  Permutation v = apply_right_transposition(w, i);
  for (Grading g : {Grading::Zn, Grading::Z2n})
    if (divided_difference(i, multidegree_of(w, g)) != multidegree_of(v, g)) return false;
  return true;
}

} // namespace schubert
