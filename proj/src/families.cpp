#include "schubert/families.hpp"

namespace schubert {

LaurentPolynomial schubert_w0(int n) {
  Monomial m;
  for (int i = 1; i < n; ++i) m.set(xvar(i), n - i);
  return LaurentPolynomial::term(m, 1);
}

LaurentPolynomial double_schubert_w0(int n) {
  LaurentPolynomial p(1);
  for (int i = 1; i < n; ++i)
    for (int j = 1; i + j <= n; ++j) p *= LaurentPolynomial::var(xvar(i)) - LaurentPolynomial::var(yvar(j));
  return p;
}

LaurentPolynomial grothendieck_w0(int n) {
  LaurentPolynomial p(1);
  for (int i = 1; i < n; ++i) p *= (LaurentPolynomial(1) - LaurentPolynomial::var(xvar(i))).pow(n - i);
  return p;
}

LaurentPolynomial double_grothendieck_w0(int n) {
  LaurentPolynomial p(1);
  for (int i = 1; i < n; ++i)
    for (int j = 1; i + j <= n; ++j) {
      Monomial m;
      m.set(xvar(i), 1);
      m.set(yvar(j), -1);
      p *= LaurentPolynomial(1) - LaurentPolynomial::term(m, 1);
    }
  return p;
}

LaurentPolynomial apply_divided_differences(const Word& word, LaurentPolynomial f) {
  for (int i : word) f = divided_difference(i, f);
  return f;
}

LaurentPolynomial apply_demazures(const Word& word, LaurentPolynomial f) {
  for (int i : word) f = demazure(i, f);
  return f;
}

LaurentPolynomial schubert(const Permutation& w) {
  return apply_divided_differences(reduced_word_to_w0(w), schubert_w0(w.n()));
}

LaurentPolynomial double_schubert(const Permutation& w) {
  return apply_divided_differences(reduced_word_to_w0(w), double_schubert_w0(w.n()));
}

LaurentPolynomial grothendieck(const Permutation& w) {
  return apply_demazures(reduced_word_to_w0(w), grothendieck_w0(w.n()));
}

LaurentPolynomial double_grothendieck(const Permutation& w) {
  return apply_demazures(reduced_word_to_w0(w), double_grothendieck_w0(w.n()));
}

LaurentPolynomial family_polynomial(Family f, const Permutation& w) {
  switch (f) {
  case Family::Schubert: return schubert(w);
  case Family::DoubleSchubert: return double_schubert(w);
  case Family::Grothendieck: return grothendieck(w);
  case Family::DoubleGrothendieck: return double_grothendieck(w);
  }
  return {};
}

LaurentPolynomial PolynomialFamilyCache::get(Family f, const Permutation& w) {
  auto key = std::make_pair(f, w);
  {
    std::lock_guard lock(mu_);
    auto it = map_.find(key);
    if (it != map_.end()) return it->second;
  }
  LaurentPolynomial p = family_polynomial(f, w);
  std::lock_guard lock(mu_);
  return map_.try_emplace(key, std::move(p)).first->second;
}

std::size_t PolynomialFamilyCache::size() const {
  std::lock_guard lock(mu_);
  return map_.size();
}

} // namespace schubert
