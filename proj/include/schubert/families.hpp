#ifndef SCHUBERT_FAMILIES_HPP
#define SCHUBERT_FAMILIES_HPP

#include "schubert/perm.hpp"
#include "schubert/poly.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace schubert {

// Top elements of the four families in S_n.
LaurentPolynomial schubert_w0(int n);
LaurentPolynomial double_schubert_w0(int n);
LaurentPolynomial grothendieck_w0(int n);
LaurentPolynomial double_grothendieck_w0(int n);

// Each family is obtained from its top element by the operator recursion
// along reduced_word_to_w0(w).
LaurentPolynomial schubert(const Permutation& w);
LaurentPolynomial double_schubert(const Permutation& w);
LaurentPolynomial grothendieck(const Permutation& w);
LaurentPolynomial double_grothendieck(const Permutation& w);

// Same recursion along an explicit word (applied first letter first).
LaurentPolynomial apply_divided_differences(const Word& word, LaurentPolynomial f);
LaurentPolynomial apply_demazures(const Word& word, LaurentPolynomial f);

enum class Family { Schubert, DoubleSchubert, Grothendieck, DoubleGrothendieck };
LaurentPolynomial family_polynomial(Family f, const Permutation& w);

// Thread-safe memo of family polynomials.
class PolynomialFamilyCache {
public:
  LaurentPolynomial get(Family f, const Permutation& w);
  std::size_t size() const;

private:
  mutable std::mutex mu_;
  std::map<std::pair<Family, Permutation>, LaurentPolynomial> map_;
};

} // namespace schubert

#endif
