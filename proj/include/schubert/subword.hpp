#ifndef SCHUBERT_SUBWORD_HPP
#define SCHUBERT_SUBWORD_HPP

#include "schubert/perm.hpp"

#include <algorithm>
#include <memory>
#include <set>
#include <vector>

namespace schubert {

// S_N as a Coxeter system with generators s_1..s_{N-1}. The subword
// algorithms below only use this interface.
struct SymmetricGroup {
  using Element = Permutation;
  int N;

  Element identity() const { return Permutation::identity(N); }
  int length(const Element& w) const { return schubert::length(w); }
  bool right_descent(const Element& w, int s) const { return w(s) > w(s + 1); }
  bool left_descent(int s, const Element& w) const { return w.inverse()(s) > w.inverse()(s + 1); }
  Element right_multiply(const Element& w, int s) const { return apply_right_transposition(w, s); }
  Element left_multiply(int s, const Element& w) const { return apply_left_transposition(s, w); }
};

// Fold of Q in the degenerate Hecke algebra: multiply on the right only
// when the length goes up.
template <class System>
typename System::Element demazure_product(const System& W, const Word& Q) {
  auto p = W.identity();
  for (int s : Q)
    if (!W.right_descent(p, s)) p = W.right_multiply(p, s);
  return p;
}

// Whether some subword of Q[from..] is a reduced word for pi, by peeling
// right descents of pi from the end of Q.
template <class System>
bool word_contains(const System& W, const Word& Q, typename System::Element pi, std::size_t from = 0) {
  for (std::size_t k = Q.size(); k > from; --k)
    if (W.right_descent(pi, Q[k - 1])) pi = W.right_multiply(pi, Q[k - 1]);
  return pi == W.identity();
}

// Positions are 1-based.
using Face = std::vector<int>;
using FacetSet = std::set<Face>;

// Facets of Delta(Q, pi): complements of position sets spelling reduced
// words for pi.
template <class System>
FacetSet subword_facets(const System& W, const Word& Q, const typename System::Element& pi) {
  const int m = static_cast<int>(Q.size());
  const int L = W.length(pi);
  FacetSet facets;
  std::vector<int> chosen;
  // rest = u^{-1} pi where u is the product of the chosen letters.
  auto rec = [&](auto&& self, int k, const typename System::Element& rest) -> void {
    if (static_cast<int>(chosen.size()) == L) {
      Face F;
      for (int p = 1; p <= m; ++p)
        if (!std::binary_search(chosen.begin(), chosen.end(), p)) F.push_back(p);
      facets.insert(std::move(F));
      return;
    }
    if (!word_contains(W, Q, rest, k)) return;
    for (int pos = k; pos < m; ++pos) {
      int s = Q[pos];
      if (!W.left_descent(s, rest)) continue;
      chosen.push_back(pos + 1);
      self(self, pos + 1, W.left_multiply(s, rest));
      chosen.pop_back();
    }
  };
  rec(rec, 0, pi);
  return facets;
}

// Finite simplicial complex given by its facets. No facets is the void
// complex; the single empty facet is {emptyset}.
class SimplicialComplex {
public:
  SimplicialComplex() = default;
  explicit SimplicialComplex(FacetSet facets);

  const FacetSet& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  bool is_pure() const;
  bool contains_face(const Face& F) const;
  std::vector<int> vertices() const;

  SimplicialComplex link(const Face& F) const;
  SimplicialComplex deletion(const Face& F) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
  FacetSet facets_;
};

class SubwordComplex {
public:
  // pi is embedded into S_N with N large enough for the letters of Q.
  SubwordComplex(Word Q, const Permutation& pi);

  const Word& word() const { return Q_; }
  const Permutation& pi() const { return pi_; }
  const FacetSet& facets() const { return complex_.facets(); }
  const SimplicialComplex& complex() const { return complex_; }
  bool is_void() const { return complex_.is_void(); }
  int facet_size() const { return static_cast<int>(Q_.size()) - length(pi_); }

private:
  Word Q_;
  Permutation pi_;
  SimplicialComplex complex_;
};

SubwordComplex subword_complex(const Word& Q, const Permutation& pi);
Permutation demazure_product(const Word& Q, int n);
bool word_contains(const Word& Q, const Permutation& pi);

// Brute-force facets over all position subsets; an oracle for small words.
FacetSet subword_facets_bruteforce(const Word& Q, const Permutation& pi);

// Row-reading word of the full n x n grid: letter q+p-1 for (q,p), rows
// top to bottom, each right to left. Position k belongs to square_word_cell(n, k).
Word square_word(int n);
std::pair<int, int> square_word_cell(int n, int position);

struct DecompositionTree {
  enum class Kind { Void, Empty, Split };
  Kind kind = Kind::Void;
  int vertex = 0;     // position in Q (Split only)
  bool cone = false;  // link == deletion, so every facet contains vertex
  std::shared_ptr<DecompositionTree> link;
  std::shared_ptr<DecompositionTree> deletion; // null when cone
};

// Splits on the first remaining letter: link is Delta(Q', pi), deletion is
// Delta(Q', sigma pi) when sigma pi is shorter and the link otherwise.
DecompositionTree vertex_decompose(const SubwordComplex& D);
FacetSet replay(const DecompositionTree& t);
std::vector<Face> shelling_from_decomposition(const DecompositionTree& t);
// Each facet meets the union of its predecessors in codimension-1 faces.
bool is_shelling(const std::vector<Face>& order, const SimplicialComplex& D);
std::size_t tree_depth(const DecompositionTree& t);

} // namespace schubert

#endif
