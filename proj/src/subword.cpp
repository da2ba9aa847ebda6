#include "schubert/subword.hpp"

#include <stdexcept>

namespace schubert {

SimplicialComplex::SimplicialComplex(FacetSet facets) {
  // Keep only inclusion-maximal sets.
  for (auto& F : facets) {
    bool contained = false;
    for (auto& G : facets)
      if (G.size() > F.size() && std::includes(G.begin(), G.end(), F.begin(), F.end())) {
        contained = true;
        break;
      }
    if (!contained) facets_.insert(F);
  }
}

bool SimplicialComplex::is_pure() const {
  if (facets_.empty()) return true;
  auto sz = facets_.begin()->size();
  return std::all_of(facets_.begin(), facets_.end(), [&](const Face& F) { return F.size() == sz; });
}

bool SimplicialComplex::contains_face(const Face& F) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [&](const Face& G) { return std::includes(G.begin(), G.end(), F.begin(), F.end()); });
}

std::vector<int> SimplicialComplex::vertices() const {
  std::set<int> v;
  for (auto& F : facets_) v.insert(F.begin(), F.end());
  return {v.begin(), v.end()};
}

SimplicialComplex SimplicialComplex::link(const Face& F) const {
  if (!contains_face(F)) throw std::invalid_argument("link: not a face");
  FacetSet out;
  for (auto& G : facets_)
    if (std::includes(G.begin(), G.end(), F.begin(), F.end())) {
      Face H;
      std::set_difference(G.begin(), G.end(), F.begin(), F.end(), std::back_inserter(H));
      out.insert(std::move(H));
    }
  return SimplicialComplex(std::move(out));
}

SimplicialComplex SimplicialComplex::deletion(const Face& F) const {
  if (!contains_face(F)) throw std::invalid_argument("deletion: not a face");
  FacetSet out;
  for (auto& G : facets_) {
    Face H;
    std::set_difference(G.begin(), G.end(), F.begin(), F.end(), std::back_inserter(H));
    out.insert(std::move(H));
  }
  return SimplicialComplex(std::move(out));
}

namespace {

int ambient_size(const Word& Q, const Permutation& pi) {
  int N = pi.n();
  for (int s : Q) {
    if (s < 1) throw std::invalid_argument("reflection index out of range");
    N = std::max(N, s + 1);
  }
  return N;
}

} // namespace

SubwordComplex::SubwordComplex(Word Q, const Permutation& pi)
    : Q_(std::move(Q)), pi_(pi.embed(ambient_size(Q_, pi))) {
  complex_ = SimplicialComplex(subword_facets(SymmetricGroup{pi_.n()}, Q_, pi_));
}

SubwordComplex subword_complex(const Word& Q, const Permutation& pi) { return SubwordComplex(Q, pi); }

Permutation demazure_product(const Word& Q, int n) {
  int N = n;
  for (int s : Q) N = std::max(N, s + 1);
  return demazure_product(SymmetricGroup{N}, Q);
}

bool word_contains(const Word& Q, const Permutation& pi) {
  Permutation p = pi.embed(ambient_size(Q, pi));
  return word_contains(SymmetricGroup{p.n()}, Q, p);
}

FacetSet subword_facets_bruteforce(const Word& Q, const Permutation& pi) {
  const int m = static_cast<int>(Q.size());
  if (m > 24) throw std::invalid_argument("subword_facets_bruteforce: word too long");
  Permutation p = pi.embed(ambient_size(Q, pi));
  const int L = length(p);
  FacetSet out;
  for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
    if (__builtin_popcountl(mask) != L) continue;
    Word sub;
    for (int k = 0; k < m; ++k)
      if (mask >> k & 1ul) sub.push_back(Q[k]);
    if (product_of_word(sub, p.n()) != p) continue;
    Face F;
    for (int k = 0; k < m; ++k)
      if (!(mask >> k & 1ul)) F.push_back(k + 1);
    out.insert(std::move(F));
  }
  return out;
}

Word square_word(int n) {
  Word Q;
  for (int q = 1; q <= n; ++q)
    for (int p = n; p >= 1; --p) Q.push_back(q + p - 1);
  return Q;
}

std::pair<int, int> square_word_cell(int n, int position) {
  return {(position - 1) / n + 1, n - (position - 1) % n};
}

namespace {

DecompositionTree decompose(const SymmetricGroup& W, const Word& Q, std::size_t k, const Permutation& pi) {
  DecompositionTree t;
  if (!word_contains(W, Q, pi, k)) {
    t.kind = DecompositionTree::Kind::Void;
    return t;
  }
  if (k == Q.size()) {
    t.kind = DecompositionTree::Kind::Empty;
    return t;
  }
  t.kind = DecompositionTree::Kind::Split;
  t.vertex = static_cast<int>(k) + 1;
  int s = Q[k];
  t.link = std::make_shared<DecompositionTree>(decompose(W, Q, k + 1, pi));
  if (W.left_descent(s, pi)) {
    t.deletion = std::make_shared<DecompositionTree>(decompose(W, Q, k + 1, W.left_multiply(s, pi)));
  } else {
    t.cone = true;
  }
  return t;
}

Face with_vertex(Face F, int v) {
  F.insert(std::lower_bound(F.begin(), F.end(), v), v);
  return F;
}

} // namespace

DecompositionTree vertex_decompose(const SubwordComplex& D) {
  if (D.is_void()) throw std::invalid_argument("vertex_decompose: void complex");
  return decompose(SymmetricGroup{D.pi().n()}, D.word(), 0, D.pi());
}

FacetSet replay(const DecompositionTree& t) {
  switch (t.kind) {
  case DecompositionTree::Kind::Void: return {};
  case DecompositionTree::Kind::Empty: return {Face{}};
  case DecompositionTree::Kind::Split: break;
  }
  FacetSet out;
  if (!t.cone) out = replay(*t.deletion);
  for (auto& F : replay(*t.link)) out.insert(with_vertex(F, t.vertex));
  return out;
}

std::vector<Face> shelling_from_decomposition(const DecompositionTree& t) {
  switch (t.kind) {
  case DecompositionTree::Kind::Void: return {};
  case DecompositionTree::Kind::Empty: return {Face{}};
  case DecompositionTree::Kind::Split: break;
  }
  std::vector<Face> out;
  if (!t.cone) out = shelling_from_decomposition(*t.deletion);
  for (auto& F : shelling_from_decomposition(*t.link)) out.push_back(with_vertex(F, t.vertex));
  return out;
}

bool is_shelling(const std::vector<Face>& order, const SimplicialComplex& D) {
  FacetSet seen(order.begin(), order.end());
  if (seen.size() != order.size() || seen != D.facets()) return false;
  for (std::size_t i = 1; i < order.size(); ++i) {
    const Face& Fi = order[i];
    std::vector<Face> meets;
    for (std::size_t j = 0; j < i; ++j) {
      Face I;
      std::set_intersection(order[j].begin(), order[j].end(), Fi.begin(), Fi.end(), std::back_inserter(I));
      meets.push_back(std::move(I));
    }
    for (auto& I : meets) {
      bool covered = std::any_of(meets.begin(), meets.end(), [&](const Face& K) {
        return K.size() + 1 == Fi.size() && std::includes(K.begin(), K.end(), I.begin(), I.end());
      });
      if (!covered) return false;
    }
  }
  return true;
}

std::size_t tree_depth(const DecompositionTree& t) {
  if (t.kind != DecompositionTree::Kind::Split) return 0;
  std::size_t d = tree_depth(*t.link);
  if (!t.cone) d = std::max(d, tree_depth(*t.deletion));
  return d + 1;
}

} // namespace schubert
