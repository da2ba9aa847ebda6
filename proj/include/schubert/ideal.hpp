#ifndef SCHUBERT_IDEAL_HPP
#define SCHUBERT_IDEAL_HPP

#include "schubert/perm.hpp"
#include "schubert/pipedream.hpp"

#include <compare>
#include <set>
#include <vector>

namespace schubert {

// Square minor of the generic matrix Z with sorted row and column indices.
struct Minor {
  std::vector<int> rows;
  std::vector<int> cols;
  int size() const { return static_cast<int>(rows.size()); }
  friend bool operator==(const Minor&, const Minor&) = default;
  friend auto operator<=>(const Minor&, const Minor&) = default;
};

// Cells of the main antidiagonal of the minor, sorted.
std::vector<Cell> antidiagonal(const Minor& m);

// Cells (q,p) of the diagram of w with no diagram cell directly south or east.
std::vector<Cell> essential_set(const Permutation& w);

// Which (1 + rank)-minors of the northwest q x p submatrices to emit. All
// three sets generate the same ideal.
//   Full: every (q,p) with rank below min(q,p).
//   Essential: only essential boxes.
//   Regions: for each rank r met at an essential box, every (r+1)-minor
//   inside the region where the rank is at most r.
enum class GeneratorSet { Regions, Essential, Full };

std::set<Minor> schubert_generators(const Permutation& w, GeneratorSet which = GeneratorSet::Regions);

using CellSet = std::vector<Cell>; // sorted

// Ideal generated by squarefree monomials, each stored as its support.
class SquarefreeMonomialIdeal {
public:
  SquarefreeMonomialIdeal() = default;
  SquarefreeMonomialIdeal(int n, std::set<CellSet> generators);

  int n() const { return n_; }
  const std::set<CellSet>& generators() const { return gens_; }
  // Drops every generator divisible by another one.
  void minimalize();
  // True when some generator's support lies inside the given support.
  bool contains_support(const std::set<Cell>& support) const;

  friend bool operator==(const SquarefreeMonomialIdeal&, const SquarefreeMonomialIdeal&) = default;

private:
  int n_ = 0;
  std::set<CellSet> gens_;
};

SquarefreeMonomialIdeal antidiagonal_ideal(const Permutation& w, GeneratorSet which = GeneratorSet::Essential);

// Facets of the Stanley-Reisner complex: complements of minimal vertex covers.
std::set<CellSet> stanley_reisner_facets(const SquarefreeMonomialIdeal& J);
std::set<CellSet> minimal_vertex_covers(const SquarefreeMonomialIdeal& J);

CellSet complement(const CellSet& s, int n);
PipeDream facet_complement(const CellSet& facet, int n);

// Facet complements of L_w coincide with RP(w).
bool prime_decomposition_check(const Permutation& w);

} // namespace schubert

#endif
