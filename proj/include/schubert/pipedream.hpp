#ifndef SCHUBERT_PIPEDREAM_HPP
#define SCHUBERT_PIPEDREAM_HPP

#include "schubert/perm.hpp"
#include "schubert/poly.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace schubert {

// (row, column), 1-based.
using Cell = std::pair<int, int>;

// Set of crosses in the n x n grid; every other tile is an elbow.
class PipeDream {
public:
  PipeDream() = default;
  PipeDream(int n, std::set<Cell> crosses);

  // Crosses at (i,j) with i + j <= n.
  static PipeDream triangle(int n);

  int n() const { return n_; }
  const std::set<Cell>& crosses() const { return crosses_; }
  bool has(int i, int j) const { return crosses_.count({i, j}) > 0; }
  std::size_t size() const { return crosses_.size(); }
  bool inside_triangle() const;

  void add(int i, int j);
  void remove(int i, int j);

  friend bool operator==(const PipeDream&, const PipeDream&) = default;
  friend auto operator<=>(const PipeDream&, const PipeDream&) = default;

private:
  int n_ = 0;
  std::set<Cell> crosses_;
};

using PipeDreamSet = std::set<PipeDream>;

// Cross (q,p) contributes s_{q+p-1}; rows top to bottom, each right to left.
Word word_of(const PipeDream& D);
// Product of word_of(D). Lives in S_n when the product fixes everything
// beyond n, otherwise in S_{2n}.
Permutation permutation_of(const PipeDream& D);
// Follows the pipe entering row i from the west to the column it exits.
Permutation wiring_permutation(const PipeDream& D);
bool is_reduced(const PipeDream& D);

int start_row(int i, const PipeDream& D);
std::vector<int> mitosis_columns(int i, const PipeDream& D);
PipeDreamSet mitosis(int i, const PipeDream& D);
PipeDreamSet mitosis(int i, const PipeDreamSet& P);
// Offspring in birth order, produced by deleting the first cross and then
// chuting from row i to row i+1 as far west as possible.
std::vector<PipeDream> mitosis_by_chutes(int i, const PipeDream& D);

// Rows row and row+1, columns west..east.
struct ChuteRect {
  int row;
  int west;
  int east;
};
bool is_chutable(const PipeDream& D, const ChuteRect& r);
// Moves the NE cross of a chutable rectangle to its SW corner.
PipeDream chute(const PipeDream& D, const ChuteRect& r);
std::vector<ChuteRect> chutable_rectangles(const PipeDream& D);
// Everything reachable from D by chute moves.
PipeDreamSet chute_closure(const PipeDream& D);

// Columns filled from row 1 by the Lehmer code of w^{-1}.
PipeDream top_pipe_dream(const Permutation& w);
// Every cross outside row 1 has a cross directly above it.
bool has_due_north_property(const PipeDream& D);

PipeDreamSet rp_mitosis(const Permutation& w);
PipeDreamSet rp_bruteforce(const Permutation& w);

// Sum over D of the product of x_i, or of (x_i - y_j), over the crosses.
LaurentPolynomial pipe_dream_sum(const PipeDreamSet& P);
LaurentPolynomial double_pipe_dream_sum(const PipeDreamSet& P);

// '+' for crosses, '.' for elbows.
std::string render(const PipeDream& D);

} // namespace schubert

#endif
