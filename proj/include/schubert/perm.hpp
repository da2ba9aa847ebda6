#ifndef SCHUBERT_PERM_HPP
#define SCHUBERT_PERM_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace schubert {

// A sequence of simple reflection indices; entry k stands for s_k.
using Word = std::vector<int>;

// Permutation of {1..n} in one-line notation, 1-based.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation longest(int n);
  // Accepts "2143", "[2,1,4,3]" or "2,1,4,3".
  static Permutation parse(std::string_view text);

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  // Fixes n+1..N.
  Permutation embed(int N) const;
  std::string str() const;

  // (u * v)(i) = u(v(i)).
  friend Permutation operator*(const Permutation& u, const Permutation& v);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> images_;
};

int length(const Permutation& w);

// Entry (q,p) counts i <= q with w(i) <= p.
class RankMatrix {
public:
  explicit RankMatrix(const Permutation& w);
  int n() const { return n_; }
  int operator()(int q, int p) const;

private:
  int n_;
  std::vector<int> entries_;
};

RankMatrix rank_matrix(const Permutation& w);
Permutation from_rank_matrix(const RankMatrix& r);

// w * s_i: swaps the entries in positions i and i+1.
Permutation apply_right_transposition(const Permutation& w, int i);
// s_i * w: swaps the values i and i+1.
Permutation apply_left_transposition(int i, const Permutation& w);

bool has_right_descent(const Permutation& w, int i);

// Word i_1..i_k with w0 w = s_{i_1} ... s_{i_k}; at every step the lowest
// usable descent is taken.
Word reduced_word_to_w0(const Permutation& w);

// s_{a_1} s_{a_2} ... in S_n, read left to right.
Permutation product_of_word(const Word& word, int n);

std::vector<int> lehmer_code(const Permutation& w);
std::vector<Permutation> all_permutations(int n);

// Pairs (w, i) with length(w s_i) = length(w) - 1.
struct CoveringPair {
  Permutation w;
  int i;
};
std::vector<CoveringPair> covering_pairs(int n);

} // namespace schubert

#endif
