#ifndef SCHUBERT_BRUHATLAB_HPP
#define SCHUBERT_BRUHATLAB_HPP

#include "schubert/ideal.hpp"
#include "schubert/perm.hpp"

#include <compare>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace schubert {

// n x n array of nonnegative exponents of a monomial in the z variables.
class ExponentArray {
public:
  ExponentArray() = default;
  explicit ExponentArray(int n) : n_(n), e_(n * n, 0) {}
  ExponentArray(int n, std::vector<int> entries);
  // Rows of equal length.
  static ExponentArray from_rows(const std::vector<std::vector<int>>& rows);

  int n() const { return n_; }
  int& at(int i, int j) { return e_[(i - 1) * n_ + (j - 1)]; }
  int at(int i, int j) const { return e_[(i - 1) * n_ + (j - 1)]; }
  const std::vector<int>& entries() const { return e_; }
  int degree() const;
  int row_sum(int i) const;
  int column_sum(int j) const;
  std::set<Cell> support() const;
  std::string str() const;

  friend bool operator==(const ExponentArray&, const ExponentArray&) = default;
  friend auto operator<=>(const ExponentArray&, const ExponentArray&) = default;

private:
  int n_ = 0;
  std::vector<int> e_;
};

ExponentArray operator*(int k, const ExponentArray& b);

bool standard_test(const ExponentArray& b, const SquarefreeMonomialIdeal& J);
bool standard_test(const ExponentArray& b, const Permutation& w);

// Leftmost column with a nonzero entry in row q, or 0.
int west(int q, const ExponentArray& b);

// Moves one unit from (i+1, west_{i+1}) up to (i, west_{i+1}).
ExponentArray mutate(int i, const ExponentArray& b);
ExponentArray mutate_times(int i, ExponentArray b, int d);

// min{p : z_ip z^b outside J}, or 0 when z^b lies in J.
int start_codon(int i, const SquarefreeMonomialIdeal& J, const ExponentArray& b);
int start_codon(int i, const Permutation& w, const ExponentArray& b);
int promoter_size(int i, const SquarefreeMonomialIdeal& J, const ExponentArray& b);
int promoter_size(int i, const Permutation& w, const ExponentArray& b);

// [mu^0 b, ..., mu^{|prom b|} b]; needs z^b standard and length(w s_i) < length(w).
std::vector<ExponentArray> lifted_demazure(int i, const Permutation& w, const ExponentArray& b);

// Rows i and i+1 from the start codon to column n, read top, bottom, top, ...
struct GeneDissection {
  int row = 0;
  int start = 0;
  std::vector<std::pair<int, int>> exons;   // (column of bottom box, column of top box)
  std::vector<std::pair<int, int>> introns; // column ranges [first, last]
};

// Blocks of the gene after the codons have been raised by one.
GeneDissection dissect_gene(int i, int start, const ExponentArray& b);
// Intron mutation with an explicit start codon.
ExponentArray intron_mutation_gene(int i, int start, const ExponentArray& b);
// Intron mutation with the start codon determined by w; z^b must be standard.
ExponentArray intron_mutation(int i, const Permutation& w, const ExponentArray& b);

// All standard arrays for J of total degree <= max_degree.
std::vector<ExponentArray> standard_monomials(const SquarefreeMonomialIdeal& J, int max_degree);
// All standard arrays for J with every entry <= max_entry.
std::vector<ExponentArray> standard_arrays_bounded(const SquarefreeMonomialIdeal& J, int max_entry);

// Every lifted Demazure image of a standard array of degree <= d is standard
// for J_{w s_i}, none repeats, and together they are all of them.
bool truncated_ev_check(const Permutation& w, int i, int d);

// For each facet L of L_w, the odd mutations of twice its indicator array
// give the mitosis offspring of the complement of L, and the offspring of
// all facets are the facet complements of L_{w s_i}, without repeats.
bool mitosis_facet_bridge(const Permutation& w, int i);

} // namespace schubert

#endif
