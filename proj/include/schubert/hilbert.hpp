#ifndef SCHUBERT_HILBERT_HPP
#define SCHUBERT_HILBERT_HPP

#include "schubert/grobner.hpp"
#include "schubert/ideal.hpp"
#include "schubert/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace schubert {

// Z: t.  Zn: x_i.  Z2n: x_i / y_j (ordinary x_i - y_j).  Zn2: z_ij.
enum class Grading { Z, Zn, Z2n, Zn2 };

Grading parse_grading(const std::string& s);
std::string grading_name(Grading g);

LaurentPolynomial exponential_weight(Grading g, int i, int j);
LaurentPolynomial ordinary_weight(Grading g, int i, int j);

// Numerator of the Hilbert series of k[z]/I over prod (1 - wt(z_ij)), for an
// ideal given by monomial exponent vectors over the n x n grid.
LaurentPolynomial k_polynomial(const std::vector<ZMonomial>& gens, int n, Grading g);
LaurentPolynomial k_polynomial(const SquarefreeMonomialIdeal& J, Grading g);

// Specializes along Zn2 -> Z2n -> Zn -> Z.
LaurentPolynomial coarsen(const LaurentPolynomial& K, Grading from, Grading to);

// Lowest-degree part of K(1 - v). In Z2n the y-Laurent terms are expanded
// as power series truncated at degree_bound.
LaurentPolynomial multidegree(const LaurentPolynomial& K, Grading g, std::optional<int> degree_bound = std::nullopt);
// Same value computed from the Zn2 K-polynomial: z_ij -> 1 - u_ij, lowest
// degree in u, then u_ij -> ordinary weight of z_ij in g.
LaurentPolynomial multidegree_via_fine(const LaurentPolynomial& K_fine, Grading g);

// Sum over facets L of the product of ordinary weights over the complement.
LaurentPolynomial multidegree_additive(const std::set<CellSet>& facets, int n, Grading g);

struct TheoremAReport {
  bool k_single = false;   // Zn K-polynomial is the Grothendieck polynomial
  bool k_double = false;   // Z2n K-polynomial is the double Grothendieck polynomial
  bool mdeg_single = false;
  bool mdeg_double = false;
  bool additive_single = false;
  bool additive_double = false;
  bool ok() const { return k_single && k_double && mdeg_single && mdeg_double && additive_single && additive_double; }
};

TheoremAReport theorem_A_check(const Permutation& w);

// The multidegree of J_w in grading g (Zn or Z2n), through the K-polynomial.
LaurentPolynomial multidegree_of(const Permutation& w, Grading g);

// d_i of the multidegree of J_w equals the multidegree of J_{w s_i}, in both
// Zn and Z2n. Requires length(w s_i) < length(w).
bool divided_difference_identity_check(const Permutation& w, int i);

} // namespace schubert

#endif
