#ifndef SCHUBERT_GROBNER_HPP
#define SCHUBERT_GROBNER_HPP

#include "schubert/ideal.hpp"
#include "schubert/perm.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace schubert {

// Exponent vector over z_11..z_nn in row-major order.
using ZMonomial = std::vector<std::uint8_t>;

enum class OrderTag { AntidiagRevlexNW, AntidiagLexNE, DiagLex };

class TermOrder {
public:
  TermOrder(OrderTag tag, int n);

  OrderTag tag() const { return tag_; }
  int n() const { return n_; }
  std::string name() const;
  // Variables from most to least significant, as row-major indices.
  const std::vector<int>& variable_order() const { return vars_; }
  // Negative, zero or positive as a < b, a == b, a > b.
  int compare(const ZMonomial& a, const ZMonomial& b) const;
  bool is_antidiagonal() const { return tag_ != OrderTag::DiagLex; }

private:
  OrderTag tag_;
  int n_;
  std::vector<int> vars_;
};

// "antidiag-revlex", "antidiag-lex" or "diag".
OrderTag parse_order(const std::string& s);

struct ZTerm {
  ZMonomial mono;
  mpz_class coeff;
};

// Terms sorted decreasingly under the order they were normalized with.
struct ZPolynomial {
  int n = 0;
  std::vector<ZTerm> terms;
  bool is_zero() const { return terms.empty(); }
  std::string str() const;
};

ZMonomial zmonomial(int n, const std::vector<Cell>& cells);
std::vector<Cell> support(const ZMonomial& m, int n);
void normalize(ZPolynomial& f, const TermOrder& ord);

ZPolynomial minor_polynomial(const Minor& m, int n);
const ZTerm& initial_term(const ZPolynomial& f, const TermOrder& ord);

class GrobnerGuardError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct GrobnerLimits {
  std::size_t max_coefficient_bits = 1 << 14;
  std::size_t max_basis_size = 20000;
};

struct BuchbergerStats {
  std::size_t pairs_total = 0;
  std::size_t pairs_skipped = 0;
  std::size_t pairs_reduced = 0;
  std::size_t nonzero_remainders = 0;
};

std::vector<ZPolynomial> buchberger(std::vector<ZPolynomial> gens, const TermOrder& ord,
                                    BuchbergerStats* stats = nullptr, const GrobnerLimits& lim = {});
// Every S-pair reduces to zero modulo gens.
bool is_groebner_basis(std::vector<ZPolynomial> gens, const TermOrder& ord, BuchbergerStats* stats = nullptr,
                       const GrobnerLimits& lim = {});
// Minimal generators of the ideal of initial terms.
std::vector<ZMonomial> initial_ideal(const std::vector<ZPolynomial>& basis, const TermOrder& ord);

std::vector<ZPolynomial> generator_polynomials(const Permutation& w, const TermOrder& ord,
                                               GeneratorSet which = GeneratorSet::Regions);

struct TheoremBReport {
  Permutation w;
  std::string order;
  std::size_t generators = 0;
  std::size_t basis_size = 0;
  bool initial_terms_are_antidiagonals = false;
  bool minors_form_basis = false;
  bool initial_ideal_matches = false;
  double seconds = 0;
  bool ok() const { return initial_terms_are_antidiagonals && minors_form_basis && initial_ideal_matches; }
};

TheoremBReport verify_theorem_B(const Permutation& w, const TermOrder& ord);

} // namespace schubert

#endif
