#ifndef SCHUBERT_POLY_HPP
#define SCHUBERT_POLY_HPP

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace schubert {

enum class Block : std::uint8_t { X = 0, Y = 1, Z = 2, T = 3, U = 4 };

// Variable id: block in bits 16..23, first index in 8..15, second in 0..7.
using VarId = std::uint32_t;

constexpr VarId make_var(Block b, int i, int j = 0) {
  return (static_cast<VarId>(b) << 16) | (static_cast<VarId>(i) << 8) | static_cast<VarId>(j);
}
constexpr VarId xvar(int i) { return make_var(Block::X, i); }
constexpr VarId yvar(int j) { return make_var(Block::Y, j); }
constexpr VarId zvar(int i, int j) { return make_var(Block::Z, i, j); }
constexpr VarId uvar(int i, int j) { return make_var(Block::U, i, j); }
constexpr VarId tvar() { return make_var(Block::T, 0); }
constexpr Block block_of(VarId v) { return static_cast<Block>((v >> 16) & 0xff); }
constexpr int first_index(VarId v) { return static_cast<int>((v >> 8) & 0xff); }
constexpr int second_index(VarId v) { return static_cast<int>(v & 0xff); }

std::string var_name(VarId v);
// Inverse of var_name; throws on unknown names.
VarId parse_var(const std::string& name);

constexpr unsigned block_mask(Block b) { return 1u << static_cast<unsigned>(b); }

// Sparse exponent vector, sorted by variable id, no zero exponents.
class Monomial {
public:
  Monomial() = default;
  static Monomial var(VarId v, int e = 1);

  const std::vector<std::pair<VarId, int>>& exps() const { return exps_; }
  int exponent(VarId v) const;
  void set(VarId v, int e);
  int degree() const;
  int degree_in(unsigned blocks) const;
  bool is_one() const { return exps_.empty(); }
  bool has_negative() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps_ < b.exps_; }

private:
  std::vector<std::pair<VarId, int>> exps_;
};

// Graded lexicographic comparison with x < y < z < t < u in variable order;
// true when a should be printed before b.
bool graded_lex_greater(const Monomial& a, const Monomial& b);

// Exact integer combination of Laurent monomials. Negative exponents are
// only produced on the y block by the operations in this library.
class LaurentPolynomial {
public:
  using Terms = std::map<Monomial, mpz_class>;

  LaurentPolynomial() = default;
  LaurentPolynomial(long c);
  LaurentPolynomial(const mpz_class& c);
  static LaurentPolynomial var(VarId v, int e = 1);
  static LaurentPolynomial term(const Monomial& m, const mpz_class& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  mpz_class coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const mpz_class& c);
  bool has_negative_exponent() const;
  // Minimum and maximum total degree; requires nonzero.
  int min_degree() const;
  int max_degree() const;
  mpz_class sum_of_coefficients() const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator-(const LaurentPolynomial& a);
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  LaurentPolynomial pow(int e) const;
  // Product truncated to total degree <= bound.
  static LaurentPolynomial multiply_truncated(const LaurentPolynomial& a, const LaurentPolynomial& b,
                                              int bound);
  LaurentPolynomial truncate(int bound) const;

  // Replaces each variable by the value of f (nullopt keeps it). Negative
  // exponents are allowed only for variables sent to monomials.
  LaurentPolynomial substitute(const std::function<std::optional<LaurentPolynomial>(VarId)>& f) const;
  LaurentPolynomial swap_vars(VarId a, VarId b) const;

  // Terms sorted for printing.
  std::vector<std::pair<Monomial, mpz_class>> sorted_terms() const;
  std::string str() const;

private:
  Terms terms_;
};

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

// (f - s_i f) / (x_i - x_{i+1}), acting on the x block only.
LaurentPolynomial divided_difference(int i, const LaurentPolynomial& f);
// (x_{i+1} f - x_i s_i f) / (x_{i+1} - x_i).
LaurentPolynomial demazure(int i, const LaurentPolynomial& f);

// Replaces every variable v in the selected blocks by 1 - v. Negative
// exponents expand (1 - v)^{-k} as a power series, which needs a total
// degree bound; the result is then truncated at that bound.
LaurentPolynomial one_minus_substitute(const LaurentPolynomial& f, unsigned blocks,
                                       std::optional<int> degree_bound = std::nullopt);

LaurentPolynomial lowest_degree_terms(const LaurentPolynomial& f);

// Sets every variable of the given blocks to the given value.
LaurentPolynomial specialize_blocks(const LaurentPolynomial& f, unsigned blocks, long value);

} // namespace schubert

#endif
