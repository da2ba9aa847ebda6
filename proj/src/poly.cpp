#include "schubert/poly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>

namespace schubert {

std::string var_name(VarId v) {
  int i = first_index(v), j = second_index(v);
  auto pair_name = [&](char c) {
    if (i < 10 && j < 10) return std::string(1, c) + std::to_string(i) + std::to_string(j);
    return std::string(1, c) + std::to_string(i) + "_" + std::to_string(j);
  };
  switch (block_of(v)) {
  case Block::X: return "x" + std::to_string(i);
  case Block::Y: return "y" + std::to_string(i);
  case Block::Z: return pair_name('z');
  case Block::U: return pair_name('u');
  case Block::T: return "t";
  }
  return "?";
}

VarId parse_var(const std::string& name) {
  if (name == "t") return tvar();
  if (name.size() < 2) throw std::invalid_argument("unknown variable: " + name);
  std::string rest = name.substr(1);
  for (char c : rest)
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '_')
      throw std::invalid_argument("unknown variable: " + name);
  switch (name[0]) {
  case 'x': return xvar(std::stoi(rest));
  case 'y': return yvar(std::stoi(rest));
  case 'z':
  case 'u': {
    int i, j;
    auto us = rest.find('_');
    if (us != std::string::npos) {
      i = std::stoi(rest.substr(0, us));
      j = std::stoi(rest.substr(us + 1));
    } else if (rest.size() == 2) {
      i = rest[0] - '0';
      j = rest[1] - '0';
    } else {
      throw std::invalid_argument("unknown variable: " + name);
    }
    return name[0] == 'z' ? zvar(i, j) : uvar(i, j);
  }
  default: throw std::invalid_argument("unknown variable: " + name);
  }
}

Monomial Monomial::var(VarId v, int e) {
  Monomial m;
  m.set(v, e);
  return m;
}

int Monomial::exponent(VarId v) const {
  auto it = std::lower_bound(exps_.begin(), exps_.end(), std::make_pair(v, std::numeric_limits<int>::min()));
  return (it != exps_.end() && it->first == v) ? it->second : 0;
}

void Monomial::set(VarId v, int e) {
  auto it = std::lower_bound(exps_.begin(), exps_.end(), std::make_pair(v, std::numeric_limits<int>::min()));
  if (it != exps_.end() && it->first == v) {
    if (e == 0) exps_.erase(it);
    else it->second = e;
  } else if (e != 0) {
    exps_.insert(it, {v, e});
  }
}

int Monomial::degree() const {
  int d = 0;
  for (auto& [v, e] : exps_) d += e;
  return d;
}

int Monomial::degree_in(unsigned blocks) const {
  int d = 0;
  for (auto& [v, e] : exps_)
    if (blocks & block_mask(block_of(v))) d += e;
  return d;
}

bool Monomial::has_negative() const {
  for (auto& [v, e] : exps_)
    if (e < 0) return true;
  return false;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  auto& out = r.exps_;
  out.reserve(a.exps_.size() + b.exps_.size());
  auto i = a.exps_.begin(), j = b.exps_.begin();
  while (i != a.exps_.end() || j != b.exps_.end()) {
    if (j == b.exps_.end() || (i != a.exps_.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.exps_.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      int e = i->second + j->second;
      if (e != 0) out.push_back({i->first, e});
      ++i;
      ++j;
    }
  }
  return r;
}

bool graded_lex_greater(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  auto i = a.exps().begin(), j = b.exps().begin();
  while (i != a.exps().end() || j != b.exps().end()) {
    if (j == b.exps().end() || (i != a.exps().end() && i->first < j->first)) return i->second > 0;
    if (i == a.exps().end() || j->first < i->first) return j->second < 0;
    if (i->second != j->second) return i->second > j->second;
    ++i;
    ++j;
  }
  return false;
}

LaurentPolynomial::LaurentPolynomial(long c) {
  if (c != 0) terms_.emplace(Monomial(), mpz_class(c));
}

LaurentPolynomial::LaurentPolynomial(const mpz_class& c) {
  if (c != 0) terms_.emplace(Monomial(), c);
}

LaurentPolynomial LaurentPolynomial::var(VarId v, int e) { return term(Monomial::var(v, e), 1); }

LaurentPolynomial LaurentPolynomial::term(const Monomial& m, const mpz_class& c) {
  LaurentPolynomial p;
  p.add_term(m, c);
  return p;
}

mpz_class LaurentPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void LaurentPolynomial::add_term(const Monomial& m, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool LaurentPolynomial::has_negative_exponent() const {
  for (auto& [m, c] : terms_)
    if (m.has_negative()) return true;
  return false;
}

int LaurentPolynomial::min_degree() const {
  if (terms_.empty()) throw std::invalid_argument("degree of the zero polynomial");
  int d = std::numeric_limits<int>::max();
  for (auto& [m, c] : terms_) d = std::min(d, m.degree());
  return d;
}

int LaurentPolynomial::max_degree() const {
  if (terms_.empty()) throw std::invalid_argument("degree of the zero polynomial");
  int d = std::numeric_limits<int>::min();
  for (auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

mpz_class LaurentPolynomial::sum_of_coefficients() const {
  mpz_class s = 0;
  for (auto& [m, c] : terms_) s += c;
  return s;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& o) {
  *this = *this * o;
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial r;
  for (auto& [ma, ca] : a.terms_)
    for (auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

LaurentPolynomial operator-(const LaurentPolynomial& a) {
  LaurentPolynomial r = a;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

LaurentPolynomial LaurentPolynomial::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power of a polynomial");
  LaurentPolynomial r(1), base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return r;
}

LaurentPolynomial LaurentPolynomial::multiply_truncated(const LaurentPolynomial& a,
                                                        const LaurentPolynomial& b, int bound) {
  LaurentPolynomial r;
  for (auto& [ma, ca] : a.terms_) {
    int da = ma.degree();
    for (auto& [mb, cb] : b.terms_)
      if (da + mb.degree() <= bound) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

LaurentPolynomial LaurentPolynomial::truncate(int bound) const {
  LaurentPolynomial r;
  for (auto& [m, c] : terms_)
    if (m.degree() <= bound) r.terms_.emplace(m, c);
  return r;
}

namespace {

// Inverse of a monomial with coefficient +-1.
LaurentPolynomial invert_unit_monomial(const LaurentPolynomial& p) {
  if (p.size() != 1) throw std::invalid_argument("negative exponent needs a monomial substitution");
  auto& [m, c] = *p.terms().begin();
  if (c != 1 && c != -1) throw std::invalid_argument("negative exponent needs a unit coefficient");
  Monomial inv;
  for (auto& [v, e] : m.exps()) inv.set(v, -e);
  return LaurentPolynomial::term(inv, c);
}

} // namespace

LaurentPolynomial LaurentPolynomial::substitute(
    const std::function<std::optional<LaurentPolynomial>(VarId)>& f) const {
  std::map<VarId, std::optional<LaurentPolynomial>> values;
  std::map<std::pair<VarId, int>, LaurentPolynomial> powers;
  auto value_pow = [&](VarId v, int e) -> const LaurentPolynomial& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    const auto& val = *values[v];
    LaurentPolynomial p = e >= 0 ? val.pow(e) : invert_unit_monomial(val).pow(-e);
    return powers.emplace(key, std::move(p)).first->second;
  };
  LaurentPolynomial r;
  for (auto& [m, c] : terms_) {
    Monomial kept;
    LaurentPolynomial acc(1);
    for (auto& [v, e] : m.exps()) {
      auto vit = values.find(v);
      if (vit == values.end()) vit = values.emplace(v, f(v)).first;
      if (vit->second) acc *= value_pow(v, e);
      else kept.set(v, e);
    }
    for (auto& [mm, cc] : acc.terms_) r.add_term(mm * kept, cc * c);
  }
  return r;
}

LaurentPolynomial LaurentPolynomial::swap_vars(VarId a, VarId b) const {
  LaurentPolynomial r;
  for (auto& [m, c] : terms_) {
    Monomial s = m;
    int ea = m.exponent(a), eb = m.exponent(b);
    s.set(a, eb);
    s.set(b, ea);
    r.add_term(s, c);
  }
  return r;
}

std::vector<std::pair<Monomial, mpz_class>> LaurentPolynomial::sorted_terms() const {
  std::vector<std::pair<Monomial, mpz_class>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(), [](auto& a, auto& b) { return graded_lex_greater(a.first, b.first); });
  return v;
}

std::string LaurentPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto& [m, c] : sorted_terms()) {
    mpz_class a = abs(c);
    if (first) s += c < 0 ? "-" : "";
    else s += c < 0 ? " - " : " + ";
    first = false;
    std::string body;
    for (auto& [v, e] : m.exps()) {
      if (!body.empty()) body += "*";
      body += var_name(v);
      if (e != 1) body += "^" + std::to_string(e);
    }
    if (body.empty()) s += a.get_str();
    else if (a == 1) s += body;
    else s += a.get_str() + "*" + body;
  }
  return s;
}

LaurentPolynomial divided_difference(int i, const LaurentPolynomial& f) {
  const VarId xi = xvar(i), xj = xvar(i + 1);
  LaurentPolynomial r;
  for (auto& [m, c] : f.terms()) {
    int a = m.exponent(xi), b = m.exponent(xj);
    if (a < 0 || b < 0) throw std::invalid_argument("divided difference of a Laurent x-monomial");
    if (a == b) continue;
    int lo = std::min(a, b), gap = std::abs(a - b);
    mpz_class sign = a > b ? c : mpz_class(-c);
    // (x_i^g - x_{i+1}^g) / (x_i - x_{i+1}) = sum_k x_i^k x_{i+1}^{g-1-k}
    for (int k = 0; k < gap; ++k) {
      Monomial t = m;
      t.set(xi, lo + k);
      t.set(xj, lo + gap - 1 - k);
      r.add_term(t, sign);
    }
  }
  return r;
}

LaurentPolynomial demazure(int i, const LaurentPolynomial& f) {
  return -divided_difference(i, LaurentPolynomial::var(xvar(i + 1)) * f);
}

LaurentPolynomial one_minus_substitute(const LaurentPolynomial& f, unsigned blocks,
                                       std::optional<int> degree_bound) {
  bool laurent = false;
  for (auto& [m, c] : f.terms())
    for (auto& [v, e] : m.exps())
      if (e < 0 && (blocks & block_mask(block_of(v)))) laurent = true;
  if (laurent && !degree_bound)
    throw std::invalid_argument("one_minus_substitute: Laurent input needs a degree bound");
  const int bound = laurent ? *degree_bound : std::numeric_limits<int>::max();

  std::map<std::pair<VarId, int>, LaurentPolynomial> factors;
  auto factor = [&](VarId v, int e) -> const LaurentPolynomial& {
    auto key = std::make_pair(v, e);
    auto it = factors.find(key);
    if (it != factors.end()) return it->second;
    LaurentPolynomial one_minus = LaurentPolynomial(1) - LaurentPolynomial::var(v);
    LaurentPolynomial p;
    if (e >= 0) {
      p = one_minus.pow(e);
      if (laurent) p = p.truncate(bound);
    } else {
      // (1 - v)^{-k} = sum_j C(k+j-1, j) v^j
      int k = -e;
      for (int j = 0; j <= bound; ++j) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), k + j - 1, j);
        p.add_term(Monomial::var(v, j), binom);
      }
    }
    return factors.emplace(key, std::move(p)).first->second;
  };

  LaurentPolynomial r;
  for (auto& [m, c] : f.terms()) {
    Monomial kept;
    for (auto& [v, e] : m.exps())
      if (!(blocks & block_mask(block_of(v)))) kept.set(v, e);
    const int room = laurent ? bound - kept.degree() : bound;
    if (room < 0) continue;
    LaurentPolynomial acc(c);
    for (auto& [v, e] : m.exps()) {
      if (!(blocks & block_mask(block_of(v)))) continue;
      acc = laurent ? LaurentPolynomial::multiply_truncated(acc, factor(v, e), room) : acc * factor(v, e);
    }
    r += acc * LaurentPolynomial::term(kept, 1);
  }
  return r;
}

LaurentPolynomial lowest_degree_terms(const LaurentPolynomial& f) {
  if (f.is_zero()) return {};
  int d = f.min_degree();
  LaurentPolynomial r;
  for (auto& [m, c] : f.terms())
    if (m.degree() == d) r.add_term(m, c);
  return r;
}

LaurentPolynomial specialize_blocks(const LaurentPolynomial& f, unsigned blocks, long value) {
  return f.substitute([&](VarId v) -> std::optional<LaurentPolynomial> {
    if (blocks & block_mask(block_of(v))) return LaurentPolynomial(value);
    return std::nullopt;
  });
}

} // namespace schubert
