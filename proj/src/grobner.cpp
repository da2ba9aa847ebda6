#include "schubert/grobner.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace schubert {

TermOrder::TermOrder(OrderTag tag, int n) : tag_(tag), n_(n) {
  switch (tag) {
  case OrderTag::AntidiagRevlexNW:
  case OrderTag::DiagLex:
    for (int q = 0; q < n; ++q)
      for (int p = 0; p < n; ++p) vars_.push_back(q * n + p);
    break;
  case OrderTag::AntidiagLexNE:
    for (int q = 0; q < n; ++q)
      for (int p = n - 1; p >= 0; --p) vars_.push_back(q * n + p);
    break;
  }
}

std::string TermOrder::name() const {
  switch (tag_) {
  case OrderTag::AntidiagRevlexNW: return "antidiag-revlex";
  case OrderTag::AntidiagLexNE: return "antidiag-lex";
  case OrderTag::DiagLex: return "diag";
  }
  return "?";
}

OrderTag parse_order(const std::string& s) {
  if (s == "antidiag-revlex") return OrderTag::AntidiagRevlexNW;
  if (s == "antidiag-lex") return OrderTag::AntidiagLexNE;
  if (s == "diag") return OrderTag::DiagLex;
  throw std::invalid_argument("unknown term order: " + s);
}

int TermOrder::compare(const ZMonomial& a, const ZMonomial& b) const {
  if (tag_ == OrderTag::AntidiagRevlexNW) {
    int da = std::accumulate(a.begin(), a.end(), 0), db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db ? -1 : 1;
    for (auto it = vars_.rbegin(); it != vars_.rend(); ++it)
      if (a[*it] != b[*it]) return a[*it] < b[*it] ? 1 : -1;
    return 0;
  }
  for (int v : vars_)
    if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
  return 0;
}

std::string ZPolynomial::str() const {
  if (terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto& t : terms) {
    mpz_class a = abs(t.coeff);
    s += first ? (t.coeff < 0 ? "-" : "") : (t.coeff < 0 ? " - " : " + ");
    first = false;
    std::string body;
    for (int v = 0; v < n * n; ++v) {
      if (t.mono[v] == 0) continue;
      if (!body.empty()) body += "*";
      body += var_name(zvar(v / n + 1, v % n + 1));
      if (t.mono[v] > 1) body += "^" + std::to_string(t.mono[v]);
    }
    if (body.empty()) s += a.get_str();
    else if (a == 1) s += body;
    else s += a.get_str() + "*" + body;
  }
  return s;
}

ZMonomial zmonomial(int n, const std::vector<Cell>& cells) {
  ZMonomial m(n * n, 0);
  for (auto [i, j] : cells) ++m[(i - 1) * n + (j - 1)];
  return m;
}

std::vector<Cell> support(const ZMonomial& m, int n) {
  std::vector<Cell> s;
  for (int v = 0; v < n * n; ++v)
    if (m[v]) s.push_back({v / n + 1, v % n + 1});
  return s;
}

void normalize(ZPolynomial& f, const TermOrder& ord) {
  std::sort(f.terms.begin(), f.terms.end(),
            [&](const ZTerm& a, const ZTerm& b) { return ord.compare(a.mono, b.mono) > 0; });
}

ZPolynomial minor_polynomial(const Minor& m, int n) {
  int k = m.size();
  std::vector<int> sigma(k);
  std::iota(sigma.begin(), sigma.end(), 0);
  ZPolynomial f;
  f.n = n;
  do {
    int inv = 0;
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b)
        if (sigma[a] > sigma[b]) ++inv;
    ZMonomial mono(n * n, 0);
    for (int a = 0; a < k; ++a) ++mono[(m.rows[a] - 1) * n + (m.cols[sigma[a]] - 1)];
    f.terms.push_back({std::move(mono), mpz_class(inv % 2 ? -1 : 1)});
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return f;
}

const ZTerm& initial_term(const ZPolynomial& f, const TermOrder& ord) {
  if (f.terms.empty()) throw std::invalid_argument("initial term of the zero polynomial");
  auto it = std::max_element(f.terms.begin(), f.terms.end(),
                             [&](const ZTerm& a, const ZTerm& b) { return ord.compare(a.mono, b.mono) < 0; });
  return *it;
}

namespace {

bool divides(const ZMonomial& a, const ZMonomial& b) {
  for (std::size_t v = 0; v < a.size(); ++v)
    if (a[v] > b[v]) return false;
  return true;
}

ZMonomial lcm(const ZMonomial& a, const ZMonomial& b) {
  ZMonomial m(a.size());
  for (std::size_t v = 0; v < a.size(); ++v) m[v] = std::max(a[v], b[v]);
  return m;
}

bool coprime(const ZMonomial& a, const ZMonomial& b) {
  for (std::size_t v = 0; v < a.size(); ++v)
    if (a[v] && b[v]) return false;
  return true;
}

int degree(const ZMonomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

struct Greater {
  const TermOrder* ord;
  bool operator()(const ZMonomial& a, const ZMonomial& b) const { return ord->compare(a, b) > 0; }
};

using TermMap = std::map<ZMonomial, mpz_class, Greater>;

void check_bits(const mpz_class& c, const GrobnerLimits& lim) {
  if (mpz_sizeinbase(c.get_mpz_t(), 2) > lim.max_coefficient_bits)
    throw GrobnerGuardError("coefficient growth exceeded the configured bound");
}

void add_scaled(TermMap& h, const ZPolynomial& g, const mpz_class& c, const ZMonomial& shift) {
  for (auto& t : g.terms) {
    ZMonomial m = t.mono;
    for (std::size_t v = 0; v < m.size(); ++v) m[v] += shift[v];
    auto [it, inserted] = h.try_emplace(std::move(m), t.coeff * c);
    if (!inserted) {
      it->second += t.coeff * c;
      if (it->second == 0) h.erase(it);
    }
  }
}

// Fraction-free reduction; the result is a nonzero multiple of the remainder
// with content removed, or zero.
ZPolynomial reduce(TermMap h, const std::vector<ZPolynomial>& G, const TermOrder& ord, const GrobnerLimits& lim) {
  ZPolynomial r;
  r.n = ord.n();
  while (!h.empty()) {
    auto lead = h.begin();
    const ZPolynomial* div = nullptr;
    for (auto& g : G)
      if (divides(g.terms.front().mono, lead->first)) {
        div = &g;
        break;
      }
    if (div == nullptr) {
      r.terms.push_back({lead->first, lead->second});
      h.erase(lead);
      continue;
    }
    const mpz_class& lg = div->terms.front().coeff;
    mpz_class lh = lead->second;
    mpz_class gcd_c;
    mpz_gcd(gcd_c.get_mpz_t(), lg.get_mpz_t(), lh.get_mpz_t());
    mpz_class scale_h = lg / gcd_c, scale_g = lh / gcd_c;
    ZMonomial shift(lead->first.size());
    for (std::size_t v = 0; v < shift.size(); ++v) shift[v] = lead->first[v] - div->terms.front().mono[v];
    if (scale_h != 1) {
      for (auto& [m, c] : h) c *= scale_h;
      for (auto& t : r.terms) t.coeff *= scale_h;
    }
    add_scaled(h, *div, -scale_g, shift);
    for (auto& [m, c] : h) check_bits(c, lim);
  }
  if (!r.terms.empty()) {
    mpz_class content = 0;
    for (auto& t : r.terms) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), t.coeff.get_mpz_t());
    if (r.terms.front().coeff < 0) content = -content;
    for (auto& t : r.terms) t.coeff /= content;
  }
  return r;
}

TermMap s_polynomial(const ZPolynomial& f, const ZPolynomial& g, const TermOrder& ord) {
  const ZTerm& a = f.terms.front();
  const ZTerm& b = g.terms.front();
  ZMonomial L = lcm(a.mono, b.mono);
  ZMonomial sf(L.size()), sg(L.size());
  for (std::size_t v = 0; v < L.size(); ++v) {
    sf[v] = L[v] - a.mono[v];
    sg[v] = L[v] - b.mono[v];
  }
  mpz_class gcd_c;
  mpz_gcd(gcd_c.get_mpz_t(), a.coeff.get_mpz_t(), b.coeff.get_mpz_t());
  TermMap h(Greater{&ord});
  add_scaled(h, f, b.coeff / gcd_c, sf);
  add_scaled(h, g, -(a.coeff / gcd_c), sg);
  return h;
}

// Shared pair loop. With extend, nonzero remainders join the basis; without
// it the first nonzero remainder ends the run and false is returned.
bool pair_loop(std::vector<ZPolynomial>& G, const TermOrder& ord, bool extend, BuchbergerStats* stats,
               const GrobnerLimits& lim) {
  BuchbergerStats local;
  BuchbergerStats& st = stats ? *stats : local;
  for (auto& g : G) {
    if (g.is_zero()) throw std::invalid_argument("zero generator");
    normalize(g, ord);
  }
  std::set<std::tuple<int, int, int>> queue; // (degree of lcm, j, i) with i < j
  std::set<std::pair<int, int>> pending;
  auto add_pairs = [&](int j) {
    for (int i = 0; i < j; ++i) {
      queue.insert({degree(lcm(G[i].terms.front().mono, G[j].terms.front().mono)), j, i});
      pending.insert({i, j});
      ++st.pairs_total;
    }
  };
  for (int j = 0; j < static_cast<int>(G.size()); ++j) add_pairs(j);

  auto is_pending = [&](int a, int b) { return pending.count({std::min(a, b), std::max(a, b)}) > 0; };
  while (!queue.empty()) {
    auto [deg, j, i] = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({i, j});
    const ZMonomial& li = G[i].terms.front().mono;
    const ZMonomial& lj = G[j].terms.front().mono;
    if (coprime(li, lj)) {
      ++st.pairs_skipped;
      continue;
    }
    ZMonomial L = lcm(li, lj);
    bool chain = false;
    for (int k = 0; k < static_cast<int>(G.size()) && !chain; ++k)
      if (k != i && k != j && divides(G[k].terms.front().mono, L) && !is_pending(i, k) && !is_pending(j, k))
        chain = true;
    if (chain) {
      ++st.pairs_skipped;
      continue;
    }
    ++st.pairs_reduced;
    ZPolynomial r = reduce(s_polynomial(G[i], G[j], ord), G, ord, lim);
    if (r.is_zero()) continue;
    ++st.nonzero_remainders;
    if (!extend) return false;
    if (G.size() >= lim.max_basis_size) throw GrobnerGuardError("basis size exceeded the configured bound");
    G.push_back(std::move(r));
    add_pairs(static_cast<int>(G.size()) - 1);
  }
  return true;
}

} // namespace

std::vector<ZPolynomial> buchberger(std::vector<ZPolynomial> gens, const TermOrder& ord, BuchbergerStats* stats,
                                    const GrobnerLimits& lim) {
  pair_loop(gens, ord, true, stats, lim);
  return gens;
}

bool is_groebner_basis(std::vector<ZPolynomial> gens, const TermOrder& ord, BuchbergerStats* stats,
                       const GrobnerLimits& lim) {
  return pair_loop(gens, ord, false, stats, lim);
}

std::vector<ZMonomial> initial_ideal(const std::vector<ZPolynomial>& basis, const TermOrder& ord) {
  std::vector<ZMonomial> leads;
  for (auto& g : basis) leads.push_back(initial_term(g, ord).mono);
  std::sort(leads.begin(), leads.end(), [](auto& a, auto& b) { return degree(a) < degree(b) || (degree(a) == degree(b) && a < b); });
  std::vector<ZMonomial> minimal;
  for (auto& m : leads) {
    bool redundant = false;
    for (auto& k : minimal)
      if (divides(k, m)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(m);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

std::vector<ZPolynomial> generator_polynomials(const Permutation& w, const TermOrder& ord, GeneratorSet which) {
  std::vector<ZPolynomial> out;
  for (auto& m : schubert_generators(w, which)) {
    out.push_back(minor_polynomial(m, w.n()));
    normalize(out.back(), ord);
  }
  return out;
}

TheoremBReport verify_theorem_B(const Permutation& w, const TermOrder& ord) {
  if (!ord.is_antidiagonal()) throw std::invalid_argument("verify_theorem_B needs an antidiagonal order");
  if (ord.n() != w.n()) throw std::invalid_argument("order and permutation sizes differ");
  auto t0 = std::chrono::steady_clock::now();
  TheoremBReport rep;
  rep.w = w;
  rep.order = ord.name();
  const int n = w.n();
  auto minors = schubert_generators(w);
  auto gens = generator_polynomials(w, ord);
  rep.generators = gens.size();

  rep.initial_terms_are_antidiagonals = true;
  for (auto& m : minors) {
    auto f = minor_polynomial(m, n);
    if (initial_term(f, ord).mono != zmonomial(n, antidiagonal(m))) rep.initial_terms_are_antidiagonals = false;
  }
  rep.minors_form_basis = is_groebner_basis(gens, ord);
  auto basis = buchberger(gens, ord);
  rep.basis_size = basis.size();

  std::vector<ZMonomial> J;
  auto Jw = antidiagonal_ideal(w);
  for (auto& g : Jw.generators()) J.push_back(zmonomial(n, g));
  std::sort(J.begin(), J.end());
  rep.initial_ideal_matches = initial_ideal(basis, ord) == J;
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

} // namespace schubert
