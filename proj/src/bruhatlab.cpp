#include "schubert/bruhatlab.hpp"
#include "schubert/pipedream.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace schubert {

ExponentArray::ExponentArray(int n, std::vector<int> entries) : n_(n), e_(std::move(entries)) {
  if (static_cast<int>(e_.size()) != n * n) throw std::invalid_argument("exponent array has the wrong size");
  for (int v : e_)
    if (v < 0) throw std::invalid_argument("negative exponent");
}

ExponentArray ExponentArray::from_rows(const std::vector<std::vector<int>>& rows) {
  int n = static_cast<int>(rows.size());
  std::vector<int> e;
  for (auto& r : rows) {
    if (static_cast<int>(r.size()) != n) throw std::invalid_argument("exponent array must be square");
    e.insert(e.end(), r.begin(), r.end());
  }
  return ExponentArray(n, std::move(e));
}

int ExponentArray::degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

int ExponentArray::row_sum(int i) const {
  int s = 0;
  for (int j = 1; j <= n_; ++j) s += at(i, j);
  return s;
}

int ExponentArray::column_sum(int j) const {
  int s = 0;
  for (int i = 1; i <= n_; ++i) s += at(i, j);
  return s;
}

std::set<Cell> ExponentArray::support() const {
  std::set<Cell> s;
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      if (at(i, j)) s.insert({i, j});
  return s;
}

std::string ExponentArray::str() const {
  std::string s;
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      if (j > 1) s += ' ';
      s += at(i, j) ? std::to_string(at(i, j)) : ".";
    }
    s += '\n';
  }
  return s;
}

ExponentArray operator*(int k, const ExponentArray& b) {
  std::vector<int> e = b.entries();
  for (int& v : e) v *= k;
  return ExponentArray(b.n(), std::move(e));
}

bool standard_test(const ExponentArray& b, const SquarefreeMonomialIdeal& J) {
  return !J.contains_support(b.support());
}

bool standard_test(const ExponentArray& b, const Permutation& w) {
  return standard_test(b, antidiagonal_ideal(w));
}

int west(int q, const ExponentArray& b) {
  for (int j = 1; j <= b.n(); ++j)
    if (b.at(q, j)) return j;
  return 0;
}

ExponentArray mutate(int i, const ExponentArray& b) {
  int p = west(i + 1, b);
  if (p == 0) throw std::invalid_argument("mutate: row i+1 is zero");
  ExponentArray c = b;
  --c.at(i + 1, p);
  ++c.at(i, p);
  return c;
}

ExponentArray mutate_times(int i, ExponentArray b, int d) {
  for (int k = 0; k < d; ++k) b = mutate(i, b);
  return b;
}

int start_codon(int i, const SquarefreeMonomialIdeal& J, const ExponentArray& b) {
  auto s = b.support();
  if (J.contains_support(s)) return 0;
  for (int p = 1; p <= b.n(); ++p) {
    auto t = s;
    t.insert({i, p});
    if (!J.contains_support(t)) return p;
  }
  throw std::logic_error("start_codon: no column leaves the ideal");
}

int start_codon(int i, const Permutation& w, const ExponentArray& b) {
  return start_codon(i, antidiagonal_ideal(w), b);
}

int promoter_size(int i, const SquarefreeMonomialIdeal& J, const ExponentArray& b) {
  int s = start_codon(i, J, b);
  int sum = 0;
  for (int j = 1; j < s; ++j) sum += b.at(i + 1, j);
  return sum;
}

int promoter_size(int i, const Permutation& w, const ExponentArray& b) {
  return promoter_size(i, antidiagonal_ideal(w), b);
}

namespace {

std::vector<ExponentArray> lifted(int i, const SquarefreeMonomialIdeal& J, const ExponentArray& b) {
  int prom = promoter_size(i, J, b);
  std::vector<ExponentArray> out{b};
  for (int d = 1; d <= prom; ++d) out.push_back(mutate(i, out.back()));
  return out;
}

} // namespace

std::vector<ExponentArray> lifted_demazure(int i, const Permutation& w, const ExponentArray& b) {
  if (!has_right_descent(w, i)) throw std::invalid_argument("lifted_demazure needs length(ws_i) < length(w)");
  auto J = antidiagonal_ideal(w);
  if (!standard_test(b, J)) throw std::invalid_argument("lifted_demazure needs a standard array");
  return lifted(i, J, b);
}

GeneDissection dissect_gene(int i, int start, const ExponentArray& b) {
  const int n = b.n();
  if (start < 1 || start > n || i < 1 || i >= n) throw std::invalid_argument("dissect_gene: bad row or start");
  ExponentArray c = b;
  ++c.at(i, start);
  ++c.at(i + 1, n);
  GeneDissection g;
  g.row = i;
  g.start = start;
  // Boxes in reading order: (column, bottom?).
  std::vector<std::pair<int, bool>> boxes;
  for (int col = start; col <= n; ++col) {
    boxes.push_back({col, false});
    boxes.push_back({col, true});
  }
  auto value = [&](const std::pair<int, bool>& box) { return c.at(box.second ? i + 1 : i, box.first); };
  for (std::size_t k = 0; k < boxes.size(); ++k) {
    if (!boxes[k].second || value(boxes[k]) == 0) continue;
    std::size_t next = k + 1;
    while (next < boxes.size() && value(boxes[next]) == 0) ++next;
    if (next < boxes.size() && !boxes[next].second) g.exons.push_back({boxes[k].first, boxes[next].first});
  }
  int from = start;
  for (auto [bottom, top] : g.exons) {
    g.introns.push_back({from, bottom});
    from = top;
  }
  g.introns.push_back({from, n});
  return g;
}

ExponentArray intron_mutation_gene(int i, int start, const ExponentArray& b) {
  const int n = b.n();
  GeneDissection g = dissect_gene(i, start, b);
  ExponentArray c = b;
  ++c.at(i, start);
  ++c.at(i + 1, n);
  for (auto [lo, hi] : g.introns) {
    int top = 0, bottom = 0;
    for (int col = lo; col <= hi; ++col) {
      top += c.at(i, col);
      bottom += c.at(i + 1, col);
    }
    // Below: push up from the west. Above: the rotated move, pushing down from the east.
    for (int d = std::abs(top - bottom); d > 0; --d) {
      if (top < bottom) {
        int col = lo;
        while (c.at(i + 1, col) == 0) ++col;
        --c.at(i + 1, col);
        ++c.at(i, col);
      } else {
        int col = hi;
        while (c.at(i, col) == 0) --col;
        --c.at(i, col);
        ++c.at(i + 1, col);
      }
    }
  }
  --c.at(i, start);
  --c.at(i + 1, n);
  for (int v : c.entries())
    if (v < 0) throw std::logic_error("intron mutation produced a negative entry");
  return c;
}

ExponentArray intron_mutation(int i, const Permutation& w, const ExponentArray& b) {
  auto J = antidiagonal_ideal(w);
  int s = start_codon(i, J, b);
  if (s == 0) throw std::invalid_argument("intron_mutation needs a standard array");
  return intron_mutation_gene(i, s, b);
}

namespace {

void enumerate_arrays(int n, int max_degree, int max_entry, const std::function<void(const ExponentArray&)>& f) {
  ExponentArray b(n);
  const int N = n * n;
  auto rec = [&](auto&& self, int v, int budget) -> void {
    if (v == N) {
      f(b);
      return;
    }
    int i = v / n + 1, j = v % n + 1;
    for (int e = 0; e <= std::min(budget, max_entry); ++e) {
      b.at(i, j) = e;
      self(self, v + 1, budget - e);
    }
    b.at(i, j) = 0;
  };
  rec(rec, 0, max_degree);
}

} // namespace

std::vector<ExponentArray> standard_monomials(const SquarefreeMonomialIdeal& J, int max_degree) {
  std::vector<ExponentArray> out;
  enumerate_arrays(J.n(), max_degree, max_degree, [&](const ExponentArray& b) {
    if (standard_test(b, J)) out.push_back(b);
  });
  return out;
}

std::vector<ExponentArray> standard_arrays_bounded(const SquarefreeMonomialIdeal& J, int max_entry) {
  std::vector<ExponentArray> out;
  enumerate_arrays(J.n(), J.n() * J.n() * max_entry, max_entry, [&](const ExponentArray& b) {
    if (standard_test(b, J)) out.push_back(b);
  });
  return out;
}

bool truncated_ev_check(const Permutation& w, int i, int d) {
  if (!has_right_descent(w, i)) throw std::invalid_argument("truncated_ev_check needs length(ws_i) < length(w)");
  auto J = antidiagonal_ideal(w);
  auto Jv = antidiagonal_ideal(apply_right_transposition(w, i));
  std::map<ExponentArray, int> seen;
  for (auto& b : standard_monomials(J, d))
    for (auto& c : lifted(i, J, b)) ++seen[c];
  auto expected = standard_monomials(Jv, d);
  if (seen.size() != expected.size()) return false;
  for (auto& c : expected) {
    auto it = seen.find(c);
    if (it == seen.end() || it->second != 1) return false;
  }
  return true;
}

bool mitosis_facet_bridge(const Permutation& w, int i) {
  if (!has_right_descent(w, i)) throw std::invalid_argument("mitosis_facet_bridge needs length(ws_i) < length(w)");
  const int n = w.n();
  auto J = antidiagonal_ideal(w);
  auto complement_of = [n](const ExponentArray& c) {
    std::set<Cell> cells;
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        if (!c.at(a, b)) cells.insert({a, b});
    return PipeDream(n, std::move(cells));
  };
  PipeDreamSet all;
  std::size_t total = 0;
  for (auto& F : stanley_reisner_facets(J)) {
    ExponentArray b(n);
    for (auto [a, c] : F) b.at(a, c) = 1;
    PipeDream D = complement_of(b);
    PipeDreamSet offspring = mitosis(i, D);
    int prom = promoter_size(i, J, b);
    PipeDreamSet from_mutation;
    ExponentArray c = 2 * b;
    for (int k = 1; k <= 2 * prom - 1; ++k) {
      c = mutate(i, c);
      if (k % 2 == 1) from_mutation.insert(complement_of(c));
    }
    if (offspring != from_mutation) return false;
    total += offspring.size();
    all.insert(offspring.begin(), offspring.end());
  }
  PipeDreamSet target;
  for (auto& F : stanley_reisner_facets(antidiagonal_ideal(apply_right_transposition(w, i))))
    target.insert(facet_complement(F, n));
  return all.size() == total && all == target;
}

} // namespace schubert
