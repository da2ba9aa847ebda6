#include "schubert/pipedream.hpp"
#include "schubert/guard.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace schubert {

PipeDream::PipeDream(int n, std::set<Cell> crosses) : n_(n), crosses_(std::move(crosses)) {
  for (auto [i, j] : crosses_)
    if (i < 1 || j < 1 || i > n_ || j > n_) throw std::invalid_argument("cross outside the grid");
}

PipeDream PipeDream::triangle(int n) {
  std::set<Cell> c;
  for (int i = 1; i < n; ++i)
    for (int j = 1; i + j <= n; ++j) c.insert({i, j});
  return PipeDream(n, std::move(c));
}

bool PipeDream::inside_triangle() const {
  for (auto [i, j] : crosses_)
    if (i + j > n_) return false;
  return true;
}

void PipeDream::add(int i, int j) {
  if (i < 1 || j < 1 || i > n_ || j > n_) throw std::invalid_argument("cross outside the grid");
  crosses_.insert({i, j});
}

void PipeDream::remove(int i, int j) { crosses_.erase({i, j}); }

Word word_of(const PipeDream& D) {
  Word w;
  for (int q = 1; q <= D.n(); ++q)
    for (int p = D.n(); p >= 1; --p)
      if (D.has(q, p)) w.push_back(q + p - 1);
  return w;
}

namespace {

Permutation trim(const Permutation& p, int n) {
  for (int i = n + 1; i <= p.n(); ++i)
    if (p(i) != i) return p;
  std::vector<int> v(p.images().begin(), p.images().begin() + n);
  return Permutation(std::move(v));
}

} // namespace

Permutation permutation_of(const PipeDream& D) {
  int N = std::max(2 * D.n(), 1);
  return trim(product_of_word(word_of(D), N), D.n());
}

Permutation wiring_permutation(const PipeDream& D) {
  int N = std::max(2 * D.n(), 1);
  std::vector<int> v(N);
  for (int start = 1; start <= N; ++start) {
    int r = start, c = 1;
    bool east = true; // entering tile (r,c) from the west when true, from the south otherwise
    for (;;) {
      bool cross = r <= D.n() && c <= D.n() && D.has(r, c);
      bool go_east = cross ? east : !east;
      if (go_east) {
        ++c;
        east = true;
      } else {
        if (r == 1) break;
        --r;
        east = false;
      }
    }
    v[start - 1] = c;
  }
  return trim(Permutation(std::move(v)), D.n());
}

bool is_reduced(const PipeDream& D) {
  return static_cast<int>(D.size()) == length(permutation_of(D));
}

int start_row(int i, const PipeDream& D) {
  int j = 1;
  while (j <= D.n() && D.has(i, j)) ++j;
  return j;
}

std::vector<int> mitosis_columns(int i, const PipeDream& D) {
  std::vector<int> J;
  int s = start_row(i, D);
  for (int j = 1; j < s; ++j)
    if (!D.has(i + 1, j)) J.push_back(j);
  return J;
}

PipeDreamSet mitosis(int i, const PipeDream& D) {
  PipeDreamSet out;
  auto J = mitosis_columns(i, D);
  for (int p : J) {
    PipeDream E = D;
    E.remove(i, p);
    for (int j : J) {
      if (j >= p) break;
      E.remove(i, j);
      E.add(i + 1, j);
    }
    out.insert(std::move(E));
  }
  return out;
}

PipeDreamSet mitosis(int i, const PipeDreamSet& P) {
  PipeDreamSet out;
  for (const auto& D : P) {
    auto kids = mitosis(i, D);
    out.insert(kids.begin(), kids.end());
  }
  return out;
}

bool is_chutable(const PipeDream& D, const ChuteRect& r) {
  if (r.east - r.west < 1 || r.west < 1 || r.east > D.n() || r.row < 1 || r.row + 1 > D.n()) return false;
  for (int c = r.west; c <= r.east; ++c)
    for (int q = r.row; q <= r.row + 1; ++q) {
      bool corner = (q == r.row && c == r.west) || (q == r.row + 1 && (c == r.west || c == r.east));
      if (D.has(q, c) == corner) return false;
    }
  return true;
}

PipeDream chute(const PipeDream& D, const ChuteRect& r) {
  if (!is_chutable(D, r)) throw std::invalid_argument("rectangle is not chutable");
  PipeDream E = D;
  E.remove(r.row, r.east);
  E.add(r.row + 1, r.west);
  return E;
}

std::vector<ChuteRect> chutable_rectangles(const PipeDream& D) {
  std::vector<ChuteRect> out;
  for (int row = 1; row < D.n(); ++row)
    for (int west = 1; west < D.n(); ++west)
      for (int east = west + 1; east <= D.n(); ++east) {
        ChuteRect r{row, west, east};
        if (is_chutable(D, r)) out.push_back(r);
      }
  return out;
}

std::vector<PipeDream> mitosis_by_chutes(int i, const PipeDream& D) {
  std::vector<PipeDream> out;
  std::size_t count = mitosis_columns(i, D).size();
  if (count == 0) return out;
  int j = 1;
  while (!(D.has(i, j) && !D.has(i + 1, j))) ++j;
  PipeDream cur = D;
  cur.remove(i, j);
  out.push_back(cur);
  while (out.size() < count) {
    bool moved = false;
    for (int west = 1; west < D.n() && !moved; ++west)
      for (int east = west + 1; east <= D.n() && !moved; ++east) {
        ChuteRect r{i, west, east};
        if (is_chutable(cur, r)) {
          cur = chute(cur, r);
          moved = true;
        }
      }
    if (!moved) throw std::logic_error("chute mitosis ran out of chutable rectangles");
    out.push_back(cur);
  }
  return out;
}

PipeDreamSet chute_closure(const PipeDream& D) {
  PipeDreamSet seen{D};
  std::deque<PipeDream> todo{D};
  while (!todo.empty()) {
    PipeDream cur = todo.front();
    todo.pop_front();
    for (auto r : chutable_rectangles(cur)) {
      PipeDream next = chute(cur, r);
      if (seen.insert(next).second) todo.push_back(next);
    }
  }
  return seen;
}

PipeDream top_pipe_dream(const Permutation& w) {
  // Column j holds the j-th Lehmer code entry of w^{-1}, stacked from row 1.
  auto code = lehmer_code(w.inverse());
  std::set<Cell> c;
  for (int j = 1; j <= w.n(); ++j)
    for (int i = 1; i <= code[j - 1]; ++i) c.insert({i, j});
  return PipeDream(w.n(), std::move(c));
}

bool has_due_north_property(const PipeDream& D) {
  for (auto [i, j] : D.crosses())
    if (i > 1 && !D.has(i - 1, j)) return false;
  return true;
}

PipeDreamSet rp_mitosis(const Permutation& w) {
  PipeDreamSet cur{PipeDream::triangle(w.n())};
  for (int i : reduced_word_to_w0(w)) {
    PipeDreamSet next;
    for (const auto& D : cur)
      for (auto& E : mitosis(i, D))
        if (!next.insert(E).second) throw std::logic_error("mitosis produced overlapping offspring");
    cur = std::move(next);
  }
  return cur;
}

PipeDreamSet rp_bruteforce(const Permutation& w) {
  const int n = w.n();
  require_size(n, 7, "rp_bruteforce");
  // Cells of the triangle in word order, with their letters.
  std::vector<Cell> cells;
  for (int q = 1; q <= n; ++q)
    for (int p = n; p >= 1; --p)
      if (q + p <= n) cells.push_back({q, p});
  const int target = length(w);
  PipeDreamSet out;
  std::vector<Cell> chosen;

  // u is the product of the chosen letters; it must stay a reduced prefix of w.
  auto rec = [&](auto&& self, std::size_t k, const Permutation& u, int len) -> void {
    if (len == target) {
      if (u == w) out.insert(PipeDream(n, std::set<Cell>(chosen.begin(), chosen.end())));
      return;
    }
    if (cells.size() - k < static_cast<std::size_t>(target - len)) return;
    for (std::size_t m = k; m < cells.size(); ++m) {
      int a = cells[m].first + cells[m].second - 1;
      if (u(a) > u(a + 1)) continue;
      Permutation v = apply_right_transposition(u, a);
      if (length(v.inverse() * w) != target - len - 1) continue;
      chosen.push_back(cells[m]);
      self(self, m + 1, v, len + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0, Permutation::identity(n), 0);
  return out;
}

LaurentPolynomial pipe_dream_sum(const PipeDreamSet& P) {
  LaurentPolynomial s;
  for (const auto& D : P) {
    Monomial m;
    for (auto [i, j] : D.crosses()) m.set(xvar(i), m.exponent(xvar(i)) + 1);
    s.add_term(m, 1);
  }
  return s;
}

LaurentPolynomial double_pipe_dream_sum(const PipeDreamSet& P) {
  LaurentPolynomial s;
  for (const auto& D : P) {
    LaurentPolynomial t(1);
    for (auto [i, j] : D.crosses()) t *= LaurentPolynomial::var(xvar(i)) - LaurentPolynomial::var(yvar(j));
    s += t;
  }
  return s;
}

std::string render(const PipeDream& D) {
  std::string s;
  for (int i = 1; i <= D.n(); ++i) {
    for (int j = 1; j <= D.n(); ++j) {
      if (j > 1) s += ' ';
      s += D.has(i, j) ? '+' : '.';
    }
    s += '\n';
  }
  return s;
}

} // namespace schubert
