#include "schubert/ideal.hpp"
#include "schubert/guard.hpp"

#include <algorithm>
#include <functional>

namespace schubert {

std::vector<Cell> antidiagonal(const Minor& m) {
  std::vector<Cell> cells;
  int k = m.size();
  for (int a = 0; a < k; ++a) cells.push_back({m.rows[a], m.cols[k - 1 - a]});
  std::sort(cells.begin(), cells.end());
  return cells;
}

std::vector<Cell> essential_set(const Permutation& w) {
  const int n = w.n();
  const Permutation winv = w.inverse();
  auto in_diagram = [&](int q, int p) {
    return q >= 1 && p >= 1 && q <= n && p <= n && w(q) > p && winv(p) > q;
  };
  std::vector<Cell> ess;
  for (int q = 1; q <= n; ++q)
    for (int p = 1; p <= n; ++p)
      if (in_diagram(q, p) && !in_diagram(q + 1, p) && !in_diagram(q, p + 1)) ess.push_back({q, p});
  return ess;
}

namespace {

void for_each_subset(int m, int k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> idx(k);
  auto rec = [&](auto&& self, int pos, int next) -> void {
    if (pos == k) {
      f(idx);
      return;
    }
    for (int v = next; v <= m - (k - pos) + 1; ++v) {
      idx[pos] = v;
      self(self, pos + 1, v + 1);
    }
  };
  rec(rec, 0, 1);
}

} // namespace

std::set<Minor> schubert_generators(const Permutation& w, GeneratorSet which) {
  const int n = w.n();
  RankMatrix r(w);
  std::set<Minor> out;
  auto add_all = [&](int q, int p, int k) {
    for_each_subset(q, k, [&](const std::vector<int>& rows) {
      for_each_subset(p, k, [&](const std::vector<int>& cols) { out.insert(Minor{rows, cols}); });
    });
  };
  if (which == GeneratorSet::Regions) {
    // For each rank r met at an essential box: every (r+1)-minor whose
    // southeast corner lies where the rank is at most r.
    std::set<int> ranks;
    for (auto [q, p] : essential_set(w)) ranks.insert(r(q, p));
    for (int k : ranks)
      for (int q = k + 1; q <= n; ++q)
        for (int p = k + 1; p <= n; ++p) {
          if (r(q, p) > k) continue;
          for_each_subset(q - 1, k, [&](const std::vector<int>& rows) {
            for_each_subset(p - 1, k, [&](const std::vector<int>& cols) {
              Minor m{rows, cols};
              m.rows.push_back(q);
              m.cols.push_back(p);
              out.insert(std::move(m));
            });
          });
        }
    return out;
  }
  if (which == GeneratorSet::Essential) {
    for (auto [q, p] : essential_set(w)) add_all(q, p, r(q, p) + 1);
  } else {
    for (int q = 1; q <= n; ++q)
      for (int p = 1; p <= n; ++p)
        if (r(q, p) < std::min(q, p)) add_all(q, p, r(q, p) + 1);
  }
  return out;
}

SquarefreeMonomialIdeal::SquarefreeMonomialIdeal(int n, std::set<CellSet> generators)
    : n_(n), gens_(std::move(generators)) {}

void SquarefreeMonomialIdeal::minimalize() {
  std::vector<CellSet> v(gens_.begin(), gens_.end());
  std::stable_sort(v.begin(), v.end(), [](auto& a, auto& b) { return a.size() < b.size(); });
  std::set<CellSet> keep;
  std::vector<CellSet> kept;
  for (auto& g : v) {
    bool redundant = false;
    for (auto& h : kept)
      if (std::includes(g.begin(), g.end(), h.begin(), h.end())) {
        redundant = true;
        break;
      }
    if (!redundant) {
      kept.push_back(g);
      keep.insert(g);
    }
  }
  gens_ = std::move(keep);
}

bool SquarefreeMonomialIdeal::contains_support(const std::set<Cell>& support) const {
  for (auto& g : gens_)
    if (std::all_of(g.begin(), g.end(), [&](const Cell& c) { return support.count(c) > 0; })) return true;
  return false;
}

SquarefreeMonomialIdeal antidiagonal_ideal(const Permutation& w, GeneratorSet which) {
  std::set<CellSet> gens;
  for (auto& m : schubert_generators(w, which)) gens.insert(antidiagonal(m));
  SquarefreeMonomialIdeal J(w.n(), std::move(gens));
  J.minimalize();
  return J;
}

std::set<CellSet> minimal_vertex_covers(const SquarefreeMonomialIdeal& J) {
  require_size(J.n(), 6, "stanley_reisner_facets");
  const int n = J.n();
  auto id = [n](const Cell& c) { return (c.first - 1) * n + (c.second - 1); };
  std::vector<std::vector<int>> edges;
  for (auto& g : J.generators()) {
    std::vector<int> e;
    for (auto& c : g) e.push_back(id(c));
    edges.push_back(std::move(e));
  }
  const int N = n * n;
  std::vector<char> chosen(N, 0), excluded(N, 0);
  std::set<CellSet> out;

  auto is_minimal = [&]() {
    for (int v = 0; v < N; ++v) {
      if (!chosen[v]) continue;
      bool private_edge = false;
      for (auto& e : edges) {
        int hits = 0;
        bool has_v = false;
        for (int u : e)
          if (chosen[u]) {
            ++hits;
            has_v |= (u == v);
          }
        if (has_v && hits == 1) {
          private_edge = true;
          break;
        }
      }
      if (!private_edge) return false;
    }
    return true;
  };

  // Branch on the uncovered edge with the fewest free vertices; the k-th branch
  // takes its k-th free vertex and forbids the earlier ones.
  auto rec = [&](auto&& self) -> void {
    const std::vector<int>* best = nullptr;
    int best_free = N + 1;
    for (auto& e : edges) {
      bool hit = false;
      int free = 0;
      for (int u : e) {
        hit |= chosen[u] != 0;
        free += !excluded[u];
      }
      if (hit) continue;
      if (free == 0) return;
      if (free < best_free) {
        best_free = free;
        best = &e;
      }
    }
    if (best == nullptr) {
      if (is_minimal()) {
        CellSet s;
        for (int v = 0; v < N; ++v)
          if (chosen[v]) s.push_back({v / n + 1, v % n + 1});
        out.insert(std::move(s));
      }
      return;
    }
    std::vector<int> newly_excluded;
    for (int u : *best) {
      if (excluded[u]) continue;
      chosen[u] = 1;
      self(self);
      chosen[u] = 0;
      excluded[u] = 1;
      newly_excluded.push_back(u);
    }
    for (int u : newly_excluded) excluded[u] = 0;
  };
  rec(rec);
  return out;
}

CellSet complement(const CellSet& s, int n) {
  CellSet c;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (!std::binary_search(s.begin(), s.end(), Cell{i, j})) c.push_back({i, j});
  return c;
}

std::set<CellSet> stanley_reisner_facets(const SquarefreeMonomialIdeal& J) {
  std::set<CellSet> facets;
  for (auto& cover : minimal_vertex_covers(J)) facets.insert(complement(cover, J.n()));
  return facets;
}

PipeDream facet_complement(const CellSet& facet, int n) {
  auto c = complement(facet, n);
  return PipeDream(n, std::set<Cell>(c.begin(), c.end()));
}

bool prime_decomposition_check(const Permutation& w) {
  PipeDreamSet from_facets;
  for (auto& F : stanley_reisner_facets(antidiagonal_ideal(w))) from_facets.insert(facet_complement(F, w.n()));
  return from_facets == rp_bruteforce(w);
}

} // namespace schubert
