#include "schubert/perm.hpp"
#include "schubert/guard.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace schubert {

int env_max_n() {
  const char* s = std::getenv("SCHUBERT_MAX_N");
  if (s == nullptr || *s == '\0') return 1 << 20;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (end == s || v <= 0) throw std::invalid_argument("SCHUBERT_MAX_N must be a positive integer");
  return static_cast<int>(v);
}

void require_size(int n, int limit, const std::string& what) {
  int cap = std::min(limit, env_max_n());
  if (n > cap)
    throw SizeGuardError(what + ": n = " + std::to_string(n) + " exceeds the size guard " +
                         std::to_string(cap));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n() || seen[v]) throw std::invalid_argument("not a permutation: " + str());
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::longest(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - i;
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> v;
  bool separated = text.find_first_of(",[ ") != std::string_view::npos;
  if (!separated) {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("malformed permutation: " + std::string(text));
      v.push_back(c - '0');
    }
  } else {
    int cur = -1;
    for (char c : text) {
      if (std::isdigit(static_cast<unsigned char>(c))) {
        cur = (cur < 0 ? 0 : cur * 10) + (c - '0');
      } else if (c == ',' || c == ' ' || c == '[' || c == ']') {
        if (cur >= 0) v.push_back(cur);
        cur = -1;
      } else {
        throw std::invalid_argument("malformed permutation: " + std::string(text));
      }
    }
    if (cur >= 0) v.push_back(cur);
  }
  if (v.empty()) throw std::invalid_argument("empty permutation");
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> v(n());
  for (int i = 1; i <= n(); ++i) v[(*this)(i) - 1] = i;
  return Permutation(std::move(v));
}

Permutation Permutation::embed(int N) const {
  if (N < n()) throw std::invalid_argument("embed: target smaller than source");
  std::vector<int> v = images_;
  for (int i = n() + 1; i <= N; ++i) v.push_back(i);
  return Permutation(std::move(v));
}

std::string Permutation::str() const {
  std::string s;
  bool wide = n() >= 10;
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (wide && k > 0) s += ',';
    s += std::to_string(images_[k]);
  }
  return s;
}

Permutation operator*(const Permutation& u, const Permutation& v) {
  if (u.n() != v.n()) throw std::invalid_argument("product of permutations of different sizes");
  std::vector<int> r(u.n());
  for (int i = 1; i <= u.n(); ++i) r[i - 1] = u(v(i));
  return Permutation(std::move(r));
}

int length(const Permutation& w) {
  int inv = 0;
  for (int i = 1; i <= w.n(); ++i)
    for (int j = i + 1; j <= w.n(); ++j)
      if (w(i) > w(j)) ++inv;
  return inv;
}

RankMatrix::RankMatrix(const Permutation& w) : n_(w.n()), entries_(n_ * n_, 0) {
  for (int q = 1; q <= n_; ++q)
    for (int p = 1; p <= n_; ++p) {
      int above = q > 1 ? entries_[(q - 2) * n_ + (p - 1)] : 0;
      entries_[(q - 1) * n_ + (p - 1)] = above + (w(q) <= p ? 1 : 0);
    }
}

int RankMatrix::operator()(int q, int p) const {
  if (q == 0 || p == 0) return 0;
  return entries_[(q - 1) * n_ + (p - 1)];
}

RankMatrix rank_matrix(const Permutation& w) { return RankMatrix(w); }

Permutation from_rank_matrix(const RankMatrix& r) {
  int n = r.n();
  std::vector<int> v(n);
  for (int q = 1; q <= n; ++q)
    for (int p = 1; p <= n; ++p)
      if (r(q, p) - r(q - 1, p) - r(q, p - 1) + r(q - 1, p - 1) == 1) v[q - 1] = p;
  return Permutation(std::move(v));
}

Permutation apply_right_transposition(const Permutation& w, int i) {
  if (i < 1 || i >= w.n()) throw std::out_of_range("reflection index out of range");
  std::vector<int> v = w.images();
  std::swap(v[i - 1], v[i]);
  return Permutation(std::move(v));
}

Permutation apply_left_transposition(int i, const Permutation& w) {
  if (i < 1 || i >= w.n()) throw std::out_of_range("reflection index out of range");
  std::vector<int> v = w.images();
  for (int& x : v) {
    if (x == i) x = i + 1;
    else if (x == i + 1) x = i;
  }
  return Permutation(std::move(v));
}

bool has_right_descent(const Permutation& w, int i) { return w(i) > w(i + 1); }

Word reduced_word_to_w0(const Permutation& w) {
  // Walk down from w0 to w; x = w^{-1} u shrinks by one right descent per step.
  Permutation x = w.inverse() * Permutation::longest(w.n());
  Word word;
  for (;;) {
    int i = 1;
    while (i < w.n() && !has_right_descent(x, i)) ++i;
    if (i >= w.n()) break;
    word.push_back(i);
    x = apply_right_transposition(x, i);
  }
  return word;
}

Permutation product_of_word(const Word& word, int n) {
  Permutation p = Permutation::identity(n);
  for (int a : word) p = apply_right_transposition(p, a);
  return p;
}

std::vector<int> lehmer_code(const Permutation& w) {
  std::vector<int> c(w.n(), 0);
  for (int i = 1; i <= w.n(); ++i)
    for (int j = i + 1; j <= w.n(); ++j)
      if (w(j) < w(i)) ++c[i - 1];
  return c;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<CoveringPair> covering_pairs(int n) {
  std::vector<CoveringPair> out;
  for (const auto& w : all_permutations(n))
    for (int i = 1; i < n; ++i)
      if (has_right_descent(w, i)) out.push_back({w, i});
  return out;
}

} // namespace schubert
