#include "schubert/checks.hpp"
#include "schubert/bruhatlab.hpp"
#include "schubert/families.hpp"
#include "schubert/grobner.hpp"
#include "schubert/guard.hpp"
#include "schubert/hilbert.hpp"
#include "schubert/ideal.hpp"
#include "schubert/pipedream.hpp"
#include "schubert/subword.hpp"

#include <chrono>
#include <map>
#include <sstream>
#include <stdexcept>

namespace schubert {

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  // Records a failure; only the first few are spelled out.
  void fail(const std::string& what) {
    if (pass || failures < 5) detail << (detail.tellp() > 0 ? "; " : "") << what;
    pass = false;
    ++failures;
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
  int failures = 0;
};

LaurentPolynomial x(int i) { return LaurentPolynomial::var(xvar(i)); }

// Criterion 1.
void schubert_table(Outcome& out) {
  const std::vector<std::pair<std::string, LaurentPolynomial>> table = {
      {"321", x(1) * x(1) * x(2)}, {"312", x(1) * x(1)}, {"231", x(1) * x(2)},
      {"132", x(1) + x(2)},        {"213", x(1)},        {"123", LaurentPolynomial(1)},
  };
  for (auto& [w, expected] : table) {
    auto got = schubert(Permutation::parse(w));
    out.expect(got == expected, "S_" + w + " = " + got.str());
  }
  if (out.pass) out.detail << "six polynomials of S_3 match";
}

// Criterion 2.
void intro_fixture(Outcome& out) {
  Permutation w = Permutation::parse("2143");
  auto S = schubert(w);
  out.expect(S == x(1) * x(1) + x(1) * x(2) + x(1) * x(3), "S_2143 = " + S.str());
  auto G = grothendieck(w);
  out.expect(G == (1 - x(1)) * (1 - x(1) * x(2) * x(3)), "G_2143 = " + G.str());
  auto low = lowest_degree_terms(one_minus_substitute(G, block_mask(Block::X)));
  out.expect(low == S, "lowest terms of G_2143(1-x) = " + low.str());
  if (out.pass) out.detail << "S_2143 = " << S.str() << ", G_2143 = (1 - x1)(1 - x1*x2*x3)";
}

// Criterion 3.
void bjs_identity(Outcome& out, int n) {
  const int big = n + 1;
  std::size_t dreams = 0;
  for (auto& w : all_permutations(big)) {
    auto by_mitosis = rp_mitosis(w);
    auto by_search = rp_bruteforce(w);
    out.expect(by_mitosis == by_search, "RP(" + w.str() + ") differs between mitosis and search");
    out.expect(pipe_dream_sum(by_mitosis) == schubert(w), "single sum for " + w.str());
    dreams += by_mitosis.size();
  }
  for (auto& w : all_permutations(n))
    out.expect(double_pipe_dream_sum(rp_mitosis(w)) == double_schubert(w), "double sum for " + w.str());
  if (out.pass)
    out.detail << big << "! permutations, " << dreams << " reduced pipe dreams; double sums over S_" << n;
}

// Criterion 4.
void theorem_B(Outcome& out, int n, bool slow) {
  std::vector<Permutation> perms = all_permutations(n);
  if (slow) {
    auto more = all_permutations(n + 1);
    perms.insert(perms.end(), more.begin(), more.end());
  }
  std::size_t runs = 0;
  for (OrderTag tag : {OrderTag::AntidiagRevlexNW, OrderTag::AntidiagLexNE}) {
    for (auto& w : perms) {
      auto rep = verify_theorem_B(w, TermOrder(tag, w.n()));
      out.expect(rep.ok(), "antidiagonal Groebner check fails for " + w.str() + " under " + rep.order);
      ++runs;
    }
  }
  Permutation control = Permutation::parse("2143");
  TermOrder diag(OrderTag::DiagLex, 4);
  out.expect(!is_groebner_basis(generator_polynomials(control, diag), diag),
             "minors of 2143 unexpectedly form a diagonal Groebner basis");
  std::size_t big_generators = 0;
  if (slow) {
    Permutation w = Permutation::parse("13865742");
    for (OrderTag tag : {OrderTag::AntidiagRevlexNW, OrderTag::AntidiagLexNE}) {
      auto rep = verify_theorem_B(w, TermOrder(tag, 8));
      out.expect(rep.generators == 165, "13865742 has " + std::to_string(rep.generators) + " generators");
      out.expect(rep.ok(), "antidiagonal Groebner check fails for 13865742 under " + rep.order);
      big_generators = rep.generators;
    }
  }
  if (out.pass) {
    out.detail << runs << " runs over S_" << n << (slow ? " and S_" + std::to_string(n + 1) : "") << " under two orders; diagonal control rejected";
    if (slow) out.detail << "; 13865742 with " << big_generators << " minors";
  }
}

// Criterion 5.
void prime_decomposition(Outcome& out, int n) {
  const int big = n + 1;
  for (auto& w : all_permutations(big)) {
    auto facets = stanley_reisner_facets(antidiagonal_ideal(w));
    PipeDreamSet complements;
    for (auto& F : facets) {
      out.expect(static_cast<int>(F.size()) == big * big - length(w), "impure facet for " + w.str());
      complements.insert(facet_complement(F, big));
    }
    out.expect(complements == rp_mitosis(w), "facet complements differ from RP(" + w.str() + ")");
  }

  auto facets = stanley_reisner_facets(antidiagonal_ideal(Permutation::parse("1432")));
  out.expect(facets.size() == 5, "J_1432 has " + std::to_string(facets.size()) + " facets");
  std::map<Cell, int> occurrences;
  for (auto& F : facets) {
    out.expect(F.size() == 13, "J_1432 facet of size " + std::to_string(F.size()));
    for (auto& c : F) ++occurrences[c];
  }
  std::vector<Cell> free;
  int cone = 0;
  for (auto& [c, k] : occurrences) {
    if (k == static_cast<int>(facets.size()))
      ++cone;
    else
      free.push_back(c);
  }
  out.expect(cone == 11 && free.size() == 5, "J_1432 should be a cone over 5 free vertices");
  // 1-skeleton on the free vertices: every vertex of degree 2, and connected.
  std::map<Cell, std::set<Cell>> adj;
  for (auto& F : facets) {
    std::vector<Cell> here;
    for (auto& c : F)
      if (occurrences[c] < static_cast<int>(facets.size())) here.push_back(c);
    for (auto& a : here)
      for (auto& b : here)
        if (a != b) adj[a].insert(b);
  }
  bool cycle = adj.size() == 5;
  for (auto& [c, nb] : adj) cycle = cycle && nb.size() == 2;
  std::set<Cell> reached;
  std::vector<Cell> stack;
  if (!free.empty()) stack.push_back(free.front());
  while (!stack.empty()) {
    Cell c = stack.back();
    stack.pop_back();
    if (!reached.insert(c).second) continue;
    for (auto& d : adj[c]) stack.push_back(d);
  }
  out.expect(cycle && reached.size() == 5, "J_1432 free 1-skeleton is not a pentagon");
  if (out.pass) out.detail << "S_" << big << " facets equal RP(w); J_1432 is a cone over a pentagon";
}

// Criterion 6.
void theorem_A(Outcome& out, int n) {
  for (auto& w : all_permutations(n)) {
    auto rep = theorem_A_check(w);
    out.expect(rep.ok(), "K-polynomial identities fail for " + w.str());
  }
  if (out.pass) out.detail << "K-polynomials and multidegrees over S_" << n << " in Zn and Z2n";
}

// Criterion 7.
void divided_difference_identity(Outcome& out, int n) {
  auto pairs = covering_pairs(n);
  for (auto& [w, i] : pairs)
    out.expect(divided_difference_identity_check(w, i), "fails for " + w.str() + ", i = " + std::to_string(i));
  if (out.pass) out.detail << pairs.size() << " covering pairs in S_" << n;
}

// Criterion 8.
void subword_complexes(Outcome& out, int n) {
  auto pentagon = subword_complex({3, 2, 3, 2, 3}, Permutation::parse("1432"));
  FacetSet expected = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}};
  out.expect(pentagon.facets() == expected, "pentagon facets differ");

  auto certify = [&](const SubwordComplex& D, const std::string& label) {
    auto tree = vertex_decompose(D);
    out.expect(replay(tree) == D.facets(), "decomposition of " + label + " does not replay");
    out.expect(is_shelling(shelling_from_decomposition(tree), D.complex()), "no shelling for " + label);
  };
  certify(pentagon, "the pentagon");

  const Word Q = square_word(n);
  for (auto& w : all_permutations(n)) {
    auto D = subword_complex(Q, w);
    PipeDreamSet complements;
    for (auto& F : D.facets()) {
      std::set<Cell> crosses;
      for (int pos = 1; pos <= static_cast<int>(Q.size()); ++pos)
        if (!std::binary_search(F.begin(), F.end(), pos)) crosses.insert(square_word_cell(n, pos));
      complements.insert(PipeDream(n, std::move(crosses)));
    }
    out.expect(complements == rp_mitosis(w), "square word complex differs from RP(" + w.str() + ")");
    certify(D, "Q x " + w.str());
  }
  if (out.pass) out.detail << "pentagon plus " << all_permutations(n).size() << " square-word complexes shelled";
}

// The gene occupies rows i, i+1 from the start codon eastward.
bool outside_gene_equal(int i, int start, const ExponentArray& a, const ExponentArray& b) {
  for (int q = 1; q <= a.n(); ++q)
    for (int p = 1; p <= a.n(); ++p) {
      bool in_gene = (q == i || q == i + 1) && p >= start;
      if (!in_gene && a.at(q, p) != b.at(q, p)) return false;
    }
  return true;
}

// Properties of tau for one standard array; an empty string means every property holds.
std::string tau_defect(const Permutation& w, int i, const SquarefreeMonomialIdeal& J, const ExponentArray& b) {
  const int n = b.n();
  ExponentArray t = intron_mutation(i, w, b);
  if (!standard_test(t, J)) return "tau b is not standard";
  if (intron_mutation(i, w, t) != b) return "tau is not an involution";
  int start = start_codon(i, J, b);
  if (!outside_gene_equal(i, start, b, t)) return "tau b changes entries outside the gene";
  int prom = promoter_size(i, J, b);
  if (promoter_size(i, J, t) != prom) return "promoter size changes";
  for (int p = 1; p <= n; ++p)
    if (b.column_sum(p) != t.column_sum(p)) return "column sums change";
  // Row sums give the x-degree; the promoter sits in row i+1.
  std::vector<int> a(n + 1), at(n + 1);
  for (int q = 1; q <= n; ++q) {
    a[q] = b.row_sum(q);
    at[q] = t.row_sum(q);
  }
  a[i + 1] -= prom;
  at[i + 1] -= prom;
  std::swap(a[i], a[i + 1]);
  if (a != at) return "x-degree is not x_{i+1}^prom s_i(x^a)";
  return {};
}

// Worked mutation chain of 13865742 at i = 3.
ExponentArray worked_mu_start() {
  ExponentArray b(8);
  for (int p : {1, 3, 6, 7}) b.at(1, p) = 1;
  for (int p : {1, 3, 4, 5}) b.at(2, p) = 1;
  b.at(3, 5) = 1;
  for (int p : {1, 2, 4}) b.at(4, p) = 2;
  for (int p : {2, 3}) b.at(5, p) = 1;
  return b;
}

const std::vector<std::pair<std::vector<int>, std::vector<int>>>& worked_mu_rows() {
  static const std::vector<std::pair<std::vector<int>, std::vector<int>>> rows = {
      {{0, 0, 0, 0, 1, 0, 0, 0}, {2, 2, 0, 2, 0, 0, 0, 0}}, {{1, 0, 0, 0, 1, 0, 0, 0}, {1, 2, 0, 2, 0, 0, 0, 0}},
      {{2, 0, 0, 0, 1, 0, 0, 0}, {0, 2, 0, 2, 0, 0, 0, 0}}, {{2, 1, 0, 0, 1, 0, 0, 0}, {0, 1, 0, 2, 0, 0, 0, 0}},
      {{2, 2, 0, 0, 1, 0, 0, 0}, {0, 0, 0, 2, 0, 0, 0, 0}}, {{2, 2, 0, 1, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0, 0, 0}},
      {{2, 2, 0, 2, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 0}},
  };
  return rows;
}

ExponentArray sparse_gene(int n, const std::map<int, int>& top, const std::map<int, int>& bottom) {
  ExponentArray b(n);
  for (auto [p, v] : top) b.at(1, p) = v;
  for (auto [p, v] : bottom) b.at(2, p) = v;
  return b;
}

void worked_examples(Outcome& out) {
  Permutation w = Permutation::parse("13865742");
  ExponentArray b = worked_mu_start();
  out.expect(standard_test(b, w), "worked array is not standard");
  out.expect(start_codon(3, w, b) == 5, "start codon is not 5");
  out.expect(promoter_size(3, w, b) == 6, "promoter size is not 6");
  auto chain = lifted_demazure(3, w, b);
  const auto& rows = worked_mu_rows();
  out.expect(chain.size() == rows.size(), "mutation chain has " + std::to_string(chain.size()) + " arrays");
  for (std::size_t d = 0; d < std::min(chain.size(), rows.size()); ++d) {
    ExponentArray expected = b;
    for (int p = 1; p <= 8; ++p) {
      expected.at(3, p) = rows[d].first[p - 1];
      expected.at(4, p) = rows[d].second[p - 1];
    }
    out.expect(chain[d] == expected, "mutation " + std::to_string(d) + " differs");
  }

  ExponentArray gene = sparse_gene(20, {{4, 6}, {9, 4}, {11, 3}, {12, 8}, {13, 6}, {15, 2}, {20, 5}},
                                   {{1, 2}, {3, 3}, {4, 1}, {5, 4}, {7, 5}, {8, 3}, {9, 7}, {15, 5}, {16, 1}, {17, 4}});
  ExponentArray image = sparse_gene(20, {{4, 7}, {5, 4}, {7, 1}, {9, 7}, {11, 3}, {12, 7}, {20, 1}},
                                    {{1, 2}, {3, 3}, {7, 4}, {8, 3}, {9, 4}, {12, 1}, {13, 6}, {15, 7}, {16, 1}, {17, 4}, {20, 4}});
  auto g = dissect_gene(1, 4, gene);
  using Blocks = std::vector<std::pair<int, int>>;
  out.expect(g.exons == Blocks{{8, 9}, {9, 11}, {17, 20}}, "intron example exons differ");
  out.expect(g.introns == Blocks{{4, 8}, {9, 9}, {11, 17}, {20, 20}}, "intron example introns differ");
  out.expect(intron_mutation_gene(1, 4, gene) == image, "intron example image differs");
  out.expect(intron_mutation_gene(1, 4, image) == gene, "intron example is not reversed by tau");
}

// Criterion 9.
void part_three(Outcome& out, int n) {
  std::size_t arrays = 0;
  for (auto& [w, i] : covering_pairs(3)) {
    auto J = antidiagonal_ideal(w);
    for (auto& b : standard_arrays_bounded(J, 2)) {
      std::string defect = tau_defect(w, i, J, b);
      if (!defect.empty()) out.fail(defect + " for w = " + w.str() + ", i = " + std::to_string(i) + "\n" + b.str());
      ++arrays;
    }
  }
  for (auto& [w, i] : covering_pairs(3))
    out.expect(truncated_ev_check(w, i, 4), "truncated ev fails for " + w.str() + ", i = " + std::to_string(i));
  for (auto& [w, i] : covering_pairs(n))
    out.expect(mitosis_facet_bridge(w, i), "mitosis bridge fails for " + w.str() + ", i = " + std::to_string(i));
  worked_examples(out);
  if (out.pass)
    out.detail << "tau on " << arrays << " standard arrays; truncated ev to degree 4; bridge over S_" << n
               << "; both worked examples reproduced";
}

// Criterion 10.
void stability(Outcome& out) {
  for (auto& w : all_permutations(3)) {
    auto big = w.embed(5);
    out.expect(schubert(big) == schubert(w), "Schubert polynomial of " + w.str() + " is unstable");
    out.expect(grothendieck(big) == grothendieck(w), "Grothendieck polynomial of " + w.str() + " is unstable");
  }
  if (out.pass) out.detail << "S_3 values unchanged in S_5";
}

} // namespace

std::string criterion_title(int id) {
  static const char* titles[] = {
      "Schubert table for S_3",
      "2143 fixture",
      "pipe dream formula",
      "antidiagonal Groebner bases",
      "facets of L_w are reduced pipe dreams",
      "K-polynomials and multidegrees",
      "divided differences of multidegrees",
      "subword complexes and shellings",
      "mutation, intron mutation and mitosis",
      "stability under embedding",
  };
  if (id < 1 || id > criterion_count) throw std::invalid_argument("no such criterion");
  return titles[id - 1];
}

CriterionResult run_criterion(int id, const CheckOptions& opt) {
  if (opt.n < 3 || opt.n > 5) throw std::invalid_argument("check size must be 3, 4 or 5");
  require_size(opt.n + 1, 6, "acceptance sweep");
  CriterionResult r;
  r.id = id;
  r.title = criterion_title(id);
  auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    switch (id) {
    case 1: schubert_table(out); break;
    case 2: intro_fixture(out); break;
    case 3: bjs_identity(out, opt.n); break;
    case 4: theorem_B(out, opt.n, opt.slow); break;
    case 5: prime_decomposition(out, opt.n); break;
    case 6: theorem_A(out, opt.n); break;
    case 7: divided_difference_identity(out, opt.n); break;
    case 8: subword_complexes(out, opt.n); break;
    case 9: part_three(out, opt.n); break;
    case 10: stability(out); break;
    }
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  r.pass = out.pass;
  r.detail = out.detail.str();
  if (out.failures > 5) r.detail += "; " + std::to_string(out.failures - 5) + " more failures";
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<CriterionResult> run_acceptance(const CheckOptions& opt,
                                            const std::function<void(const CriterionResult&)>& report) {
  std::vector<CriterionResult> results;
  for (int id = 1; id <= criterion_count; ++id) {
    results.push_back(run_criterion(id, opt));
    if (report) report(results.back());
  }
  return results;
}

} // namespace schubert
