#include "schubert/bruhatlab.hpp"
#include "schubert/checks.hpp"
#include "schubert/families.hpp"
#include "schubert/grobner.hpp"
#include "schubert/guard.hpp"
#include "schubert/hilbert.hpp"
#include "schubert/ideal.hpp"
#include "schubert/json_io.hpp"
#include "schubert/pipedream.hpp"
#include "schubert/subword.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace schubert;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

// Raised for well-formed commands whose arguments make no sense.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  bool slow = false;
  std::string perm;
  std::string word;
  int index = 0;
  bool dbl = false;
  bool render = false;
  std::string method = "mitosis";
  std::string generators = "regions";
  bool all_s4 = false;
  int n = 0;
  std::string order;
  std::string grading = "zn";
  bool shelling = false;
};

// One-line text, or a JSON array of images.
Permutation read_permutation(const std::string& text) {
  auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '[') {
    try {
      return permutation_from_json(json::parse(text));
    } catch (const json::exception& e) {
      throw std::invalid_argument(std::string("malformed permutation JSON: ") + e.what());
    }
  }
  return Permutation::parse(text);
}

Word read_word(const std::string& text) {
  Word w;
  if (text.find_first_of(",[ ") != std::string::npos) {
    std::string t = text;
    for (char& c : t)
      if (c == ',' || c == '[' || c == ']') c = ' ';
    std::istringstream in(t);
    int s;
    while (in >> s) w.push_back(s);
    if (!in.eof()) throw std::invalid_argument("malformed word: " + text);
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw std::invalid_argument("malformed word: " + text);
      w.push_back(c - '0');
    }
  }
  for (int s : w)
    if (s < 1) throw std::invalid_argument("word letters must be positive");
  return w;
}

Permutation checked(const std::string& text) {
  Permutation w = read_permutation(text);
  require_size(w.n(), env_max_n(), "permutation");
  return w;
}

std::string face_str(const Face& F) {
  std::string s = "{";
  for (std::size_t k = 0; k < F.size(); ++k) s += (k ? "," : "") + std::to_string(F[k]);
  return s + "}";
}

std::string cells_str(const CellSet& cells) {
  std::string s;
  for (auto [i, j] : cells) s += (s.empty() ? "" : "*") + var_name(zvar(i, j));
  return s;
}

int cmd_polynomial(const Options& o, bool groth) {
  Permutation w = checked(o.perm);
  Family f = groth ? (o.dbl ? Family::DoubleGrothendieck : Family::Grothendieck)
                   : (o.dbl ? Family::DoubleSchubert : Family::Schubert);
  require_size(w.n(), 8, groth ? "grothendieck" : "schubert");
  auto p = family_polynomial(f, w);
  if (o.json)
    std::cout << json{{"permutation", to_json(w)}, {"polynomial", to_json(p)}}.dump() << "\n";
  else
    std::cout << p.str() << "\n";
  return exit_ok;
}

void print_dreams(const Options& o, const std::vector<PipeDream>& dreams) {
  bool first = true;
  for (auto& D : dreams) {
    if (o.render) {
      if (!first) std::cout << "\n";
      std::cout << render(D);
    } else {
      std::string s;
      for (auto [i, j] : D.crosses()) s += (s.empty() ? "" : " ") + std::string("(") + std::to_string(i) + "," + std::to_string(j) + ")";
      std::cout << s << "\n";
    }
    first = false;
  }
}

int cmd_rp(const Options& o) {
  Permutation w = checked(o.perm);
  PipeDreamSet P;
  if (o.method == "mitosis")
    P = rp_mitosis(w);
  else if (o.method == "search")
    P = rp_bruteforce(w);
  else if (o.method == "chutes")
    P = chute_closure(top_pipe_dream(w));
  else
    throw UsageError("unknown method: " + o.method);
  if (o.json) {
    std::cout << json{{"permutation", to_json(w)}, {"pipe_dreams", to_json(P)}}.dump() << "\n";
    return exit_ok;
  }
  print_dreams(o, {P.begin(), P.end()});
  return exit_ok;
}

int cmd_mitosis(const Options& o) {
  Permutation w = checked(o.perm);
  if (o.index < 1 || o.index >= w.n()) throw UsageError("index out of range");
  if (!has_right_descent(w, o.index)) throw UsageError("mitosis needs length(w s_i) < length(w)");
  PipeDreamSet offspring = mitosis(o.index, rp_mitosis(w));
  Permutation v = apply_right_transposition(w, o.index);
  if (o.json) {
    std::cout << json{{"permutation", to_json(v)}, {"pipe_dreams", to_json(offspring)}}.dump() << "\n";
    return exit_ok;
  }
  print_dreams(o, {offspring.begin(), offspring.end()});
  return exit_ok;
}

int cmd_ideal(const Options& o) {
  Permutation w = checked(o.perm);
  GeneratorSet which = o.generators == "full"        ? GeneratorSet::Full
                       : o.generators == "essential" ? GeneratorSet::Essential
                                                     : GeneratorSet::Regions;
  auto minors = schubert_generators(w, which);
  auto J = antidiagonal_ideal(w, which);
  std::set<CellSet> facets;
  bool with_facets = w.n() <= std::min(6, env_max_n());
  if (with_facets) facets = stanley_reisner_facets(J);
  if (o.json) {
    json m = json::array();
    for (auto& g : minors) m.push_back(to_json(g));
    json out = {{"permutation", to_json(w)}, {"minors", m}, {"antidiagonal_ideal", to_json(J)}};
    if (with_facets) out["facets"] = to_json(facets);
    std::cout << out.dump() << "\n";
    return exit_ok;
  }
  std::cout << "minors: " << minors.size() << "\n";
  std::cout << "antidiagonal generators: " << J.generators().size() << "\n";
  for (auto& g : J.generators()) std::cout << "  " << cells_str(g) << "\n";
  if (with_facets) {
    std::cout << "facets: " << facets.size() << "\n";
    for (auto& F : facets) std::cout << "  complement " << cells_str(complement(F, w.n())) << "\n";
  }
  return exit_ok;
}

int cmd_gb_verify(const Options& o) {
  std::vector<Permutation> perms;
  if (o.all_s4) {
    perms = all_permutations(4);
  } else if (!o.perm.empty()) {
    perms.push_back(checked(o.perm));
  } else if (o.n > 0) {
    require_size(o.n, o.slow ? 6 : 5, "gb-verify sweep");
    perms = all_permutations(o.n);
  } else {
    throw UsageError("gb-verify needs a permutation, --all-s4 or --n");
  }
  std::vector<OrderTag> tags;
  if (o.order.empty())
    tags = {OrderTag::AntidiagRevlexNW};
  else
    tags = {parse_order(o.order)};
  bool all_ok = true;
  json rows = json::array();
  for (OrderTag tag : tags) {
    for (auto& w : perms) {
      TermOrder ord(tag, w.n());
      if (!ord.is_antidiagonal()) {
        // Reports whether the minors happen to be a basis; no theorem is claimed.
        bool basis = is_groebner_basis(generator_polynomials(w, ord), ord);
        if (o.json)
          rows.push_back({{"permutation", to_json(w)}, {"order", ord.name()}, {"minors_form_basis", basis}});
        else
          std::cout << w.str() << " " << ord.name() << " minors " << (basis ? "form" : "do not form")
                    << " a Groebner basis\n";
        continue;
      }
      auto rep = verify_theorem_B(w, ord);
      all_ok = all_ok && rep.ok();
      if (o.json) {
        rows.push_back({{"permutation", to_json(w)},
                        {"order", rep.order},
                        {"generators", rep.generators},
                        {"basis_size", rep.basis_size},
                        {"initial_terms_are_antidiagonals", rep.initial_terms_are_antidiagonals},
                        {"minors_form_basis", rep.minors_form_basis},
                        {"initial_ideal_matches", rep.initial_ideal_matches},
                        {"pass", rep.ok()}});
      } else {
        std::cout << (rep.ok() ? "PASS " : "FAIL ") << w.str() << " " << rep.order << " generators=" << rep.generators
                  << " basis=" << rep.basis_size << "\n";
      }
    }
  }
  if (o.json) std::cout << rows.dump() << "\n";
  return all_ok ? exit_ok : exit_failed;
}

int cmd_kpoly(const Options& o, bool mdeg) {
  Permutation w = checked(o.perm);
  Grading g = parse_grading(o.grading);
  require_size(w.n(), 6, mdeg ? "multidegree" : "kpoly");
  auto J = antidiagonal_ideal(w);
  LaurentPolynomial p = mdeg ? multidegree_of(w, g) : k_polynomial(J, g);
  if (o.json)
    std::cout << json{{"permutation", to_json(w)}, {"grading", grading_name(g)}, {"polynomial", to_json(p)}}.dump()
              << "\n";
  else
    std::cout << p.str() << "\n";
  return exit_ok;
}

int cmd_subword(const Options& o) {
  Word Q = read_word(o.word);
  Permutation w = checked(o.perm);
  if (Q.size() > 64) throw SizeGuardError("subword: word longer than 64 letters");
  auto D = subword_complex(Q, w);
  std::vector<Face> order;
  bool shelled = false;
  if (o.shelling && !D.is_void()) {
    order = shelling_from_decomposition(vertex_decompose(D));
    shelled = is_shelling(order, D.complex());
  }
  if (o.json) {
    json out = {{"word", Q}, {"permutation", to_json(w)}, {"facets", to_json(D.facets())}};
    if (o.shelling && !D.is_void()) {
      json ord = json::array();
      for (auto& F : order) ord.push_back(F);
      out["shelling"] = ord;
      out["is_shelling"] = shelled;
    }
    std::cout << out.dump() << "\n";
  } else {
    if (D.is_void()) std::cout << "void complex\n";
    for (auto& F : D.facets()) std::cout << face_str(F) << "\n";
    if (o.shelling && !D.is_void()) {
      std::cout << "shelling:";
      for (auto& F : order) std::cout << " " << face_str(F);
      std::cout << (shelled ? "\nPASS" : "\nFAIL") << "\n";
    }
  }
  return o.shelling && !D.is_void() && !shelled ? exit_failed : exit_ok;
}

int cmd_check_all(const Options& o) {
  CheckOptions opt;
  opt.n = o.n > 0 ? o.n : 4;
  opt.slow = o.slow;
  json rows = json::array();
  auto results = run_acceptance(opt, [&](const CriterionResult& r) {
    if (o.json)
      rows.push_back({{"criterion", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
    else
      std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.id << " " << r.title << ": " << r.detail << std::endl;
  });
  if (o.json) std::cout << rows.dump() << "\n";
  bool ok = std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.pass; });
  return ok ? exit_ok : exit_failed;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schubert polynomials, pipe dreams and antidiagonal Groebner bases"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Emit JSON instead of text");
  app.add_flag("--slow", o.slow, "Allow the larger sweeps");

  auto perm_arg = [&](CLI::App* sub) { sub->add_option("perm", o.perm, "Permutation, e.g. 2143 or [2,1,4,3]")->required(); };

  auto* schub = app.add_subcommand("schubert", "Schubert polynomial");
  perm_arg(schub);
  schub->add_flag("--double", o.dbl, "Double Schubert polynomial");

  auto* groth = app.add_subcommand("grothendieck", "Grothendieck polynomial");
  perm_arg(groth);
  groth->add_flag("--double", o.dbl, "Double Grothendieck polynomial");

  auto* rp = app.add_subcommand("rp", "Reduced pipe dreams");
  perm_arg(rp);
  rp->add_flag("--render", o.render, "Draw each pipe dream");
  rp->add_option("--method", o.method, "mitosis, search or chutes")->check(CLI::IsMember({"mitosis", "search", "chutes"}));

  auto* mit = app.add_subcommand("mitosis", "Mitosis of RP(w) in row i");
  perm_arg(mit);
  mit->add_option("i", o.index, "Row index")->required();
  mit->add_flag("--render", o.render, "Draw each pipe dream");

  auto* ideal = app.add_subcommand("ideal", "Minors, antidiagonal ideal and its facets");
  perm_arg(ideal);
  ideal->add_option("--generators", o.generators, "regions, essential or full")
      ->check(CLI::IsMember({"regions", "essential", "full"}));

  auto* gb = app.add_subcommand("gb-verify", "Check that the minors form an antidiagonal Groebner basis");
  gb->add_option("perm", o.perm, "Permutation");
  gb->add_flag("--all-s4", o.all_s4, "Every permutation of S_4");
  gb->add_option("--n", o.n, "Every permutation of S_n");
  gb->add_option("--order", o.order, "antidiag-revlex, antidiag-lex or diag")
      ->check(CLI::IsMember({"antidiag-revlex", "antidiag-lex", "diag"}));

  auto* kp = app.add_subcommand("kpoly", "K-polynomial of the antidiagonal ideal");
  perm_arg(kp);
  kp->add_option("--grading", o.grading, "z, zn, z2n or zn2")->check(CLI::IsMember({"z", "zn", "z2n", "zn2"}));

  auto* md = app.add_subcommand("multidegree", "Multidegree of the antidiagonal ideal");
  perm_arg(md);
  md->add_option("--grading", o.grading, "z, zn, z2n or zn2")->check(CLI::IsMember({"z", "zn", "z2n", "zn2"}));

  auto* sw = app.add_subcommand("subword", "Facets of a subword complex");
  sw->add_option("word", o.word, "Word, e.g. 32323 or 3,2,3,2,3")->required();
  perm_arg(sw);
  sw->add_flag("--shelling", o.shelling, "Print and check a shelling from the vertex decomposition");

  auto* all = app.add_subcommand("check-all", "Run the acceptance suite");
  all->add_option("--n", o.n, "Sweep size (3 to 5)");
  all->add_flag("--slow", o.slow, "Include the S_{n+1} and 13865742 Groebner runs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*schub) return cmd_polynomial(o, false);
    if (*groth) return cmd_polynomial(o, true);
    if (*rp) return cmd_rp(o);
    if (*mit) return cmd_mitosis(o);
    if (*ideal) return cmd_ideal(o);
    if (*gb) return cmd_gb_verify(o);
    if (*kp) return cmd_kpoly(o, false);
    if (*md) return cmd_kpoly(o, true);
    if (*sw) return cmd_subword(o);
    if (*all) return cmd_check_all(o);
  } catch (const SizeGuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_failed;
  }
  return exit_usage;
}
