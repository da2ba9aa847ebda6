#include "schubert/json_io.hpp"

#include <stdexcept>

namespace schubert {

json to_json(const Permutation& w) { return json(w.images()); }

json to_json(const LaurentPolynomial& f) {
  json arr = json::array();
  for (auto& [m, c] : f.sorted_terms()) {
    json exps = json::object();
    for (auto& [v, e] : m.exps()) exps[var_name(v)] = e;
    json coeff = c.fits_slong_p() ? json(c.get_si()) : json(c.get_str());
    arr.push_back({{"coeff", coeff}, {"exps", exps}});
  }
  return arr;
}

json to_json(const PipeDream& D) {
  json cells = json::array();
  for (auto [i, j] : D.crosses()) cells.push_back({i, j});
  return {{"n", D.n()}, {"crosses", cells}};
}

json to_json(const PipeDreamSet& P) {
  json arr = json::array();
  for (auto& D : P) arr.push_back(to_json(D));
  return arr;
}

json to_json(const Minor& m) { return {{"rows", m.rows}, {"cols", m.cols}}; }

namespace {

json cells_json(const CellSet& s) {
  json arr = json::array();
  for (auto [i, j] : s) arr.push_back({i, j});
  return arr;
}

} // namespace

json to_json(const SquarefreeMonomialIdeal& J) {
  json arr = json::array();
  for (auto& g : J.generators()) arr.push_back(cells_json(g));
  return arr;
}

json to_json(const std::set<CellSet>& facets) {
  json arr = json::array();
  for (auto& F : facets) arr.push_back(cells_json(F));
  return arr;
}

json to_json(const FacetSet& facets) {
  json arr = json::array();
  for (auto& F : facets) arr.push_back(F);
  return arr;
}

json to_json(const DecompositionTree& t) {
  switch (t.kind) {
  case DecompositionTree::Kind::Void: return {{"kind", "void"}};
  case DecompositionTree::Kind::Empty: return {{"kind", "empty"}};
  case DecompositionTree::Kind::Split: break;
  }
  json j = {{"kind", "split"}, {"vertex", t.vertex}, {"cone", t.cone}, {"link", to_json(*t.link)}};
  if (!t.cone) j["deletion"] = to_json(*t.deletion);
  return j;
}

json to_json(const ExponentArray& b) {
  json rows = json::array();
  for (int i = 1; i <= b.n(); ++i) {
    json r = json::array();
    for (int j = 1; j <= b.n(); ++j) r.push_back(b.at(i, j));
    rows.push_back(r);
  }
  return rows;
}

Permutation permutation_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("permutation JSON must be an array");
  return Permutation(j.get<std::vector<int>>());
}

LaurentPolynomial polynomial_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  LaurentPolynomial f;
  for (auto& t : j) {
    mpz_class c = t.at("coeff").is_string() ? mpz_class(t.at("coeff").get<std::string>())
                                            : mpz_class(t.at("coeff").get<long>());
    Monomial m;
    for (auto& [name, e] : t.at("exps").items()) m.set(parse_var(name), e.get<int>());
    f.add_term(m, c);
  }
  return f;
}

PipeDream pipe_dream_from_json(const json& j) {
  std::set<Cell> cells;
  for (auto& c : j.at("crosses")) cells.insert({c.at(0).get<int>(), c.at(1).get<int>()});
  return PipeDream(j.at("n").get<int>(), std::move(cells));
}

} // namespace schubert
