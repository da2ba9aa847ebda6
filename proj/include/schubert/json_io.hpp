#ifndef SCHUBERT_JSON_IO_HPP
#define SCHUBERT_JSON_IO_HPP

#include "schubert/bruhatlab.hpp"
#include "schubert/ideal.hpp"
#include "schubert/perm.hpp"
#include "schubert/pipedream.hpp"
#include "schubert/poly.hpp"
#include "schubert/subword.hpp"

#include <json.hpp>

namespace schubert {

using nlohmann::json;

json to_json(const Permutation& w);
// [{"coeff": c, "exps": {"x1": 2, ...}}, ...] in printing order; coefficients
// beyond 64 bits are written as decimal strings.
json to_json(const LaurentPolynomial& f);
json to_json(const PipeDream& D);
json to_json(const PipeDreamSet& P);
json to_json(const Minor& m);
json to_json(const SquarefreeMonomialIdeal& J);
json to_json(const std::set<CellSet>& facets);
json to_json(const FacetSet& facets);
json to_json(const DecompositionTree& t);
json to_json(const ExponentArray& b);

Permutation permutation_from_json(const json& j);
LaurentPolynomial polynomial_from_json(const json& j);
PipeDream pipe_dream_from_json(const json& j);

} // namespace schubert

#endif
