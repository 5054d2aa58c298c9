#pragma once

#include <string>

#include <json.hpp>

#include "purebetti/betti.hpp"
#include "purebetti/complex.hpp"
#include "purebetti/homology.hpp"
#include "purebetti/survey.hpp"

namespace purebetti {

using Json = nlohmann::ordered_json;

// {"labels": [...], "facets": [[...], ...]}; facets are written canonically.
Json complex_to_json(const SimplicialComplex& delta);
// Accepts any generator list. Without "labels", the universe is the set of
// labels appearing in the generators, in natural order.
SimplicialComplex complex_from_json(const Json& j);
// "1,3,5;2,3,4;1,2,6" shorthand.
SimplicialComplex complex_from_shorthand(const std::string& text);

Json homology_to_json(const HomologyVector& h);
Json index_set_to_json(const IndexSet& s);
// {"n": 6, "entries": [[i, d, beta], ...], "rows": [...]}
Json diagram_to_json(const BettiDiagram& b);
BettiDiagram diagram_from_json(const Json& j);
Json pr_summary_to_json(const SimplicialComplex& delta, const PrSummary& s);

Json census_to_json(const CensusReport& report);
std::string census_to_csv(const CensusReport& report);
Json rays_to_json(const RaySet& rays);

}  // namespace purebetti
