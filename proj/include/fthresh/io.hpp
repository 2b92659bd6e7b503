#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "fthresh/filtration.hpp"
#include "fthresh/hypergraph.hpp"
#include "fthresh/nu.hpp"
#include "fthresh/polyhedra.hpp"
#include "fthresh/waldschmidt.hpp"

namespace fthresh {

using nlohmann::json;

json ideal_to_json(const MonomialIdeal& I);
// Accepts the text grammar as a JSON string, or an array of generator strings / exponent arrays.
MonomialIdeal ideal_from_json(const json& j, std::size_t n = 0);

json filtration_to_json(const Filtration& F);
// n = 0 takes "n" from the descriptor or infers it from the largest variable used.
Filtration filtration_from_json(const json& j, std::size_t n = 0);

json hypergraph_to_json(const Hypergraph& H);
Hypergraph hypergraph_from_json(const json& j);

json facet_to_json(const FacetInequality& f);
json valuation_to_json(const WeightVector& v);
WeightVector valuation_from_json(const json& j);

// decimal: extra "decimal" fields with k digits, display only.
json threshold_to_json(const ThresholdResult& r, std::optional<unsigned> decimal = std::nullopt);
json nu_record_to_json(const NuRecord& r);
std::string nu_csv(const std::vector<NuRecord>& records);
json waldschmidt_to_json(const WaldschmidtResult& w);
json bounds_to_json(const BoundsReport& b);
json law_to_json(const LawReport& r);
json big_height_to_json(const BigHeightReport& r);

}  // namespace fthresh
