#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "fthresh/filtration.hpp"
#include "fthresh/polyhedra.hpp"

namespace fthresh {

// v(a_r): min over generators of a_r.
Rational valuation_of_level(const WeightVector& v, const Filtration& F, std::uint64_t r);

struct WaldschmidtResult {
    Rational lower;
    Rational upper;
    std::uint64_t horizon = 0;
    std::optional<Rational> exact;
    std::string method;  // how `exact` was obtained, empty if absent
};

// Exact value when a closed form applies: ordinary and ceiling rules, polyhedral rules (LP over
// the level-one polyhedron), intersections of polyhedral rules, verified Veronese degrees.
std::optional<std::pair<Rational, std::string>> exact_skew_waldschmidt(
    const WeightVector& v, const Filtration& F, std::optional<std::uint64_t> veronese_degree = std::nullopt);

// upper = min_{r <= R} v(a_r)/r; lower = max(0, upper - v(a_1)/R), not certified.
WaldschmidtResult skew_waldschmidt(const WeightVector& v, const Filtration& F, std::uint64_t horizon,
                                   std::optional<std::uint64_t> veronese_degree = std::nullopt);

}  // namespace fthresh
