#include "fthresh/waldschmidt.hpp"

#include "fthresh/errors.hpp"
#include "fthresh/lp.hpp"

namespace fthresh {

Rational valuation_of_level(const WeightVector& v, const Filtration& F, std::uint64_t r) {
    if (v.size() != F.ambient()) throw DomainError("valuation length mismatch");
    return valuation_of_ideal(v, F.generators(r));
}

namespace {

using Rows = std::vector<std::pair<std::vector<BigInt>, BigInt>>;

std::optional<Rows> polyhedral_rows(const Filtration& F) {
    if (F.is_polyhedral()) return F.constraints();
    if (F.kind() == RuleKind::Intersection) {
        auto a = polyhedral_rows(F.left());
        auto b = polyhedral_rows(F.right());
        if (!a || !b) return std::nullopt;
        a->insert(a->end(), b->begin(), b->end());
        return a;
    }
    if (F.kind() == RuleKind::Veronese) return polyhedral_rows(F.inner());
    return std::nullopt;
}

Rational lp_min(const WeightVector& v, const Rows& rows) {
    const std::size_t n = v.size();
    LinearProgram lp(n, false);
    lp.objective = v.weights();
    for (const auto& [a, b] : rows) lp.add_row(std::vector<Rational>(a.begin(), a.end()), Sense::GreaterEq, b);
    auto sol = lp_solve(lp);
    if (sol.status != LpStatus::Optimal) throw DomainError("level-one polyhedron LP did not reach an optimum");
    return sol.value;
}

}  // namespace

std::optional<std::pair<Rational, std::string>> exact_skew_waldschmidt(const WeightVector& v, const Filtration& F,
                                                                       std::optional<std::uint64_t> veronese_degree) {
    if (v.size() != F.ambient()) throw DomainError("valuation length mismatch");
    if (veronese_degree) {
        if (!verify_veronese(F, *veronese_degree))
            throw DomainError("supplied Veronese degree " + std::to_string(*veronese_degree) + " failed verification");
        return std::make_pair(valuation_of_level(v, F, *veronese_degree) / *veronese_degree,
                              std::string("veronese_degree"));
    }
    switch (F.kind()) {
        case RuleKind::Ordinary:
            if (F.ideal().is_zero()) return std::nullopt;
            return std::make_pair(valuation_of_ideal(v, F.ideal()), std::string("veronese_degree"));
        case RuleKind::Ceiling:
            if (F.ideal().is_zero()) return std::nullopt;
            return std::make_pair(F.beta() * valuation_of_ideal(v, F.ideal()), std::string("ceiling_closed_form"));
        case RuleKind::TwoStep:
            return std::make_pair(valuation_of_ideal(v, F.step_b()) / 2, std::string("veronese_degree"));
        case RuleKind::Veronese: {
            std::uint64_t r = F.veronese_degree();
            if (!verify_veronese(F.inner(), r)) throw DomainError("Veronese annotation failed verification");
            return std::make_pair(valuation_of_level(v, F.inner(), r) / r, std::string("veronese_degree"));
        }
        default: break;
    }
    if (auto rows = polyhedral_rows(F)) return std::make_pair(lp_min(v, *rows), std::string("polyhedral_lp"));
    return std::nullopt;
}

WaldschmidtResult skew_waldschmidt(const WeightVector& v, const Filtration& F, std::uint64_t horizon,
                                   std::optional<std::uint64_t> veronese_degree) {
    if (horizon == 0) throw DomainError("horizon must be positive");
    WaldschmidtResult res;
    std::optional<Rational> best;
    Rational first;
    std::uint64_t reached = 0;
    for (std::uint64_t r = 1; r <= horizon; ++r) {
        Rational val;
        try {
            val = valuation_of_level(v, F, r) / r;
        } catch (const CapabilityError&) {
            if (r == 1) throw;
            break;
        }
        if (r == 1) first = val;
        if (!best || val < *best) best = val;
        reached = r;
    }
    res.horizon = reached;
    res.upper = *best;
    Rational lower = res.upper - first / reached;
    res.lower = lower < 0 ? Rational(0) : lower;
    if (auto ex = exact_skew_waldschmidt(v, F, veronese_degree)) {
        res.exact = ex->first;
        res.method = ex->second;
    }
    return res;
}

}  // namespace fthresh
