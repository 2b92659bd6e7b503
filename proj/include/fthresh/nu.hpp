#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "fthresh/filtration.hpp"
#include "fthresh/polyhedra.hpp"

namespace fthresh {

enum class NuKind { Finite, PosInf, NegInf };

struct NuRecord {
    unsigned e = 0;
    BigInt q;
    NuKind kind = NuKind::Finite;
    BigInt nu;
    Rational ratio;
    std::string note;
};

enum class NuPath { Witness, Generators };

struct NuOptions {
    // N with a_{Ns} in I^s for all s; gives the certified cutoff N mu (q-1) + N - 1.
    std::optional<BigInt> containment_level;
    // Multiplier for the uncertified cutoff N mu q * factor; 0 means 2n.
    std::uint64_t cutoff_factor = 0;
    NuPath path = NuPath::Witness;
    unsigned threads = 1;
};

// sup{r : a_r not in I^[p^e]}.
NuRecord nu(const Filtration& F, const MonomialIdeal& I, unsigned long p, unsigned e, const NuOptions& opts = {});

struct NuSequence {
    std::vector<NuRecord> records;
    std::optional<Rational> running_sup;  // over finite ratios
    bool doubling_ok = true;
    std::optional<unsigned> doubling_violation;  // e with p nu(p^e) > nu(p^{e+1})
};

NuSequence nu_sequence(const Filtration& F, const MonomialIdeal& I, unsigned long p, unsigned e_max,
                       const NuOptions& opts = {});

enum class ThresholdKind { Exact, Bracket };
enum class Method { ReesValuation, SymbolicSquarefree, PrimePowerMin, VeroneseReduction, NuSupremumBracket };

std::string method_name(Method m);

struct ThresholdResult {
    ThresholdKind kind = ThresholdKind::Exact;
    Method method = Method::ReesValuation;
    Rational value;                 // exact only
    Rational lower;                 // bracket only
    std::optional<Rational> upper;  // bracket only; nullopt = no bound available
    bool upper_certified = false;
    unsigned e_max = 0;
    nlohmann::json certificate = nlohmann::json::object();

    bool contains(const Rational& x) const;
};

// Exact for target m (or no target): min over essential facets of <w, 1>/c.
// Other targets give a bracket: nu lower bound, containment-count upper bound.
ThresholdResult fthreshold_ordinary(const MonomialIdeal& I, const std::optional<MonomialIdeal>& target = std::nullopt,
                                    unsigned long p = 2, unsigned e_max = 4);
ThresholdResult fthreshold_symbolic_squarefree(const MonomialIdeal& I);
ThresholdResult fthreshold_prime_power_intersection(std::size_t n, const std::vector<PrimeComponent>& comps);
// Empty valuations: degree valuation plus, for polyhedral rules, their constraint normals.
ThresholdResult fthreshold_bracket(const Filtration& F, const MonomialIdeal& I, unsigned long p, unsigned e_max,
                                   const std::vector<WeightVector>& valuations = {});
ThresholdResult veronese_reduce(const Filtration& F, const MonomialIdeal& I, unsigned long p, unsigned e_max);

struct LawRow {
    unsigned e = 0;
    NuRecord lhs;
    std::vector<NuRecord> parts;
    bool ok = true;
};
struct LawReport {
    std::string law;
    std::vector<LawRow> rows;
    bool ok = true;
};

// nu_{F cap G}^m = min(nu_F^m, nu_G^m).
LawReport check_min_law(const Filtration& F, const Filtration& G, unsigned long p, unsigned e_max);
// F, I in one block of variables and G, J in a disjoint block:
// nu^{I+J}(binomial sum) = nu_F^I + nu_G^J and nu^{IJ}(product) = max(nu_F^I, nu_G^J).
std::pair<LawReport, LawReport> check_sum_product_laws(const Filtration& F, const MonomialIdeal& I,
                                                       const Filtration& G, const MonomialIdeal& J,
                                                       unsigned long p, unsigned e_max);

// nu_G^I <= nu_F^I + k, the shift allowed when the Rees algebra of G is module-finite over that of F.
LawReport check_nu_shift(const Filtration& F, const Filtration& G, const MonomialIdeal& I, const BigInt& k,
                         unsigned long p, unsigned e_max);

struct BigHeightReport {
    std::size_t big_height = 0;
    std::size_t height = 0;
    struct Row {
        unsigned e;
        BigInt level;
        bool contained;
    };
    std::vector<Row> rows;
    std::optional<Rational> implied_upper;  // H - 1/p^{e0} at the first containment
    bool never_contained = true;
};

BigHeightReport big_height_criterion(const MonomialIdeal& I, const MonomialIdeal& J, unsigned long p, unsigned e_max);
// a^{(H(p^e-1))} not in m^[p^e].
bool symbolic_fsplit_witness(const MonomialIdeal& I, unsigned long p, unsigned e = 1);

}  // namespace fthresh
