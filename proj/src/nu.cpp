#include "fthresh/nu.hpp"

#include <algorithm>
#include <functional>
#include <future>

#include "fthresh/errors.hpp"
#include "fthresh/waldschmidt.hpp"

namespace fthresh {

std::string method_name(Method m) {
    switch (m) {
        case Method::ReesValuation: return "rees_valuation";
        case Method::SymbolicSquarefree: return "symbolic_squarefree";
        case Method::PrimePowerMin: return "prime_power_min";
        case Method::VeroneseReduction: return "veronese_reduction";
        case Method::NuSupremumBracket: return "nu_supremum_bracket";
    }
    return "?";
}

bool ThresholdResult::contains(const Rational& x) const {
    if (kind == ThresholdKind::Exact) return x == value;
    return lower <= x && (!upper || x <= *upper);
}

namespace {

const BigInt kDiscoveryLimit = BigInt(1) << 32;

void check_prime(unsigned long p) {
    if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
}

// Largest r in [lo, limit] with pred(r), given pred(lo) and pred antitone; nullopt if pred(limit).
std::optional<BigInt> antitone_sup(const std::function<bool(const BigInt&)>& pred, BigInt lo, const BigInt& limit) {
    BigInt hi = lo == 0 ? BigInt(1) : BigInt(2 * lo);
    while (hi <= limit && pred(hi)) {
        lo = hi;
        hi *= 2;
    }
    if (hi > limit) {
        if (pred(limit)) return std::nullopt;
        hi = limit;
    }
    while (hi - lo > 1) {
        BigInt mid = (lo + hi) / 2;
        if (pred(mid)) lo = mid;
        else hi = mid;
    }
    return lo;
}

// Smallest L >= 1 with a_L inside the ideal of `corners`, searched up to `limit`.
std::optional<BigInt> first_containment(const Filtration& F, const std::vector<Corner>& corners, const BigInt& limit) {
    auto outside = [&](const BigInt& r) { return !level_contained(F, r, corners); };
    auto last = antitone_sup(outside, 0, limit);
    if (!last) return std::nullopt;
    return *last + 1;
}

nlohmann::json big_json(const BigInt& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

nlohmann::json facet_json(const FacetInequality& f) {
    nlohmann::json normal = nlohmann::json::array();
    for (const auto& x : f.normal) normal.push_back(big_json(x));
    return {{"normal", normal}, {"offset", big_json(f.offset)}};
}

nlohmann::json vars_json(const VarSet& s) {
    nlohmann::json a = nlohmann::json::array();
    for (auto j : s) a.push_back(j + 1);
    return a;
}

std::optional<BigInt> finite(const NuRecord& r) {
    if (r.kind == NuKind::Finite) return r.nu;
    return std::nullopt;
}

}  // namespace

NuRecord nu(const Filtration& F, const MonomialIdeal& I, unsigned long p, unsigned e, const NuOptions& opts) {
    check_prime(p);
    if (I.ambient() != F.ambient()) throw DomainError("target and filtration live in different rings");
    NuRecord rec;
    rec.e = e;
    rec.q = ipow(p, e);
    if (I.is_unit()) {
        rec.kind = NuKind::NegInf;
        rec.note = "unit target: every level is contained";
        return rec;
    }
    const MonomialIdeal Iq = I.bracket_power(rec.q);
    std::function<bool(const BigInt&)> outside;
    std::vector<Corner> corners;
    if (opts.path == NuPath::Witness) {
        corners = standard_corners(Iq);
        outside = [&](const BigInt& r) { return !level_contained(F, r, corners); };
    } else {
        outside = [&](const BigInt& r) { return !contains_ideal(F.generators(to_u64(r)), Iq); };
    }
    BigInt mu = std::max<std::size_t>(I.num_generators(), 1);
    BigInt limit;
    bool certified = false;
    if (opts.containment_level) {
        const BigInt& N = *opts.containment_level;
        if (N < 1) throw DomainError("containment level must be positive");
        limit = N * mu * (rec.q - 1) + N;
        certified = true;
    } else {
        auto N = first_containment(F, standard_corners(I), kDiscoveryLimit);
        if (!N) {
            rec.kind = NuKind::PosInf;
            rec.note = "no containment certificate: a_r not inside the target for r <= 2^32";
            return rec;
        }
        BigInt factor = opts.cutoff_factor ? BigInt(static_cast<unsigned long>(opts.cutoff_factor))
                                           : BigInt(static_cast<unsigned long>(2 * F.ambient()));
        limit = *N * mu * rec.q * factor;
    }
    auto sup = antitone_sup(outside, 0, limit);
    if (!sup) {
        if (certified) throw DomainError("supplied containment level is contradicted at level " + limit.get_str());
        rec.kind = NuKind::PosInf;
        rec.note = "no containment certificate below cutoff " + limit.get_str();
        return rec;
    }
    rec.nu = *sup;
    rec.ratio = make_rational(rec.nu, rec.q);
    return rec;
}

NuSequence nu_sequence(const Filtration& F, const MonomialIdeal& I, unsigned long p, unsigned e_max,
                       const NuOptions& opts) {
    check_prime(p);
    NuSequence seq;
    seq.records.resize(e_max + 1);
    unsigned threads = std::max(1u, opts.threads);
    if (threads == 1) {
        for (unsigned e = 0; e <= e_max; ++e) seq.records[e] = nu(F, I, p, e, opts);
    } else {
        for (unsigned start = 0; start <= e_max; start += threads) {
            std::vector<std::future<NuRecord>> jobs;
            for (unsigned e = start; e <= e_max && e < start + threads; ++e)
                jobs.push_back(std::async(std::launch::async, [&, e] { return nu(F, I, p, e, opts); }));
            for (unsigned k = 0; k < jobs.size(); ++k) seq.records[start + k] = jobs[k].get();
        }
    }
    for (const auto& r : seq.records)
        if (r.kind == NuKind::Finite && (!seq.running_sup || r.ratio > *seq.running_sup)) seq.running_sup = r.ratio;
    for (unsigned e = 0; e < e_max; ++e) {
        const auto& a = seq.records[e];
        const auto& b = seq.records[e + 1];
        bool ok = true;
        if (a.kind == NuKind::Finite && b.kind == NuKind::Finite) ok = a.nu * p <= b.nu;
        else if (a.kind == NuKind::PosInf && b.kind != NuKind::PosInf) ok = false;
        else if (b.kind == NuKind::NegInf && a.kind != NuKind::NegInf) ok = false;
        if (!ok && seq.doubling_ok) {
            seq.doubling_ok = false;
            seq.doubling_violation = e;
        }
    }
    return seq;
}

ThresholdResult fthreshold_ordinary(const MonomialIdeal& I, const std::optional<MonomialIdeal>& target,
                                    unsigned long p, unsigned e_max) {
    if (I.is_zero() || I.is_unit()) throw DomainError("ordinary threshold needs a nonzero proper ideal");
    const std::size_t n = I.ambient();
    ThresholdResult res;
    if (!target || *target == MonomialIdeal::maximal(n)) {
        NewtonPolyhedron np(I);
        std::optional<Rational> best;
        FacetInequality arg;
        nlohmann::json all = nlohmann::json::array();
        for (const auto& f : np.essential_facets()) {
            BigInt s = 0;
            for (const auto& x : f.normal) s += x;
            Rational c = make_rational(s, f.offset);
            if (!best || c < *best) {
                best = c;
                arg = f;
            }
            all.push_back(facet_json(f));
        }
        res.kind = ThresholdKind::Exact;
        res.method = Method::ReesValuation;
        res.value = *best;
        res.certificate = {{"facet", facet_json(arg)}, {"rees_valuations", all}};
        return res;
    }
    const MonomialIdeal& J = *target;
    if (J.ambient() != n) throw DomainError("target lives in a different ring");
    if (J.is_zero() || J.is_unit()) throw DomainError("target must be nonzero and proper");
    auto F = Filtration::ordinary(I);
    auto seq = nu_sequence(F, J, p, e_max);
    if (!seq.running_sup) throw DomainError("nu is infinite: I is not inside the radical of the target");
    res.kind = ThresholdKind::Bracket;
    res.method = Method::NuSupremumBracket;
    res.e_max = e_max;
    res.lower = *seq.running_sup;
    if (auto N = first_containment(F, standard_corners(J), BigInt(1) << 20)) {
        res.upper = Rational(*N * BigInt(static_cast<unsigned long>(J.num_generators())));
        res.upper_certified = true;
        res.certificate = {{"containment_level", big_json(*N)}, {"target_generators", J.num_generators()}};
    }
    return res;
}

ThresholdResult fthreshold_symbolic_squarefree(const MonomialIdeal& I) {
    if (!I.is_squarefree()) throw UnsupportedError("symbolic threshold needs a square-free ideal");
    auto F = Filtration::symbolic(I);
    const auto& primes = F.primes();
    const VarSet* arg = &primes[0];
    for (const auto& S : primes)
        if (S.size() < arg->size()) arg = &S;
    const std::size_t h = arg->size();
    auto m = MonomialIdeal::maximal(I.ambient());
    nlohmann::json chain = nlohmann::json::array();
    for (unsigned e = 1; e <= 3; ++e) {
        auto rec = nu(F, m, 2, e);
        BigInt bound = BigInt(static_cast<unsigned long>(h)) * (rec.q - 1);
        if (rec.kind != NuKind::Finite || rec.nu < bound)
            throw DomainError("internal: witness chain failed for " + to_string(I));
        chain.push_back({{"p", 2}, {"e", e}, {"nu", big_json(rec.nu)}, {"bound", big_json(bound)}});
    }
    ThresholdResult res;
    res.kind = ThresholdKind::Exact;
    res.method = Method::SymbolicSquarefree;
    res.value = Rational(static_cast<unsigned long>(h));
    res.certificate = {{"minimal_prime", vars_json(*arg)}, {"height", h}, {"witness_chain", chain}};
    return res;
}

ThresholdResult fthreshold_prime_power_intersection(std::size_t n, const std::vector<PrimeComponent>& comps) {
    auto F = Filtration::prime_power_intersection(n, comps);
    std::optional<Rational> best;
    std::size_t arg = 0;
    for (std::size_t i = 0; i < F.components().size(); ++i) {
        const auto& c = F.components()[i];
        Rational v = make_rational(BigInt(static_cast<unsigned long>(c.vars.size())), c.omega);
        if (!best || v < *best) {
            best = v;
            arg = i;
        }
    }
    ThresholdResult res;
    res.kind = ThresholdKind::Exact;
    res.method = Method::PrimePowerMin;
    res.value = *best;
    const auto& c = F.components()[arg];
    res.certificate = {{"component", {{"vars", vars_json(c.vars)}, {"omega", big_json(c.omega)}}}};
    return res;
}

ThresholdResult fthreshold_bracket(const Filtration& F, const MonomialIdeal& I, unsigned long p, unsigned e_max,
                                   const std::vector<WeightVector>& valuations) {
    auto seq = nu_sequence(F, I, p, e_max);
    for (const auto& r : seq.records)
        if (r.kind != NuKind::Finite) throw DomainError("nu is not finite at e = " + std::to_string(r.e) + ": " + r.note);
    ThresholdResult res;
    res.kind = ThresholdKind::Bracket;
    res.method = Method::NuSupremumBracket;
    res.e_max = e_max;
    res.lower = *seq.running_sup;
    const std::size_t n = F.ambient();
    res.certificate = {{"nu_last", big_json(seq.records.back().nu)}, {"q_last", big_json(seq.records.back().q)}};
    if (I != MonomialIdeal::maximal(n)) return res;

    std::vector<WeightVector> vals = valuations;
    if (vals.empty()) {
        vals.push_back(WeightVector::degree(n));
        if (F.is_polyhedral())
            for (const auto& [a, b] : F.constraints()) vals.emplace_back(std::vector<Rational>(a.begin(), a.end()));
        auto k = F.kind();
        if (k == RuleKind::Ordinary || k == RuleKind::IntegralClosure || k == RuleKind::Ceiling)
            if (!F.ideal().is_zero() && !F.ideal().is_unit())
                for (const auto& rv : rees_valuations(F.ideal())) vals.push_back(rv.v);
    }
    Monomial ones = Monomial::constant(n, 1);
    std::optional<Rational> certified, heuristic;
    nlohmann::json best_cert;
    for (const auto& v : vals) {
        std::optional<std::pair<Rational, std::string>> ex;
        try {
            ex = exact_skew_waldschmidt(v, F);
        } catch (const DomainError&) {
        }
        if (ex && ex->first > 0) {
            Rational cand = v(ones) / ex->first;
            if (!certified || cand < *certified) {
                certified = cand;
                nlohmann::json w = nlohmann::json::array();
                for (const auto& x : v.weights()) w.push_back(to_string(x));
                best_cert = {{"weights", w}, {"v_hat", to_string(ex->first)}, {"v_hat_method", ex->second}};
            }
            continue;
        }
        try {
            auto sw = skew_waldschmidt(v, F, 6);
            if (sw.lower > 0) {
                Rational cand = v(ones) / sw.lower;
                if (!heuristic || cand < *heuristic) heuristic = cand;
            }
        } catch (const DomainError&) {
        }
    }
    if (certified) {
        res.upper = certified;
        res.upper_certified = true;
        res.certificate["valuation"] = best_cert;
    } else if (heuristic) {
        res.upper = heuristic;
        res.upper_certified = false;
        res.certificate["note"] = "unverified upper";
    }
    return res;
}

ThresholdResult veronese_reduce(const Filtration& F, const MonomialIdeal& I, unsigned long p, unsigned e_max) {
    if (F.kind() != RuleKind::Veronese) throw DomainError("veronese_reduce needs a Veronese-annotated filtration");
    const std::uint64_t r = F.veronese_degree();
    if (!verify_veronese(F.inner(), r))
        throw DomainError("Veronese annotation failed verification: a_{kr} != a_r^k for some k <= 4");
    auto ar = F.inner().generators(r);
    const BigInt R(static_cast<unsigned long>(r));
    ThresholdResult inner;
    if (I == MonomialIdeal::maximal(F.ambient())) inner = fthreshold_ordinary(ar);
    else inner = fthreshold_ordinary(ar, I, p, e_max);
    ThresholdResult res = inner;
    res.method = Method::VeroneseReduction;
    res.value = inner.value * R;
    res.lower = inner.lower * R;
    if (inner.upper) res.upper = *inner.upper * R;
    res.certificate = {{"degree", r},
                       {"level_generators", to_string(ar)},
                       {"level_method", method_name(inner.method)},
                       {"level_certificate", inner.certificate}};
    return res;
}

namespace {

bool all_finite(const std::vector<NuRecord>& rs) {
    return std::all_of(rs.begin(), rs.end(), [](const NuRecord& r) { return r.kind == NuKind::Finite; });
}

}  // namespace

LawReport check_min_law(const Filtration& F, const Filtration& G, unsigned long p, unsigned e_max) {
    LawReport rep;
    rep.law = "min";
    auto m = MonomialIdeal::maximal(F.ambient());
    auto D = Filtration::intersection(F, G);
    for (unsigned e = 0; e <= e_max; ++e) {
        LawRow row;
        row.e = e;
        row.lhs = nu(D, m, p, e);
        row.parts = {nu(F, m, p, e), nu(G, m, p, e)};
        auto a = finite(row.parts[0]), b = finite(row.parts[1]), l = finite(row.lhs);
        if (a && b) row.ok = l && *l == std::min(*a, *b);
        else if (a || b) row.ok = l && *l == (a ? *a : *b);
        else row.ok = row.lhs.kind == NuKind::PosInf;
        rep.ok = rep.ok && row.ok;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

LawReport check_nu_shift(const Filtration& F, const Filtration& G, const MonomialIdeal& I, const BigInt& k,
                         unsigned long p, unsigned e_max) {
    if (k < 0) throw DomainError("shift must be non-negative");
    LawReport rep;
    rep.law = "shift";
    for (unsigned e = 0; e <= e_max; ++e) {
        LawRow row;
        row.e = e;
        row.lhs = nu(G, I, p, e);
        row.parts = {nu(F, I, p, e)};
        const auto& f = row.parts[0];
        if (row.lhs.kind == NuKind::NegInf || f.kind == NuKind::PosInf) row.ok = true;
        else if (row.lhs.kind == NuKind::PosInf || f.kind == NuKind::NegInf) row.ok = false;
        else row.ok = row.lhs.nu <= f.nu + k;
        rep.ok = rep.ok && row.ok;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

namespace {

VarSet variables_of(const Filtration& F, const MonomialIdeal& I) {
    VarSet s;
    auto add = [&](const MonomialIdeal& K) {
        for (const auto& g : K.generators())
            for (auto j : g.support()) s.push_back(j);
    };
    add(F.generators(1));
    add(I);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

}  // namespace

std::pair<LawReport, LawReport> check_sum_product_laws(const Filtration& F, const MonomialIdeal& I,
                                                       const Filtration& G, const MonomialIdeal& J,
                                                       unsigned long p, unsigned e_max) {
    if (I.is_zero() || I.is_unit() || J.is_zero() || J.is_unit())
        throw DomainError("law targets must be nonzero and proper");
    auto vf = variables_of(F, I), vg = variables_of(G, J);
    VarSet common;
    std::set_intersection(vf.begin(), vf.end(), vg.begin(), vg.end(), std::back_inserter(common));
    if (!common.empty()) throw DomainError("sum/product laws need disjoint variable blocks");
    auto E = Filtration::binomial_sum(F, G);
    auto C = Filtration::product(F, G);
    auto IJsum = I + J, IJprod = I * J;
    LawReport sum{"sum", {}, true}, prod{"product", {}, true};
    for (unsigned e = 0; e <= e_max; ++e) {
        NuRecord a = nu(F, I, p, e), b = nu(G, J, p, e);
        LawRow rs, rp;
        rs.e = rp.e = e;
        rs.parts = rp.parts = {a, b};
        rs.lhs = nu(E, IJsum, p, e);
        rp.lhs = nu(C, IJprod, p, e);
        if (all_finite({a, b, rs.lhs})) rs.ok = rs.lhs.nu == a.nu + b.nu;
        else rs.ok = false;
        if (all_finite({a, b, rp.lhs})) rp.ok = rp.lhs.nu == std::max(a.nu, b.nu);
        else rp.ok = false;
        sum.ok = sum.ok && rs.ok;
        prod.ok = prod.ok && rp.ok;
        sum.rows.push_back(std::move(rs));
        prod.rows.push_back(std::move(rp));
    }
    return {sum, prod};
}

namespace {

void check_squarefree_proper(const MonomialIdeal& I, const char* what) {
    if (I.is_zero() || I.is_unit()) throw DomainError(std::string(what) + " must be nonzero and proper");
    if (!I.is_squarefree()) throw DomainError(std::string(what) + " must be radical (square-free)");
}

}  // namespace

BigHeightReport big_height_criterion(const MonomialIdeal& I, const MonomialIdeal& J, unsigned long p, unsigned e_max) {
    check_prime(p);
    check_squarefree_proper(I, "ideal");
    check_squarefree_proper(J, "target");
    if (I.ambient() != J.ambient()) throw DomainError("ambient mismatch");
    if (!contains_ideal(I, J)) throw DomainError("ideal is not contained in the target");
    auto F = Filtration::symbolic(I);
    BigHeightReport rep;
    rep.big_height = big_height(I);
    rep.height = height(I);
    const BigInt H(static_cast<unsigned long>(rep.big_height));
    for (unsigned e = 1; e <= e_max; ++e) {
        BigInt q = ipow(p, e);
        BigInt level = H * (q - 1);
        bool contained = level_contained(F, level, J.bracket_power(q));
        rep.rows.push_back({e, level, contained});
        if (contained && rep.never_contained) {
            rep.never_contained = false;
            rep.implied_upper = Rational(H) - make_rational(1, q);
        }
    }
    return rep;
}

bool symbolic_fsplit_witness(const MonomialIdeal& I, unsigned long p, unsigned e) {
    check_prime(p);
    check_squarefree_proper(I, "ideal");
    auto F = Filtration::symbolic(I);
    BigInt q = ipow(p, e);
    BigInt level = BigInt(static_cast<unsigned long>(big_height(I))) * (q - 1);
    return !level_contained(F, level, MonomialIdeal::maximal(I.ambient()).bracket_power(q));
}

}  // namespace fthresh
