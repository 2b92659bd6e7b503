#include "fthresh/io.hpp"

#include <algorithm>

#include "fthresh/errors.hpp"

namespace fthresh {

namespace {

json big(const BigInt& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

BigInt big_from(const json& j, const char* what) {
    if (j.is_number_integer()) return BigInt(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        auto r = parse_rational(j.get<std::string>());
        if (r.get_den() != 1) throw DomainError(std::string(what) + " must be an integer");
        return r.get_num();
    }
    throw DomainError(std::string(what) + " must be an integer");
}

Rational rational_from(const json& j, const char* what) {
    if (j.is_number_integer()) return Rational(BigInt(std::to_string(j.get<long long>())));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw DomainError(std::string(what) + " must be a rational string like \"7/5\"");
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("descriptor is missing \"") + key + "\"");
    return j.at(key);
}

std::size_t infer_ambient(const json& j) {
    if (!j.is_object()) return 0;
    if (j.contains("n")) return j.at("n").get<std::size_t>();
    std::size_t n = 0;
    for (const char* key : {"ideal", "a", "b"})
        if (j.contains(key)) n = std::max(n, ideal_from_json(j.at(key)).ambient());
    if (j.contains("components"))
        for (const auto& c : j.at("components"))
            for (const auto& v : field(c, "vars")) n = std::max(n, v.get<std::size_t>());
    for (const char* key : {"left", "right", "inner"})
        if (j.contains(key)) n = std::max(n, infer_ambient(j.at(key)));
    return n;
}

}  // namespace

json ideal_to_json(const MonomialIdeal& I) {
    json a = json::array();
    for (const auto& g : I.generators()) a.push_back(to_string(g));
    return a;
}

MonomialIdeal ideal_from_json(const json& j, std::size_t n) {
    if (j.is_string()) return parse_ideal(j.get<std::string>(), n);
    if (j.is_array()) {
        if (j.empty()) {
            if (n == 0) throw DomainError("empty ideal needs an explicit \"n\"");
            return MonomialIdeal::zero(n);
        }
        return parse_ideal(j.dump(), n);
    }
    throw DomainError("ideal must be a string or an array");
}

json filtration_to_json(const Filtration& F) {
    json j;
    j["rule"] = rule_name(F.kind());
    j["n"] = F.ambient();
    switch (F.kind()) {
        case RuleKind::Ordinary:
        case RuleKind::Symbolic:
        case RuleKind::IntegralClosure: j["ideal"] = ideal_to_json(F.ideal()); break;
        case RuleKind::Ceiling:
            j["ideal"] = ideal_to_json(F.ideal());
            j["beta"] = to_string(F.beta());
            break;
        case RuleKind::PrimePowerIntersection: {
            json comps = json::array();
            for (const auto& c : F.components()) {
                json vars = json::array();
                for (auto v : c.vars) vars.push_back(v + 1);
                comps.push_back({{"vars", vars}, {"omega", big(c.omega)}});
            }
            j["components"] = comps;
            break;
        }
        case RuleKind::Product:
        case RuleKind::Intersection:
        case RuleKind::BinomialSum:
            j["left"] = filtration_to_json(F.left());
            j["right"] = filtration_to_json(F.right());
            break;
        case RuleKind::Veronese:
            j["inner"] = filtration_to_json(F.inner());
            j["degree"] = F.veronese_degree();
            break;
        case RuleKind::TwoStep:
            j["a"] = ideal_to_json(F.step_a());
            j["b"] = ideal_to_json(F.step_b());
            break;
        case RuleKind::Explicit: throw DomainError("explicit filtrations have no JSON form");
    }
    return j;
}

Filtration filtration_from_json(const json& j, std::size_t n) {
    if (!j.is_object()) throw DomainError("filtration descriptor must be a JSON object");
    if (j.contains("n")) {
        std::size_t given = j.at("n").get<std::size_t>();
        if (n != 0 && given != n) throw DomainError("nested descriptor has a different \"n\"");
        n = given;
    }
    if (n == 0) n = infer_ambient(j);
    if (n == 0) throw DomainError("cannot infer the number of variables");
    const std::string rule = field(j, "rule").get<std::string>();
    if (rule == "ordinary") return Filtration::ordinary(ideal_from_json(field(j, "ideal"), n));
    if (rule == "symbolic") return Filtration::symbolic(ideal_from_json(field(j, "ideal"), n));
    if (rule == "integral_closure") return Filtration::integral_closure(ideal_from_json(field(j, "ideal"), n));
    if (rule == "ceiling")
        return Filtration::ceiling(ideal_from_json(field(j, "ideal"), n), rational_from(field(j, "beta"), "beta"));
    if (rule == "prime_power_intersection") {
        std::vector<PrimeComponent> comps;
        for (const auto& c : field(j, "components")) {
            PrimeComponent pc;
            for (const auto& v : field(c, "vars")) {
                auto idx = v.get<std::size_t>();
                if (idx == 0) throw DomainError("component variables are 1-based");
                pc.vars.push_back(idx - 1);
            }
            pc.omega = c.contains("omega") ? big_from(c.at("omega"), "omega") : BigInt(1);
            comps.push_back(std::move(pc));
        }
        return Filtration::prime_power_intersection(n, std::move(comps));
    }
    if (rule == "product" || rule == "intersection" || rule == "binomial_sum") {
        auto L = filtration_from_json(field(j, "left"), n);
        auto R = filtration_from_json(field(j, "right"), n);
        if (rule == "product") return Filtration::product(L, R);
        if (rule == "intersection") return Filtration::intersection(L, R);
        return Filtration::binomial_sum(L, R);
    }
    if (rule == "veronese")
        return Filtration::veronese(filtration_from_json(field(j, "inner"), n),
                                    to_u64(big_from(field(j, "degree"), "degree")));
    if (rule == "two_step")
        return Filtration::two_step(ideal_from_json(field(j, "a"), n), ideal_from_json(field(j, "b"), n));
    throw DomainError("unknown filtration rule \"" + rule + "\"");
}

json hypergraph_to_json(const Hypergraph& H) {
    return {{"n", H.n()}, {"edges", H.edges()}};
}

Hypergraph hypergraph_from_json(const json& j) {
    return Hypergraph(field(j, "n").get<std::size_t>(), field(j, "edges").get<std::vector<VarSet>>());
}

json facet_to_json(const FacetInequality& f) {
    json normal = json::array();
    for (const auto& x : f.normal) normal.push_back(big(x));
    return {{"normal", normal}, {"offset", big(f.offset)}};
}

json valuation_to_json(const WeightVector& v) {
    json w = json::array();
    for (const auto& x : v.weights()) w.push_back(to_string(x));
    return {{"weights", w}};
}

WeightVector valuation_from_json(const json& j) {
    std::vector<Rational> w;
    for (const auto& x : field(j, "weights")) w.push_back(rational_from(x, "weight"));
    return WeightVector(std::move(w));
}

json threshold_to_json(const ThresholdResult& r, std::optional<unsigned> decimal) {
    json j;
    if (r.kind == ThresholdKind::Exact) {
        j["kind"] = "exact";
        j["value"] = to_string(r.value);
        if (decimal) j["decimal"] = to_decimal(r.value, *decimal);
    } else {
        j["kind"] = "bracket";
        j["lower"] = to_string(r.lower);
        j["upper"] = r.upper ? json(to_string(*r.upper)) : json(nullptr);
        j["upper_certified"] = r.upper_certified;
        j["e_max"] = r.e_max;
        if (decimal) {
            j["lower_decimal"] = to_decimal(r.lower, *decimal);
            if (r.upper) j["upper_decimal"] = to_decimal(*r.upper, *decimal);
        }
    }
    j["method"] = method_name(r.method);
    j["certificate"] = r.certificate;
    return j;
}

json nu_record_to_json(const NuRecord& r) {
    json j{{"e", r.e}, {"q", big(r.q)}};
    switch (r.kind) {
        case NuKind::Finite:
            j["nu"] = big(r.nu);
            j["ratio"] = to_string(r.ratio);
            break;
        case NuKind::PosInf:
            j["nu"] = "+inf";
            j["ratio"] = "+inf";
            break;
        case NuKind::NegInf:
            j["nu"] = "-inf";
            j["ratio"] = "-inf";
            break;
    }
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

std::string nu_csv(const std::vector<NuRecord>& records) {
    std::string out = "e,q,nu,ratio\n";
    for (const auto& r : records) {
        out += std::to_string(r.e) + "," + r.q.get_str() + ",";
        if (r.kind == NuKind::Finite) out += r.nu.get_str() + "," + to_string(r.ratio);
        else if (r.kind == NuKind::PosInf) out += "+inf,+inf";
        else out += "-inf,-inf";
        out += "\n";
    }
    return out;
}

json waldschmidt_to_json(const WaldschmidtResult& w) {
    json j{{"lower", to_string(w.lower)}, {"upper", to_string(w.upper)}, {"horizon", w.horizon}, {"lower_certified", false}};
    if (w.exact) {
        j["exact"] = to_string(*w.exact);
        j["method"] = w.method;
    } else {
        j["exact"] = nullptr;
    }
    return j;
}

json bounds_to_json(const BoundsReport& b) {
    return {{"n", b.n},
            {"d", b.d},
            {"tau", b.tau},
            {"matching", b.matching},
            {"fractional_matching", to_string(b.fractional_matching)},
            {"chi_f", b.chi_f ? json(to_string(*b.chi_f)) : json("+inf")},
            {"ordinary_threshold", to_string(b.ordinary_threshold)},
            {"symbolic_threshold", to_string(b.symbolic_threshold)},
            {"ordinary_bound", to_string(b.ordinary_bound)},
            {"symbolic_bound", to_string(b.symbolic_bound)},
            {"ordinary_ok", b.ordinary_ok},
            {"symbolic_ok", b.symbolic_ok},
            {"matching_identity", b.matching_identity},
            {"chi_equality", b.chi_equality},
            {"symbolic_tight", b.symbolic_tight}};
}

json law_to_json(const LawReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows) {
        json parts = json::array();
        for (const auto& p : row.parts) parts.push_back(nu_record_to_json(p));
        rows.push_back({{"e", row.e}, {"lhs", nu_record_to_json(row.lhs)}, {"parts", parts}, {"ok", row.ok}});
    }
    return {{"law", r.law}, {"ok", r.ok}, {"rows", rows}};
}

json big_height_to_json(const BigHeightReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows) rows.push_back({{"e", row.e}, {"level", big(row.level)}, {"contained", row.contained}});
    json j{{"big_height", r.big_height}, {"height", r.height}, {"never_contained", r.never_contained}, {"rows", rows}};
    j["implied_upper"] = r.implied_upper ? json(to_string(*r.implied_upper)) : json(nullptr);
    return j;
}

}  // namespace fthresh
