#include "fthresh/filtration.hpp"

#include <algorithm>
#include <list>
#include <mutex>
#include <unordered_map>

#include "fthresh/errors.hpp"
#include "fthresh/lp.hpp"

namespace fthresh {

std::string rule_name(RuleKind k) {
    switch (k) {
        case RuleKind::Ordinary: return "ordinary";
        case RuleKind::Symbolic: return "symbolic";
        case RuleKind::PrimePowerIntersection: return "prime_power_intersection";
        case RuleKind::IntegralClosure: return "integral_closure";
        case RuleKind::Ceiling: return "ceiling";
        case RuleKind::Product: return "product";
        case RuleKind::Intersection: return "intersection";
        case RuleKind::BinomialSum: return "binomial_sum";
        case RuleKind::Veronese: return "veronese";
        case RuleKind::TwoStep: return "two_step";
        case RuleKind::Explicit: return "explicit";
    }
    return "?";
}

struct Filtration::Node {
    RuleKind kind{};
    std::size_t n = 0;
    MonomialIdeal ideal;
    Rational beta;
    std::vector<PrimeComponent> comps;
    std::vector<VarSet> primes;
    std::shared_ptr<const NewtonPolyhedron> poly;
    std::vector<Filtration> operands;
    std::uint64_t degree = 0;
    MonomialIdeal a, b;
    std::function<MonomialIdeal(std::uint64_t)> levels;
    std::string label;
    std::vector<std::pair<std::vector<BigInt>, BigInt>> cons;
    BigInt max_exp = 0;
    std::optional<VarSet> prime_vars;  // ordinary and ceiling rules over a monomial prime

    static constexpr std::size_t kCacheLevels = 64;
    mutable std::mutex mu;
    mutable std::list<std::uint64_t> lru;
    mutable std::unordered_map<std::uint64_t, std::pair<MonomialIdeal, std::list<std::uint64_t>::iterator>> cache;
};

namespace {

BigInt sum_over(const VarSet& vars, const Monomial& u) {
    BigInt s = 0;
    for (auto j : vars) s += u[j];
    return s;
}

BigInt max_entry(const std::vector<BigInt>& v) {
    BigInt m = 0;
    for (const auto& x : v) m = std::max(m, x);
    return m;
}

std::shared_ptr<Filtration::Node> make_node(RuleKind k, std::size_t n) {
    auto node = std::make_shared<Filtration::Node>();
    node->kind = k;
    node->n = n;
    return node;
}

void require_same_ambient(const Filtration& F, const Filtration& G) {
    if (F.ambient() != G.ambient()) throw DomainError("filtrations live in different ambient rings");
}

// ---- integer program for ordinary powers ----

struct IpBounds {
    std::vector<BigInt> lo;
    std::vector<std::optional<BigInt>> hi;
};

BigInt ip_max(const std::vector<Monomial>& gens, const Monomial& u, const std::optional<BigInt>& stop) {
    const std::size_t k = gens.size();
    const std::size_t n = u.size();
    std::vector<std::size_t> rows_vars;
    for (std::size_t j = 0; j < n; ++j)
        for (const auto& g : gens)
            if (g[j] > 0) {
                rows_vars.push_back(j);
                break;
            }
    BigInt best = 0;
    std::vector<IpBounds> stack{{std::vector<BigInt>(k, 0), std::vector<std::optional<BigInt>>(k)}};
    while (!stack.empty()) {
        IpBounds node = std::move(stack.back());
        stack.pop_back();
        LinearProgram lp(k, true);
        for (std::size_t t = 0; t < k; ++t) lp.objective[t] = 1;
        for (auto j : rows_vars) {
            std::vector<Rational> row(k);
            for (std::size_t t = 0; t < k; ++t) row[t] = gens[t][j];
            lp.add_row(std::move(row), Sense::LessEq, u[j]);
        }
        for (std::size_t t = 0; t < k; ++t) {
            std::vector<Rational> row(k, 0);
            row[t] = 1;
            if (node.lo[t] > 0) lp.add_row(row, Sense::GreaterEq, node.lo[t]);
            if (node.hi[t]) lp.add_row(row, Sense::LessEq, *node.hi[t]);
        }
        auto sol = lp_solve(lp);
        if (sol.status != LpStatus::Optimal) continue;
        BigInt ub = floor(sol.value);
        if (ub <= best) continue;
        BigInt rounded = 0;
        std::optional<std::size_t> frac;
        for (std::size_t t = 0; t < k; ++t) {
            rounded += floor(sol.primal[t]);
            if (!frac && sol.primal[t].get_den() != 1) frac = t;
        }
        best = std::max(best, rounded);
        if (stop && best >= *stop) return best;
        if (!frac || ub <= best) continue;
        IpBounds down = node, up = std::move(node);
        down.hi[*frac] = floor(sol.primal[*frac]);
        up.lo[*frac] = ceil(sol.primal[*frac]);
        stack.push_back(std::move(down));
        stack.push_back(std::move(up));
    }
    return best;
}

std::vector<Monomial> usable(const MonomialIdeal& I, const Monomial& u) {
    std::vector<Monomial> out;
    for (const auto& g : I.generators())
        if (divides(g, u)) out.push_back(g);
    return out;
}

}  // namespace

bool ordinary_power_member(const MonomialIdeal& I, const BigInt& k, const Monomial& u) {
    if (k <= 0) return true;
    if (I.is_zero()) return false;
    if (I.is_unit()) return true;
    if (auto vars = I.prime_support()) {
        BigInt s = 0;
        for (auto j : *vars) s += u[j];
        return s >= k;
    }
    auto gens = usable(I, u);
    if (gens.empty()) return false;
    return ip_max(gens, u, k) >= k;
}

std::optional<BigInt> max_power(const MonomialIdeal& I, const Monomial& u) {
    if (I.is_unit()) return std::nullopt;
    if (I.is_zero()) return BigInt(0);
    auto gens = usable(I, u);
    if (gens.empty()) return BigInt(0);
    return ip_max(gens, u, std::nullopt);
}

std::vector<Monomial> enumerate_minimal_points(const std::vector<BigInt>& bounds,
                                               const std::function<bool(const Monomial&)>& member) {
    const std::size_t n = bounds.size();
    if (n == 0) return {};
    BigInt box = 1;
    for (std::size_t j = 0; j + 1 < n; ++j) box *= bounds[j] + 1;
    if (box > 20000000) throw CapabilityError("generator production infeasible: box of " + box.get_str() + " columns");
    Monomial u(n);
    std::vector<Monomial> out;
    const BigInt& top = bounds[n - 1];
    while (true) {
        u.set(n - 1, top);
        if (member(u)) {
            BigInt lo = -1, hi = top;  // member(hi) true
            while (hi - lo > 1) {
                BigInt mid = (lo + hi) / 2;
                u.set(n - 1, mid);
                if (member(u)) hi = mid;
                else lo = mid;
            }
            u.set(n - 1, hi);
            bool minimal = true;
            for (std::size_t j = 0; j + 1 < n && minimal; ++j) {
                if (u[j] == 0) continue;
                BigInt keep = u[j];
                u.set(j, keep - 1);
                if (member(u)) minimal = false;
                u.set(j, keep);
            }
            if (minimal) out.push_back(u);
        }
        std::size_t j = 0;
        while (j + 1 < n) {
            if (u[j] < bounds[j]) {
                u.set(j, u[j] + 1);
                break;
            }
            u.set(j, 0);
            ++j;
        }
        if (j + 1 >= n) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---- constructors ----

Filtration Filtration::ordinary(MonomialIdeal I) {
    auto node = make_node(RuleKind::Ordinary, I.ambient());
    node->max_exp = max_entry(I.max_exponents());
    if (!I.is_zero()) node->prime_vars = I.prime_support();
    node->ideal = std::move(I);
    return Filtration(node);
}

Filtration Filtration::symbolic(MonomialIdeal I) {
    if (!I.is_squarefree())
        throw UnsupportedError("unsupported symbolic power: " + to_string(I) +
                               " is not square-free (use prime_power_intersection)");
    if (I.is_zero() || I.is_unit()) throw DomainError("symbolic power needs a nonzero proper ideal");
    auto node = make_node(RuleKind::Symbolic, I.ambient());
    node->primes = minimal_primes(I);
    for (const auto& S : node->primes) {
        std::vector<BigInt> a(I.ambient(), 0);
        for (auto j : S) a[j] = 1;
        node->cons.emplace_back(std::move(a), BigInt(1));
    }
    node->ideal = std::move(I);
    return Filtration(node);
}

Filtration Filtration::prime_power_intersection(std::size_t n, std::vector<PrimeComponent> comps) {
    if (n == 0) throw DomainError("ambient ring needs at least one variable");
    if (comps.empty()) throw DomainError("prime power intersection needs a component");
    auto node = make_node(RuleKind::PrimePowerIntersection, n);
    for (auto& c : comps) {
        if (c.vars.empty()) throw DomainError("prime component must be nonempty");
        if (c.omega < 1) throw DomainError("component multiplier must be positive");
        std::sort(c.vars.begin(), c.vars.end());
        c.vars.erase(std::unique(c.vars.begin(), c.vars.end()), c.vars.end());
        std::vector<BigInt> a(n, 0);
        for (auto j : c.vars) {
            if (j >= n) throw DomainError("component variable out of range");
            a[j] = 1;
        }
        node->cons.emplace_back(std::move(a), c.omega);
    }
    node->comps = std::move(comps);
    return Filtration(node);
}

Filtration Filtration::integral_closure(MonomialIdeal I) {
    if (I.is_zero() || I.is_unit()) throw DomainError("integral closure filtration needs a nonzero proper ideal");
    auto node = make_node(RuleKind::IntegralClosure, I.ambient());
    node->poly = std::make_shared<const NewtonPolyhedron>(I);
    for (const auto& f : node->poly->essential_facets()) node->cons.emplace_back(f.normal, f.offset);
    node->max_exp = max_entry(I.max_exponents());
    if (!I.is_zero()) node->prime_vars = I.prime_support();
    node->ideal = std::move(I);
    return Filtration(node);
}

Filtration Filtration::ceiling(MonomialIdeal I, Rational beta) {
    beta.canonicalize();
    if (beta <= 0) throw DomainError("ceiling exponent beta must be positive");
    auto node = make_node(RuleKind::Ceiling, I.ambient());
    node->max_exp = max_entry(I.max_exponents());
    if (!I.is_zero()) node->prime_vars = I.prime_support();
    node->ideal = std::move(I);
    node->beta = std::move(beta);
    return Filtration(node);
}

Filtration Filtration::product(Filtration F, Filtration G) {
    require_same_ambient(F, G);
    auto node = make_node(RuleKind::Product, F.ambient());
    node->operands = {std::move(F), std::move(G)};
    return Filtration(node);
}

Filtration Filtration::intersection(Filtration F, Filtration G) {
    require_same_ambient(F, G);
    auto node = make_node(RuleKind::Intersection, F.ambient());
    node->operands = {std::move(F), std::move(G)};
    return Filtration(node);
}

Filtration Filtration::binomial_sum(Filtration F, Filtration G) {
    require_same_ambient(F, G);
    auto node = make_node(RuleKind::BinomialSum, F.ambient());
    node->operands = {std::move(F), std::move(G)};
    return Filtration(node);
}

Filtration Filtration::veronese(Filtration F, std::uint64_t degree) {
    if (degree == 0) throw DomainError("Veronese degree must be positive");
    auto node = make_node(RuleKind::Veronese, F.ambient());
    node->operands = {std::move(F)};
    node->degree = degree;
    return Filtration(node);
}

Filtration Filtration::two_step(MonomialIdeal a, MonomialIdeal b) {
    if (a.ambient() != b.ambient()) throw DomainError("ambient mismatch");
    if (!contains_ideal(b, a) || !contains_ideal(a * a, b))
        throw DomainError("two-step filtration needs a^2 in b in a");
    auto node = make_node(RuleKind::TwoStep, a.ambient());
    node->max_exp = std::max(max_entry(a.max_exponents()), max_entry(b.max_exponents()));
    node->a = std::move(a);
    node->b = std::move(b);
    return Filtration(node);
}

Filtration Filtration::explicit_levels(std::size_t n, std::function<MonomialIdeal(std::uint64_t)> levels,
                                       std::string label) {
    if (n == 0) throw DomainError("ambient ring needs at least one variable");
    auto node = make_node(RuleKind::Explicit, n);
    node->levels = std::move(levels);
    node->label = std::move(label);
    return Filtration(node);
}

// ---- accessors ----

std::size_t Filtration::ambient() const { return node_->n; }
RuleKind Filtration::kind() const { return node_->kind; }

bool Filtration::is_polyhedral() const {
    return node_->kind == RuleKind::Symbolic || node_->kind == RuleKind::PrimePowerIntersection ||
           node_->kind == RuleKind::IntegralClosure;
}

const std::vector<std::pair<std::vector<BigInt>, BigInt>>& Filtration::constraints() const {
    if (!is_polyhedral()) throw DomainError(rule_name(kind()) + " filtration has no polyhedral description");
    return node_->cons;
}

static void need(bool ok, const char* what) {
    if (!ok) throw DomainError(std::string("filtration has no ") + what);
}

const MonomialIdeal& Filtration::ideal() const {
    auto k = kind();
    need(k == RuleKind::Ordinary || k == RuleKind::Symbolic || k == RuleKind::IntegralClosure ||
             k == RuleKind::Ceiling,
         "underlying ideal");
    return node_->ideal;
}
const Rational& Filtration::beta() const {
    need(kind() == RuleKind::Ceiling, "beta");
    return node_->beta;
}
const std::vector<PrimeComponent>& Filtration::components() const {
    need(kind() == RuleKind::PrimePowerIntersection, "prime components");
    return node_->comps;
}
const std::vector<VarSet>& Filtration::primes() const {
    need(kind() == RuleKind::Symbolic, "minimal primes");
    return node_->primes;
}
const NewtonPolyhedron& Filtration::polyhedron() const {
    need(kind() == RuleKind::IntegralClosure, "Newton polyhedron");
    return *node_->poly;
}
const Filtration& Filtration::left() const {
    need(node_->operands.size() == 2, "left operand");
    return node_->operands[0];
}
const Filtration& Filtration::right() const {
    need(node_->operands.size() == 2, "right operand");
    return node_->operands[1];
}
const Filtration& Filtration::inner() const {
    need(kind() == RuleKind::Veronese, "inner filtration");
    return node_->operands[0];
}
std::uint64_t Filtration::veronese_degree() const {
    need(kind() == RuleKind::Veronese, "Veronese degree");
    return node_->degree;
}
const MonomialIdeal& Filtration::step_a() const {
    need(kind() == RuleKind::TwoStep, "step ideal");
    return node_->a;
}
const MonomialIdeal& Filtration::step_b() const {
    need(kind() == RuleKind::TwoStep, "step ideal");
    return node_->b;
}
const std::string& Filtration::label() const { return node_->label; }

std::string Filtration::describe() const {
    const auto& nd = *node_;
    switch (nd.kind) {
        case RuleKind::Ordinary:
        case RuleKind::Symbolic:
        case RuleKind::IntegralClosure: return rule_name(nd.kind) + "(" + to_string(nd.ideal) + ")";
        case RuleKind::Ceiling: return "ceiling(" + to_string(nd.ideal) + ", " + to_string(nd.beta) + ")";
        case RuleKind::PrimePowerIntersection: {
            std::string s = "prime_power_intersection(";
            for (std::size_t i = 0; i < nd.comps.size(); ++i) {
                if (i) s += ", ";
                s += "{";
                for (std::size_t t = 0; t < nd.comps[i].vars.size(); ++t)
                    s += (t ? ",x" : "x") + std::to_string(nd.comps[i].vars[t] + 1);
                s += "}^" + nd.comps[i].omega.get_str();
            }
            return s + ")";
        }
        case RuleKind::Product:
        case RuleKind::Intersection:
        case RuleKind::BinomialSum:
            return rule_name(nd.kind) + "(" + nd.operands[0].describe() + ", " + nd.operands[1].describe() + ")";
        case RuleKind::Veronese:
            return "veronese(" + nd.operands[0].describe() + ", " + std::to_string(nd.degree) + ")";
        case RuleKind::TwoStep: return "two_step(" + to_string(nd.a) + " | " + to_string(nd.b) + ")";
        case RuleKind::Explicit: return "explicit(" + nd.label + ")";
    }
    return "?";
}

// ---- membership ----

namespace {

bool polyhedral_member(const std::vector<std::pair<std::vector<BigInt>, BigInt>>& cons, const BigInt& r,
                       const Monomial& u) {
    for (const auto& [a, b] : cons) {
        BigInt s = 0;
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a[j] != 0) s += a[j] * u[j];
        if (s < b * r) return false;
    }
    return true;
}

}  // namespace

bool Filtration::member(const BigInt& r, const Monomial& u) const {
    const auto& nd = *node_;
    if (u.size() != nd.n) throw DomainError("monomial length does not match filtration ambient");
    if (r < 0) throw DomainError("negative filtration level");
    if (nd.kind == RuleKind::Explicit) return generators(to_u64(r)).contains(u);
    if (r == 0) return true;
    switch (nd.kind) {
        case RuleKind::Ordinary:
            if (nd.prime_vars) return sum_over(*nd.prime_vars, u) >= r;
            return ordinary_power_member(nd.ideal, r, u);
        case RuleKind::Ceiling:
            if (nd.prime_vars) return sum_over(*nd.prime_vars, u) * nd.beta.get_den() >= nd.beta.get_num() * r;
            return ordinary_power_member(nd.ideal, ceil(nd.beta * r), u);
        case RuleKind::Symbolic:
        case RuleKind::PrimePowerIntersection:
        case RuleKind::IntegralClosure: return polyhedral_member(nd.cons, r, u);
        case RuleKind::Intersection: return nd.operands[0].member(r, u) && nd.operands[1].member(r, u);
        case RuleKind::Product: {
            auto level = nd.operands[0].generators(to_u64(r));
            for (const auto& g : level.generators())
                if (divides(g, u) && nd.operands[1].member(r, u.divided_by(g))) return true;
            return false;
        }
        case RuleKind::BinomialSum: {
            std::uint64_t top = to_u64(r);
            for (std::uint64_t i = 0; i <= top; ++i) {
                auto level = nd.operands[0].generators(i);
                for (const auto& g : level.generators())
                    if (divides(g, u) && nd.operands[1].member(BigInt(top - i), u.divided_by(g))) return true;
            }
            return false;
        }
        case RuleKind::Veronese: return nd.operands[0].member(r, u);
        case RuleKind::TwoStep: {
            BigInt i = r / 2;
            if (r % 2 == 0) return ordinary_power_member(nd.b, i, u);
            for (const auto& g : nd.a.generators())
                if (divides(g, u) && ordinary_power_member(nd.b, i, u.divided_by(g))) return true;
            return false;
        }
        case RuleKind::Explicit: break;
    }
    return false;
}

BigInt Filtration::exponent_bound(const BigInt& r) const {
    const auto& nd = *node_;
    switch (nd.kind) {
        case RuleKind::Ordinary: return r * nd.max_exp;
        case RuleKind::Ceiling: return ceil(nd.beta * r) * nd.max_exp;
        case RuleKind::Symbolic: return r;
        case RuleKind::PrimePowerIntersection: {
            BigInt w = 0;
            for (const auto& c : nd.comps) w = std::max(w, c.omega);
            return w * r;
        }
        case RuleKind::IntegralClosure: return r * nd.max_exp;
        case RuleKind::Intersection:
            return std::max(nd.operands[0].exponent_bound(r), nd.operands[1].exponent_bound(r));
        case RuleKind::Product:
        case RuleKind::BinomialSum: return nd.operands[0].exponent_bound(r) + nd.operands[1].exponent_bound(r);
        case RuleKind::Veronese: return nd.operands[0].exponent_bound(r);
        case RuleKind::TwoStep: return r * nd.max_exp;
        case RuleKind::Explicit: {
            BigInt m = 0;
            auto level = generators(to_u64(r));
            for (const auto& g : level.generators())
                for (const auto& e : g.exponents()) m = std::max(m, e);
            return m;
        }
    }
    return 0;
}

// ---- generators ----

namespace {

MonomialIdeal guarded_power(const MonomialIdeal& I, const BigInt& k) {
    if (I.num_generators() >= 2 && k > 4096)
        throw CapabilityError("generator production infeasible: power " + k.get_str() + " of " + to_string(I));
    return I.power(to_u64(k));
}

MonomialIdeal compute_generators(const Filtration& F, const Filtration::Node& nd, std::uint64_t r) {
    const std::size_t n = nd.n;
    if (nd.kind == RuleKind::Explicit) {
        auto I = nd.levels(r);
        if (I.ambient() != n) throw DomainError("explicit level has wrong ambient");
        return I;
    }
    if (r == 0) return MonomialIdeal::unit(n);
    switch (nd.kind) {
        case RuleKind::Ordinary: return guarded_power(nd.ideal, BigInt(static_cast<unsigned long>(r)));
        case RuleKind::Ceiling: return guarded_power(nd.ideal, ceil(nd.beta * r));
        case RuleKind::Symbolic:
        case RuleKind::PrimePowerIntersection:
        case RuleKind::IntegralClosure: {
            std::vector<BigInt> bounds(n, 0);
            BigInt R(static_cast<unsigned long>(r));
            if (nd.kind == RuleKind::IntegralClosure) {
                auto m = nd.ideal.max_exponents();
                for (std::size_t j = 0; j < n; ++j) bounds[j] = R * m[j];
            } else {
                BigInt top = F.exponent_bound(R);
                for (const auto& [a, b] : nd.cons)
                    for (std::size_t j = 0; j < n; ++j)
                        if (a[j] != 0) bounds[j] = top;
            }
            auto pts = enumerate_minimal_points(bounds, [&](const Monomial& u) { return polyhedral_member(nd.cons, R, u); });
            return MonomialIdeal(n, std::move(pts));
        }
        case RuleKind::Product: return nd.operands[0].generators(r) * nd.operands[1].generators(r);
        case RuleKind::Intersection: return nd.operands[0].generators(r).intersect(nd.operands[1].generators(r));
        case RuleKind::BinomialSum: {
            std::vector<Monomial> gens;
            for (std::uint64_t i = 0; i <= r; ++i) {
                auto prod = nd.operands[0].generators(i) * nd.operands[1].generators(r - i);
                gens.insert(gens.end(), prod.generators().begin(), prod.generators().end());
            }
            return MonomialIdeal(n, std::move(gens));
        }
        case RuleKind::Veronese: return nd.operands[0].generators(r);
        case RuleKind::TwoStep: {
            auto p = guarded_power(nd.b, BigInt(static_cast<unsigned long>(r / 2)));
            return r % 2 == 0 ? p : nd.a * p;
        }
        case RuleKind::Explicit: break;
    }
    return MonomialIdeal::zero(n);
}

}  // namespace

MonomialIdeal Filtration::generators(std::uint64_t r) const {
    auto& nd = *node_;
    {
        std::lock_guard<std::mutex> lock(nd.mu);
        auto it = nd.cache.find(r);
        if (it != nd.cache.end()) {
            nd.lru.splice(nd.lru.begin(), nd.lru, it->second.second);
            return it->second.first;
        }
    }
    MonomialIdeal result = compute_generators(*this, nd, r);
    std::lock_guard<std::mutex> lock(nd.mu);
    if (nd.cache.find(r) == nd.cache.end()) {
        nd.lru.push_front(r);
        nd.cache.emplace(r, std::make_pair(result, nd.lru.begin()));
        if (nd.cache.size() > Node::kCacheLevels) {
            nd.cache.erase(nd.lru.back());
            nd.lru.pop_back();
        }
    }
    return result;
}

// ---- containment via corner witnesses ----

std::vector<Corner> standard_corners(const MonomialIdeal& K) {
    std::vector<Corner> out;
    for (const auto& comp : K.irreducible_components()) {
        Corner c(K.ambient());
        for (const auto& [j, a] : comp) c[j] = a - 1;
        out.push_back(std::move(c));
    }
    return out;
}

bool level_contained(const Filtration& F, const BigInt& L, const std::vector<Corner>& corners) {
    BigInt level = L < 0 ? BigInt(0) : L;
    if (level == 0) return corners.empty();
    std::optional<BigInt> bound;
    for (const auto& c : corners) {
        Monomial w(F.ambient());
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (c[j]) {
                w.set(j, *c[j]);
            } else {
                if (!bound) bound = F.exponent_bound(level);
                w.set(j, *bound);
            }
        }
        if (F.member(level, w)) return false;
    }
    return true;
}

bool level_contained(const Filtration& F, const BigInt& L, const MonomialIdeal& K) {
    if (K.ambient() != F.ambient()) throw DomainError("ambient mismatch");
    return level_contained(F, L, standard_corners(K));
}

AxiomReport verify_filtration_axioms(const Filtration& F, std::uint64_t r_max) {
    AxiomReport rep;
    auto fail = [&](std::string kind, std::uint64_t i, std::uint64_t j, std::optional<Monomial> w) {
        rep.ok = false;
        rep.violation = std::move(kind);
        rep.i = i;
        rep.j = j;
        rep.witness = std::move(w);
        return rep;
    };
    if (!F.generators(0).is_unit()) return fail("unit", 0, 0, std::nullopt);
    for (std::uint64_t r = 1; r <= r_max; ++r) {
        auto prev = F.generators(r - 1), cur = F.generators(r);
        for (const auto& g : cur.generators())
            if (!prev.contains(g)) return fail("descending", r, r - 1, g);
    }
    const auto k = F.kind();
    bool poly = F.is_polyhedral() || k == RuleKind::Ceiling || k == RuleKind::Intersection;
    for (std::uint64_t i = 1; 2 * i <= r_max; ++i)
        for (std::uint64_t j = i; i + j <= r_max; ++j) {
            auto gi = F.generators(i), gj = F.generators(j);
            auto target = poly ? MonomialIdeal() : F.generators(i + j);
            const BigInt level(static_cast<unsigned long>(i + j));
            for (const auto& g : gi.generators())
                for (const auto& h : gj.generators()) {
                    auto prod = g * h;
                    bool in = poly ? F.member(level, prod) : target.contains(prod);
                    if (!in) return fail("product", i, j, prod);
                }
        }
    return rep;
}

bool verify_veronese(const Filtration& F, std::uint64_t r, std::uint64_t max_k) {
    if (r == 0) return false;
    auto base = F.generators(r);
    for (std::uint64_t k = 1; k <= max_k; ++k)
        if (F.generators(k * r) != base.power(k)) return false;
    return true;
}

bool is_admissible_witness(const Filtration& F, const MonomialIdeal& I, const BigInt& h, const BigInt& c,
                           const BigInt& k, unsigned e_max, std::uint64_t m_max, unsigned long p) {
    if (!is_prime(p)) throw DomainError("p must be prime");
    if (!level_contained(F, k, I)) return false;
    for (unsigned e = 0; e <= e_max; ++e) {
        BigInt q = ipow(p, e);
        for (std::uint64_t m = 0; m <= m_max; ++m) {
            BigInt level = (h + m) * q + c;
            auto K = F.generators(m + 1).bracket_power(q);
            if (!level_contained(F, level, K)) return false;
        }
    }
    return true;
}

}  // namespace fthresh
