#include "fthresh/polyhedra.hpp"

#include <algorithm>

#include "fthresh/errors.hpp"
#include "fthresh/lp.hpp"

namespace fthresh {

WeightVector::WeightVector(std::vector<Rational> weights) : w_(std::move(weights)) {
    bool positive = false;
    for (auto& x : w_) {
        x.canonicalize();
        if (x < 0) throw DomainError("valuation weights must be non-negative");
        if (x > 0) positive = true;
    }
    if (!positive) throw DomainError("valuation needs a positive weight");
}

WeightVector WeightVector::degree(std::size_t n) { return WeightVector(std::vector<Rational>(n, 1)); }

WeightVector WeightVector::of_vars(std::size_t n, const VarSet& vars) {
    std::vector<Rational> w(n, 0);
    for (auto j : vars) w.at(j) = 1;
    return WeightVector(std::move(w));
}

Rational WeightVector::operator()(const Monomial& u) const {
    if (u.size() != w_.size()) throw DomainError("valuation length mismatch");
    Rational s = 0;
    for (std::size_t j = 0; j < w_.size(); ++j)
        if (w_[j] != 0 && u[j] != 0) s += w_[j] * u[j];
    return s;
}

WeightVector WeightVector::scaled(const Rational& c) const {
    if (c <= 0) throw DomainError("valuation scale must be positive");
    auto w = w_;
    for (auto& x : w) x *= c;
    return WeightVector(std::move(w));
}

BigInt FacetInequality::evaluate(const Monomial& u) const {
    BigInt s = 0;
    for (std::size_t j = 0; j < normal.size(); ++j) s += normal[j] * u[j];
    return s;
}

bool operator<(const FacetInequality& a, const FacetInequality& b) {
    if (a.normal != b.normal)
        return std::lexicographical_compare(a.normal.begin(), a.normal.end(), b.normal.begin(), b.normal.end(),
                                            [](const BigInt& x, const BigInt& y) { return x < y; });
    return a.offset < b.offset;
}

namespace {

using Vec = std::vector<BigInt>;
using Bits = std::vector<std::uint64_t>;

struct Ray {
    Vec y;
    Bits zero;
};

void set_bit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t(1) << (i % 64); }

Bits meet(const Bits& a, const Bits& b) {
    Bits r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] & b[i];
    return r;
}

bool subset(const Bits& a, const Bits& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

std::size_t popcount(const Bits& a) {
    std::size_t c = 0;
    for (auto w : a) c += __builtin_popcountll(w);
    return c;
}

BigInt dot(const Vec& a, const Vec& b) {
    BigInt s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    return s;
}

void make_primitive(Vec& v) {
    BigInt g = 0;
    for (const auto& x : v) g = gcd(g, x);
    if (g > 1)
        for (auto& x : v) x /= g;
}

// Extreme rays of {y : A y >= 0}, A of full column rank with its first d rows independent.
std::vector<Ray> double_description(const std::vector<Vec>& rows, const std::vector<Vec>& initial_rays) {
    const std::size_t m = rows.size();
    const std::size_t d = rows[0].size();
    const std::size_t words = (m + 63) / 64;
    std::vector<Ray> rays;
    for (const auto& y : initial_rays) {
        Ray r{y, Bits(words, 0)};
        for (std::size_t i = 0; i < d; ++i)
            if (dot(rows[i], y) == 0) set_bit(r.zero, i);
        rays.push_back(std::move(r));
    }
    for (std::size_t k = d; k < m; ++k) {
        std::vector<BigInt> val(rays.size());
        std::vector<std::size_t> pos, neg;
        std::vector<Ray> next;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            val[i] = dot(rows[k], rays[i].y);
            if (val[i] > 0) pos.push_back(i);
            else if (val[i] < 0) neg.push_back(i);
        }
        if (neg.empty()) {
            for (std::size_t i = 0; i < rays.size(); ++i)
                if (val[i] == 0) set_bit(rays[i].zero, k);
            continue;
        }
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (val[i] < 0) continue;
            Ray r = rays[i];
            if (val[i] == 0) set_bit(r.zero, k);
            next.push_back(std::move(r));
        }
        for (auto ip : pos)
            for (auto in : neg) {
                Bits common = meet(rays[ip].zero, rays[in].zero);
                if (popcount(common) + 2 < d) continue;
                bool adjacent = true;
                for (std::size_t o = 0; o < rays.size() && adjacent; ++o)
                    if (o != ip && o != in && subset(common, rays[o].zero)) adjacent = false;
                if (!adjacent) continue;
                Vec y(d);
                for (std::size_t t = 0; t < d; ++t) y[t] = val[ip] * rays[in].y[t] - val[in] * rays[ip].y[t];
                make_primitive(y);
                set_bit(common, k);
                next.push_back({std::move(y), std::move(common)});
            }
        rays = std::move(next);
    }
    return rays;
}

}  // namespace

NewtonPolyhedron::NewtonPolyhedron(const MonomialIdeal& I, bool verify_irredundant) : source_(I) {
    if (I.is_zero()) throw DomainError("Newton polyhedron of the zero ideal is empty");
    if (I.is_unit()) throw DomainError("Newton polyhedron requires a proper ideal");
    const std::size_t n = I.ambient();
    const std::size_t d = n + 1;
    // Cone of valid (w, c): w_j >= 0 and <w, g> - c >= 0 for every generator g.
    std::vector<Vec> rows;
    for (std::size_t j = 0; j < n; ++j) {
        Vec r(d, 0);
        r[j] = 1;
        rows.push_back(std::move(r));
    }
    const auto& gens = I.generators();
    for (const auto& g : gens) {
        Vec r(d);
        for (std::size_t j = 0; j < n; ++j) r[j] = g[j];
        r[n] = -1;
        rows.push_back(std::move(r));
    }
    // Initial rays are the columns of the inverse of the first d rows.
    std::vector<Vec> init;
    for (std::size_t k = 0; k < n; ++k) {
        Vec y(d, 0);
        y[k] = 1;
        y[n] = gens[0][k];
        init.push_back(std::move(y));
    }
    Vec down(d, 0);
    down[n] = -1;
    init.push_back(std::move(down));

    for (auto& ray : double_description(rows, init)) {
        Vec w(ray.y.begin(), ray.y.begin() + static_cast<std::ptrdiff_t>(n));
        BigInt c = ray.y[n];
        if (std::all_of(w.begin(), w.end(), [](const BigInt& x) { return x == 0; })) continue;
        BigInt g = 0;
        for (const auto& x : w) g = gcd(g, x);
        for (auto& x : w) x /= g;
        c /= g;
        facets_.push_back({std::move(w), std::move(c)});
    }
    std::sort(facets_.begin(), facets_.end(), [](const FacetInequality& a, const FacetInequality& b) {
        if (a.is_coordinate() != b.is_coordinate()) return !a.is_coordinate();
        return a < b;
    });
    if (verify_irredundant) {
        for (std::size_t k = 0; k < facets_.size(); ++k)
            if (!facet_is_irredundant(facets_, k))
                throw DomainError("internal: redundant facet produced for " + to_string(I));
    }
}

std::vector<FacetInequality> NewtonPolyhedron::essential_facets() const {
    std::vector<FacetInequality> out;
    for (const auto& f : facets_)
        if (!f.is_coordinate()) out.push_back(f);
    return out;
}

std::vector<std::size_t> NewtonPolyhedron::coordinate_facets() const {
    std::vector<std::size_t> out;
    for (const auto& f : facets_)
        if (f.is_coordinate())
            for (std::size_t j = 0; j < f.normal.size(); ++j)
                if (f.normal[j] != 0) out.push_back(j);
    std::sort(out.begin(), out.end());
    return out;
}

bool NewtonPolyhedron::contains(const std::vector<Rational>& x) const {
    if (x.size() != source_.ambient()) throw DomainError("point dimension mismatch");
    for (const auto& v : x)
        if (v < 0) return false;
    for (const auto& f : facets_) {
        Rational s = 0;
        for (std::size_t j = 0; j < x.size(); ++j) s += f.normal[j] * x[j];
        if (s < f.offset) return false;
    }
    return true;
}

bool NewtonPolyhedron::contains_scaled(const Monomial& u, const BigInt& r) const {
    if (u.size() != source_.ambient()) throw DomainError("monomial dimension mismatch");
    for (const auto& f : facets_)
        if (!f.is_coordinate() && f.evaluate(u) < r * f.offset) return false;
    return true;
}

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& I) { return NewtonPolyhedron(I); }

bool integral_closure_member(const NewtonPolyhedron& np, const BigInt& r, const Monomial& u) {
    if (r < 0) throw DomainError("negative level");
    return np.contains_scaled(u, r);
}

bool integral_closure_member(const MonomialIdeal& I, const BigInt& r, const Monomial& u) {
    if (r == 0) return true;
    if (I.is_zero()) return false;
    if (I.is_unit()) return true;
    return NewtonPolyhedron(I, false).contains_scaled(u, r);
}

bool facet_is_irredundant(const std::vector<FacetInequality>& facets, std::size_t k) {
    const std::size_t n = facets.at(k).normal.size();
    // Free variables x = x+ - x-.
    LinearProgram lp(2 * n, false);
    for (std::size_t j = 0; j < n; ++j) {
        lp.objective[j] = facets[k].normal[j];
        lp.objective[n + j] = -facets[k].normal[j];
    }
    for (std::size_t i = 0; i < facets.size(); ++i) {
        if (i == k) continue;
        std::vector<Rational> row(2 * n);
        for (std::size_t j = 0; j < n; ++j) {
            row[j] = facets[i].normal[j];
            row[n + j] = -facets[i].normal[j];
        }
        lp.add_row(std::move(row), Sense::GreaterEq, facets[i].offset);
    }
    auto sol = lp_solve(lp);
    if (sol.status == LpStatus::Unbounded) return true;
    if (sol.status == LpStatus::Infeasible) return false;
    return sol.value < facets[k].offset;
}

std::vector<ReesValuation> rees_valuations(const MonomialIdeal& I) {
    std::vector<ReesValuation> out;
    for (const auto& f : NewtonPolyhedron(I).essential_facets()) {
        std::vector<Rational> w(f.normal.begin(), f.normal.end());
        out.push_back({WeightVector(std::move(w)), f.offset});
    }
    return out;
}

Rational valuation_of_ideal(const WeightVector& v, const MonomialIdeal& I) {
    if (I.is_zero()) throw DomainError("valuation of the zero ideal is infinite");
    bool first = true;
    Rational best;
    for (const auto& g : I.generators()) {
        Rational x = v(g);
        if (first || x < best) best = x;
        first = false;
    }
    return best;
}

}  // namespace fthresh
