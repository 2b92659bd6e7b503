#include "fthresh/monomial.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "fthresh/errors.hpp"

namespace fthresh {

Monomial::Monomial(std::vector<BigInt> exps) : exps_(std::move(exps)) {
    for (const auto& e : exps_)
        if (e < 0) throw DomainError("negative exponent");
}

Monomial::Monomial(std::initializer_list<long> exps) {
    exps_.reserve(exps.size());
    for (long e : exps) {
        if (e < 0) throw DomainError("negative exponent");
        exps_.emplace_back(e);
    }
}

Monomial Monomial::constant(std::size_t n, const BigInt& value) {
    return Monomial(std::vector<BigInt>(n, value));
}

void Monomial::set(std::size_t j, BigInt v) {
    if (v < 0) throw DomainError("negative exponent");
    exps_.at(j) = std::move(v);
}

BigInt Monomial::degree() const {
    BigInt d = 0;
    for (const auto& e : exps_) d += e;
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](const BigInt& e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
    return std::all_of(exps_.begin(), exps_.end(), [](const BigInt& e) { return e <= 1; });
}

std::vector<std::size_t> Monomial::support() const {
    std::vector<std::size_t> s;
    for (std::size_t j = 0; j < exps_.size(); ++j)
        if (exps_[j] > 0) s.push_back(j);
    return s;
}

static void check_len(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size())
        throw DomainError("monomial length mismatch: " + std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()));
}

Monomial Monomial::operator*(const Monomial& other) const {
    check_len(*this, other);
    Monomial r(size());
    for (std::size_t j = 0; j < size(); ++j) r.exps_[j] = exps_[j] + other.exps_[j];
    return r;
}

Monomial Monomial::scaled(const BigInt& q) const {
    Monomial r(size());
    for (std::size_t j = 0; j < size(); ++j) r.exps_[j] = exps_[j] * q;
    return r;
}

Monomial Monomial::divided_by(const Monomial& other) const {
    check_len(*this, other);
    Monomial r(size());
    for (std::size_t j = 0; j < size(); ++j)
        r.exps_[j] = exps_[j] > other.exps_[j] ? BigInt(exps_[j] - other.exps_[j]) : BigInt(0);
    return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
    check_len(*this, other);
    Monomial r(size());
    for (std::size_t j = 0; j < size(); ++j) r.exps_[j] = std::max(exps_[j], other.exps_[j]);
    return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
    check_len(*this, other);
    Monomial r(size());
    for (std::size_t j = 0; j < size(); ++j) r.exps_[j] = std::min(exps_[j], other.exps_[j]);
    return r;
}

bool operator<(const Monomial& a, const Monomial& b) {
    return std::lexicographical_compare(a.exps_.begin(), a.exps_.end(), b.exps_.begin(), b.exps_.end(),
                                        [](const BigInt& x, const BigInt& y) { return x < y; });
}

bool divides(const Monomial& u, const Monomial& w) {
    check_len(u, w);
    for (std::size_t j = 0; j < u.size(); ++j)
        if (u[j] > w[j]) return false;
    return true;
}

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::vector<std::pair<BigInt, Monomial>> keyed;
    keyed.reserve(gens.size());
    for (auto& g : gens) keyed.emplace_back(g.degree(), std::move(g));
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    });
    std::vector<Monomial> kept;
    for (auto& [deg, g] : keyed) {
        bool redundant = false;
        for (const auto& k : kept)
            if (divides(k, g)) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(std::move(g));
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::size_t n, std::vector<Monomial> gens) : n_(n) {
    if (n == 0) throw DomainError("ambient ring needs at least one variable");
    for (const auto& g : gens)
        if (g.size() != n)
            throw DomainError("generator length " + std::to_string(g.size()) + " does not match ambient " +
                              std::to_string(n));
    gens_ = minimalize(std::move(gens));
}

MonomialIdeal MonomialIdeal::zero(std::size_t n) { return MonomialIdeal(n, {}); }

MonomialIdeal MonomialIdeal::unit(std::size_t n) { return MonomialIdeal(n, {Monomial(n)}); }

MonomialIdeal MonomialIdeal::maximal(std::size_t n) {
    std::vector<std::size_t> all(n);
    for (std::size_t j = 0; j < n; ++j) all[j] = j;
    return variables(n, all);
}

MonomialIdeal MonomialIdeal::variables(std::size_t n, const VarSet& vars) {
    std::vector<Monomial> gens;
    for (auto j : vars) {
        if (j >= n) throw DomainError("variable index out of range");
        Monomial g(n);
        g.set(j, 1);
        gens.push_back(std::move(g));
    }
    return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal MonomialIdeal::pure_powers(const std::vector<BigInt>& m) {
    std::vector<Monomial> gens;
    for (std::size_t j = 0; j < m.size(); ++j) {
        if (m[j] <= 0) throw DomainError("pure power exponent must be positive");
        Monomial g(m.size());
        g.set(j, m[j]);
        gens.push_back(std::move(g));
    }
    return MonomialIdeal(m.size(), std::move(gens));
}

bool MonomialIdeal::is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

std::optional<VarSet> MonomialIdeal::prime_support() const {
    VarSet vars;
    for (const auto& g : gens_) {
        auto s = g.support();
        if (s.size() != 1 || g[s[0]] != 1) return std::nullopt;
        vars.push_back(s[0]);
    }
    std::sort(vars.begin(), vars.end());
    return vars;
}

std::optional<std::vector<BigInt>> MonomialIdeal::pure_power_exponents() const {
    if (gens_.size() != n_) return std::nullopt;
    std::vector<BigInt> m(n_, 0);
    for (const auto& g : gens_) {
        auto s = g.support();
        if (s.size() != 1 || m[s[0]] != 0) return std::nullopt;
        m[s[0]] = g[s[0]];
    }
    return m;
}

std::vector<BigInt> MonomialIdeal::max_exponents() const {
    std::vector<BigInt> m(n_, 0);
    for (const auto& g : gens_)
        for (std::size_t j = 0; j < n_; ++j) m[j] = std::max(m[j], g[j]);
    return m;
}

bool MonomialIdeal::contains(const Monomial& w) const {
    if (w.size() != n_) throw DomainError("monomial length does not match ideal ambient");
    for (const auto& g : gens_)
        if (divides(g, w)) return true;
    return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
    if (other.n_ != n_) throw DomainError("ambient mismatch");
    for (const auto& g : other.gens_)
        if (!contains(g)) return false;
    return true;
}

static void check_ambient(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.ambient() != b.ambient()) throw DomainError("ambient mismatch");
}

MonomialIdeal MonomialIdeal::operator+(const MonomialIdeal& other) const {
    check_ambient(*this, other);
    auto gens = gens_;
    gens.insert(gens.end(), other.gens_.begin(), other.gens_.end());
    return MonomialIdeal(n_, std::move(gens));
}

MonomialIdeal MonomialIdeal::operator*(const MonomialIdeal& other) const {
    check_ambient(*this, other);
    std::vector<Monomial> gens;
    gens.reserve(gens_.size() * other.gens_.size());
    for (const auto& a : gens_)
        for (const auto& b : other.gens_) gens.push_back(a * b);
    return MonomialIdeal(n_, std::move(gens));
}

MonomialIdeal MonomialIdeal::from_antichain(std::size_t n, std::vector<Monomial> gens) {
    MonomialIdeal I;
    I.n_ = n;
    I.gens_ = std::move(gens);
    std::sort(I.gens_.begin(), I.gens_.end());
    return I;
}

MonomialIdeal MonomialIdeal::power(std::uint64_t r) const {
    if (r > 0 && !is_zero())
        if (auto vars = prime_support()) {
            // all monomials of degree r in vars
            std::vector<Monomial> gens;
            Monomial u(n_);
            std::function<void(std::size_t, std::uint64_t)> fill = [&](std::size_t k, std::uint64_t left) {
                if (k + 1 == vars->size()) {
                    u.set((*vars)[k], BigInt(static_cast<unsigned long>(left)));
                    gens.push_back(u);
                    return;
                }
                for (std::uint64_t a = 0; a <= left; ++a) {
                    u.set((*vars)[k], BigInt(static_cast<unsigned long>(a)));
                    fill(k + 1, left - a);
                }
                u.set((*vars)[k], BigInt(0));
            };
            fill(0, r);
            return from_antichain(n_, std::move(gens));
        }
    MonomialIdeal result = unit(n_);
    MonomialIdeal base = *this;
    while (r > 0) {
        if (r & 1) result = result * base;
        r >>= 1;
        if (r > 0) base = base * base;
    }
    return result;
}

MonomialIdeal MonomialIdeal::intersect(const MonomialIdeal& other) const {
    check_ambient(*this, other);
    std::vector<Monomial> gens;
    gens.reserve(gens_.size() * other.gens_.size());
    for (const auto& a : gens_)
        for (const auto& b : other.gens_) gens.push_back(a.lcm(b));
    return MonomialIdeal(n_, std::move(gens));
}

MonomialIdeal MonomialIdeal::colon(const Monomial& u) const {
    if (u.size() != n_) throw DomainError("monomial length does not match ideal ambient");
    std::vector<Monomial> gens;
    for (const auto& g : gens_) gens.push_back(g.divided_by(u));
    return MonomialIdeal(n_, std::move(gens));
}

MonomialIdeal MonomialIdeal::saturate(const MonomialIdeal& J) const {
    check_ambient(*this, J);
    MonomialIdeal cur = *this;
    while (true) {
        // I : J = intersection over generators of J of I : g
        MonomialIdeal next = unit(n_);
        if (J.is_zero()) return cur;
        bool first = true;
        for (const auto& g : J.gens_) {
            auto c = cur.colon(g);
            next = first ? c : next.intersect(c);
            first = false;
        }
        if (next == cur) return cur;
        cur = std::move(next);
    }
}

MonomialIdeal MonomialIdeal::bracket_power(const BigInt& q) const {
    if (q < 1) throw DomainError("bracket power exponent must be >= 1");
    MonomialIdeal r;
    r.n_ = n_;
    r.gens_.reserve(gens_.size());
    for (const auto& g : gens_) r.gens_.push_back(g.scaled(q));
    return r;
}

namespace {

using Component = std::vector<std::pair<std::size_t, BigInt>>;

void decompose(std::size_t n, std::vector<Monomial> gens, std::vector<Component>& out) {
    gens = MonomialIdeal(n, std::move(gens)).generators();
    for (const auto& g : gens) {
        auto s = g.support();
        if (s.empty()) return;  // unit ideal: no standard monomials
        if (s.size() >= 2) {
            Monomial head(n), tail = g;
            head.set(s[0], g[s[0]]);
            tail.set(s[0], 0);
            auto left = gens;
            left.push_back(head);
            decompose(n, std::move(left), out);
            gens.push_back(tail);
            decompose(n, std::move(gens), out);
            return;
        }
    }
    Component c;
    for (const auto& g : gens) {
        auto j = g.support()[0];
        c.emplace_back(j, g[j]);
    }
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
}

// a contains b as ideals: every generator of b lies in a.
bool component_contains(const Component& a, const Component& b) {
    for (const auto& [j, e] : b) {
        auto it = std::find_if(a.begin(), a.end(), [&](const auto& x) { return x.first == j; });
        if (it == a.end() || it->second > e) return false;
    }
    return true;
}

}  // namespace

std::vector<std::vector<std::pair<std::size_t, BigInt>>> MonomialIdeal::irreducible_components() const {
    if (is_zero()) return {Component{}};
    std::vector<Component> all;
    decompose(n_, gens_, all);
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    std::vector<Component> kept;
    for (std::size_t i = 0; i < all.size(); ++i) {
        bool redundant = false;
        for (std::size_t k = 0; k < all.size() && !redundant; ++k)
            if (k != i && component_contains(all[i], all[k])) redundant = true;
        if (!redundant) kept.push_back(all[i]);
    }
    return kept;
}

bool contains_monomial(const MonomialIdeal& I, const Monomial& w) { return I.contains(w); }

bool contains_ideal(const MonomialIdeal& A, const MonomialIdeal& B) { return B.contains(A); }

std::vector<VarSet> minimal_transversals(std::size_t n, const std::vector<VarSet>& edges) {
    if (n > 64) throw CapabilityError("transversal enumeration limited to 64 vertices");
    using Mask = std::uint64_t;
    std::vector<Mask> masks;
    for (const auto& e : edges) {
        Mask m = 0;
        for (auto v : e) {
            if (v >= n) throw DomainError("vertex index out of range");
            m |= Mask(1) << v;
        }
        if (m == 0) return {};  // an empty edge can never be hit
        masks.push_back(m);
    }
    std::vector<Mask> cur{0};
    for (Mask e : masks) {
        std::set<Mask> next;
        for (Mask t : cur) {
            if (t & e) {
                next.insert(t);
                continue;
            }
            for (std::size_t v = 0; v < n; ++v)
                if (e >> v & 1) next.insert(t | (Mask(1) << v));
        }
        std::vector<Mask> cand(next.begin(), next.end());
        std::sort(cand.begin(), cand.end(),
                  [](Mask a, Mask b) { return __builtin_popcountll(a) < __builtin_popcountll(b) ||
                                              (__builtin_popcountll(a) == __builtin_popcountll(b) && a < b); });
        cur.clear();
        for (Mask c : cand) {
            bool dominated = false;
            for (Mask k : cur)
                if ((k & c) == k) {
                    dominated = true;
                    break;
                }
            if (!dominated) cur.push_back(c);
        }
    }
    std::vector<VarSet> out;
    for (Mask t : cur) {
        VarSet s;
        for (std::size_t v = 0; v < n; ++v)
            if (t >> v & 1) s.push_back(v);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VarSet> minimal_primes(const MonomialIdeal& I) {
    if (!I.is_squarefree()) throw UnsupportedError("minimal primes require a square-free ideal");
    if (I.is_zero()) throw DomainError("minimal primes of the zero ideal are not defined");
    if (I.is_unit()) throw DomainError("the unit ideal has no minimal primes");
    std::vector<VarSet> edges;
    for (const auto& g : I.generators()) edges.push_back(g.support());
    return minimal_transversals(I.ambient(), edges);
}

std::size_t height(const MonomialIdeal& I) {
    std::size_t h = SIZE_MAX;
    for (const auto& p : minimal_primes(I)) h = std::min(h, p.size());
    return h;
}

std::size_t big_height(const MonomialIdeal& I) {
    std::size_t h = 0;
    for (const auto& p : minimal_primes(I)) h = std::max(h, p.size());
    return h;
}

std::string to_string(const Monomial& u) {
    std::string s;
    for (std::size_t j = 0; j < u.size(); ++j) {
        if (u[j] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(j + 1);
        if (u[j] != 1) s += "^" + u[j].get_str();
    }
    return s.empty() ? "1" : s;
}

std::string to_string(const MonomialIdeal& I) {
    if (I.is_zero()) return "0";
    std::string s;
    for (const auto& g : I.generators()) {
        if (!s.empty()) s += ";";
        s += to_string(g);
    }
    return s;
}

}  // namespace fthresh
