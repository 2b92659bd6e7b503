#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fthresh/arith.hpp"
#include "fthresh/monomial.hpp"
#include "fthresh/polyhedra.hpp"

namespace fthresh {

enum class RuleKind {
    Ordinary,
    Symbolic,
    PrimePowerIntersection,
    IntegralClosure,
    Ceiling,
    Product,
    Intersection,
    BinomialSum,
    Veronese,
    TwoStep,
    Explicit
};

std::string rule_name(RuleKind k);

struct PrimeComponent {
    VarSet vars;
    BigInt omega;
    friend bool operator==(const PrimeComponent& a, const PrimeComponent& b) {
        return a.vars == b.vars && a.omega == b.omega;
    }
};

// Immutable handle; copies share the rule and its level cache.
class Filtration {
public:
    static Filtration ordinary(MonomialIdeal I);
    static Filtration symbolic(MonomialIdeal I);
    static Filtration prime_power_intersection(std::size_t n, std::vector<PrimeComponent> comps);
    static Filtration integral_closure(MonomialIdeal I);
    static Filtration ceiling(MonomialIdeal I, Rational beta);
    static Filtration product(Filtration F, Filtration G);
    static Filtration intersection(Filtration F, Filtration G);
    static Filtration binomial_sum(Filtration F, Filtration G);
    static Filtration veronese(Filtration F, std::uint64_t degree);
    // a_{2i} = b^i, a_{2i+1} = a b^i; requires a^2 in b in a.
    static Filtration two_step(MonomialIdeal a, MonomialIdeal b);
    // Arbitrary levels; not checked to be a filtration.
    static Filtration explicit_levels(std::size_t n, std::function<MonomialIdeal(std::uint64_t)> levels,
                                      std::string label);

    std::size_t ambient() const;
    RuleKind kind() const;

    bool member(const BigInt& r, const Monomial& u) const;
    MonomialIdeal generators(std::uint64_t r) const;
    // Every minimal generator of a_r has all exponents <= this bound.
    BigInt exponent_bound(const BigInt& r) const;
    // Rules whose levels are {u : <a_i,u> >= b_i r}: symbolic, prime power intersection, integral closure.
    bool is_polyhedral() const;
    // Constraint rows (a_i, b_i) of a polyhedral rule.
    const std::vector<std::pair<std::vector<BigInt>, BigInt>>& constraints() const;

    const MonomialIdeal& ideal() const;
    const Rational& beta() const;
    const std::vector<PrimeComponent>& components() const;
    const std::vector<VarSet>& primes() const;
    const NewtonPolyhedron& polyhedron() const;
    const Filtration& left() const;
    const Filtration& right() const;
    const Filtration& inner() const;
    std::uint64_t veronese_degree() const;
    const MonomialIdeal& step_a() const;
    const MonomialIdeal& step_b() const;
    const std::string& label() const;

    std::string describe() const;

    struct Node;

private:
    explicit Filtration(std::shared_ptr<Node> node) : node_(std::move(node)) {}
    std::shared_ptr<Node> node_;
};

// Exact test u in I^k (integer program with an LP bound).
bool ordinary_power_member(const MonomialIdeal& I, const BigInt& k, const Monomial& u);
// Largest k with u in I^k; nullopt when unbounded (unit ideal).
std::optional<BigInt> max_power(const MonomialIdeal& I, const Monomial& u);

// Minimal lattice points of an upward-closed set inside a box.
std::vector<Monomial> enumerate_minimal_points(const std::vector<BigInt>& bounds,
                                               const std::function<bool(const Monomial&)>& member);

// Standard-set corners of a monomial ideal K: u is outside K iff u <= some corner,
// where nullopt entries are unbounded.
using Corner = std::vector<std::optional<BigInt>>;
std::vector<Corner> standard_corners(const MonomialIdeal& K);

// a_L subset of K, decided on corner witnesses (L < 0 treated as L = 0).
bool level_contained(const Filtration& F, const BigInt& L, const std::vector<Corner>& corners_of_K);
bool level_contained(const Filtration& F, const BigInt& L, const MonomialIdeal& K);

struct AxiomReport {
    bool ok = true;
    std::string violation;  // "unit", "descending", "product"
    std::uint64_t i = 0, j = 0;
    std::optional<Monomial> witness;
};
AxiomReport verify_filtration_axioms(const Filtration& F, std::uint64_t r_max);

// a_{kr} = a_r^k for k = 1..max_k.
bool verify_veronese(const Filtration& F, std::uint64_t r, std::uint64_t max_k = 4);

bool is_admissible_witness(const Filtration& F, const MonomialIdeal& I, const BigInt& h, const BigInt& c,
                           const BigInt& k, unsigned e_max, std::uint64_t m_max, unsigned long p);

}  // namespace fthresh
