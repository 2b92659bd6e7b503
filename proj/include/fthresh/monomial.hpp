#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "fthresh/arith.hpp"

namespace fthresh {

// Exponent vector in Z^n_{>=0}.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t n) : exps_(n) {}
    explicit Monomial(std::vector<BigInt> exps);
    Monomial(std::initializer_list<long> exps);

    static Monomial constant(std::size_t n, const BigInt& value);

    std::size_t size() const { return exps_.size(); }
    const BigInt& operator[](std::size_t j) const { return exps_[j]; }
    void set(std::size_t j, BigInt v);
    const std::vector<BigInt>& exponents() const { return exps_; }

    BigInt degree() const;
    bool is_one() const;
    bool is_squarefree() const;
    std::vector<std::size_t> support() const;

    Monomial operator*(const Monomial& other) const;
    Monomial scaled(const BigInt& q) const;
    // Exponentwise max(0, a - b).
    Monomial divided_by(const Monomial& other) const;
    Monomial lcm(const Monomial& other) const;
    Monomial gcd(const Monomial& other) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
    friend bool operator<(const Monomial& a, const Monomial& b);

private:
    std::vector<BigInt> exps_;
};

// u <= w componentwise. Throws DomainError on length mismatch.
bool divides(const Monomial& u, const Monomial& w);

using VarSet = std::vector<std::size_t>;

// Antichain of minimal generators, sorted lexicographically.
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    MonomialIdeal(std::size_t n, std::vector<Monomial> gens);

    static MonomialIdeal zero(std::size_t n);
    static MonomialIdeal unit(std::size_t n);
    static MonomialIdeal maximal(std::size_t n);
    static MonomialIdeal variables(std::size_t n, const VarSet& vars);
    static MonomialIdeal pure_powers(const std::vector<BigInt>& m);

    std::size_t ambient() const { return n_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    std::size_t num_generators() const { return gens_.size(); }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
    bool is_squarefree() const;
    // Generated by a subset of the variables.
    std::optional<VarSet> prime_support() const;
    // (x1^m1, ..., xn^mn) with every variable present.
    std::optional<std::vector<BigInt>> pure_power_exponents() const;
    // Largest exponent of each variable among generators.
    std::vector<BigInt> max_exponents() const;

    bool contains(const Monomial& w) const;
    bool contains(const MonomialIdeal& other) const;

    MonomialIdeal operator+(const MonomialIdeal& other) const;
    MonomialIdeal operator*(const MonomialIdeal& other) const;
    MonomialIdeal power(std::uint64_t r) const;
    MonomialIdeal intersect(const MonomialIdeal& other) const;
    MonomialIdeal colon(const Monomial& u) const;
    MonomialIdeal saturate(const MonomialIdeal& J) const;
    MonomialIdeal bracket_power(const BigInt& q) const;

    // Irreducible components: each is a list of (variable, exponent) meaning (x_j^a : ...).
    // Empty list for the zero ideal means "no constraint" (one component, the whole ring's standard set).
    std::vector<std::vector<std::pair<std::size_t, BigInt>>> irreducible_components() const;

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.n_ == b.n_ && a.gens_ == b.gens_;
    }
    friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) { return !(a == b); }

private:
    // gens already an antichain; only sorted.
    static MonomialIdeal from_antichain(std::size_t n, std::vector<Monomial> gens);

    std::size_t n_ = 0;
    std::vector<Monomial> gens_;
};

bool contains_monomial(const MonomialIdeal& I, const Monomial& w);
bool contains_ideal(const MonomialIdeal& A, const MonomialIdeal& B);

// Minimal transversals of a family of vertex sets over n vertices, sorted.
std::vector<VarSet> minimal_transversals(std::size_t n, const std::vector<VarSet>& edges);

// Square-free only. Minimal primes as sorted variable subsets (0-based).
std::vector<VarSet> minimal_primes(const MonomialIdeal& I);
std::size_t height(const MonomialIdeal& I);
std::size_t big_height(const MonomialIdeal& I);

// Human-readable form: x1^2*x3; ... ("0" for zero ideal, "1" for unit).
std::string to_string(const Monomial& u);
std::string to_string(const MonomialIdeal& I);

// Ideal text grammar. n = 0 infers the ambient from the largest variable index.
Monomial parse_monomial(std::string_view text, std::size_t n);
MonomialIdeal parse_ideal(std::string_view text, std::size_t n = 0);

}  // namespace fthresh
