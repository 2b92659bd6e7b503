#pragma once

#include <cstddef>
#include <vector>

#include "fthresh/arith.hpp"
#include "fthresh/monomial.hpp"

namespace fthresh {

// Monomial valuation: non-negative rational weights, not all zero.
class WeightVector {
public:
    explicit WeightVector(std::vector<Rational> weights);
    static WeightVector degree(std::size_t n);
    static WeightVector of_vars(std::size_t n, const VarSet& vars);  // v_P for P = (x_j : j in vars)

    std::size_t size() const { return w_.size(); }
    const std::vector<Rational>& weights() const { return w_; }
    Rational operator()(const Monomial& u) const;
    WeightVector scaled(const Rational& c) const;

    friend bool operator==(const WeightVector& a, const WeightVector& b) { return a.w_ == b.w_; }

private:
    std::vector<Rational> w_;
};

// <normal, x> >= offset; normal primitive.
struct FacetInequality {
    std::vector<BigInt> normal;
    BigInt offset;

    bool is_coordinate() const { return offset == 0; }
    BigInt evaluate(const Monomial& u) const;
    friend bool operator==(const FacetInequality& a, const FacetInequality& b) {
        return a.normal == b.normal && a.offset == b.offset;
    }
    friend bool operator<(const FacetInequality& a, const FacetInequality& b);
};

class NewtonPolyhedron {
public:
    NewtonPolyhedron() = default;
    // Facets by double description; verify_irredundant re-checks each facet with an LP.
    explicit NewtonPolyhedron(const MonomialIdeal& I, bool verify_irredundant = true);

    const MonomialIdeal& source() const { return source_; }
    // All facets: essential ones first, then coordinate facets x_j >= 0.
    const std::vector<FacetInequality>& facets() const { return facets_; }
    std::vector<FacetInequality> essential_facets() const;
    std::vector<std::size_t> coordinate_facets() const;

    // x in NP, x a rational point.
    bool contains(const std::vector<Rational>& x) const;
    // u in r * NP, i.e. u in the integral closure of I^r.
    bool contains_scaled(const Monomial& u, const BigInt& r) const;

private:
    MonomialIdeal source_;
    std::vector<FacetInequality> facets_;
};

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& I);
bool integral_closure_member(const NewtonPolyhedron& np, const BigInt& r, const Monomial& u);
bool integral_closure_member(const MonomialIdeal& I, const BigInt& r, const Monomial& u);

// LP check: dropping facet k admits a point of the relaxed polyhedron violating it.
bool facet_is_irredundant(const std::vector<FacetInequality>& facets, std::size_t k);

struct ReesValuation {
    WeightVector v;
    BigInt value;  // v(I)
};
std::vector<ReesValuation> rees_valuations(const MonomialIdeal& I);

// min over generators of <v, g>. Throws for the zero ideal.
Rational valuation_of_ideal(const WeightVector& v, const MonomialIdeal& I);

}  // namespace fthresh
