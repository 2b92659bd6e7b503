#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fthresh/arith.hpp"
#include "fthresh/monomial.hpp"

namespace fthresh {

// Simple hypergraph on vertices 0..n-1; edges nonempty and pairwise incomparable.
class Hypergraph {
public:
    Hypergraph(std::size_t n, std::vector<VarSet> edges);
    static Hypergraph from_ideal(const MonomialIdeal& I);
    static Hypergraph cycle(std::size_t n);
    static Hypergraph complete(std::size_t n);
    static Hypergraph path(std::size_t n);

    std::size_t n() const { return n_; }
    const std::vector<VarSet>& edges() const { return edges_; }
    bool is_graph() const;

private:
    std::size_t n_;
    std::vector<VarSet> edges_;
};

MonomialIdeal edge_ideal(const Hypergraph& H);
MonomialIdeal cover_ideal(const Hypergraph& H);
std::vector<VarSet> minimal_covers(const Hypergraph& H);
std::size_t vertex_cover_number(const Hypergraph& H);
std::size_t independence_number(const Hypergraph& H);
std::size_t matching_number(const Hypergraph& H);
Rational fractional_matching_number(const Hypergraph& H);
// nullopt when some vertex is a singleton edge (no proper coloring exists).
std::optional<Rational> fractional_chromatic(const Hypergraph& H, std::size_t max_sets = 200000);

std::vector<VarSet> max_cliques(const Hypergraph& G);
std::size_t clique_number(const Hypergraph& G);
bool is_chordal(const Hypergraph& G);

struct BoundsReport {
    std::size_t n = 0, d = 0, tau = 0, matching = 0;
    Rational fractional_matching;
    std::optional<Rational> chi_f;
    Rational ordinary_threshold;  // edge ideal, target m
    Rational symbolic_threshold;  // edge ideal, target m
    Rational ordinary_bound;      // n/d
    Rational symbolic_bound;      // n(chi_f - 1)/chi_f
    bool ordinary_ok = false, symbolic_ok = false;
    bool matching_identity = false;  // ordinary threshold equals the fractional matching number
    bool chi_equality = false;       // chi_f = n/(n - tau)
    bool symbolic_tight = false;
};
BoundsReport threshold_bounds_report(const Hypergraph& H);

}  // namespace fthresh
