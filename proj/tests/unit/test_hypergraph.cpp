#include "doctest.h"

#include <random>

#include "fthresh/errors.hpp"
#include "fthresh/hypergraph.hpp"
#include "fthresh/nu.hpp"
#include "oracles.hpp"

using namespace fthresh;

TEST_CASE("construction and validation") {
    CHECK_THROWS_AS(Hypergraph(3, {{0, 1}, {0, 1, 2}}), DomainError);
    CHECK_THROWS_AS(Hypergraph(3, {{0, 3}}), DomainError);
    CHECK_THROWS_AS(Hypergraph(3, {{}}), DomainError);
    auto H = Hypergraph::from_ideal(parse_ideal("x1*x2;x2*x3*x4"));
    CHECK(H.n() == 4);
    CHECK(H.edges() == std::vector<VarSet>{{0, 1}, {1, 2, 3}});
    CHECK_FALSE(H.is_graph());
    CHECK(Hypergraph::cycle(5).is_graph());
}

TEST_CASE("covers, matchings and independence against brute force") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 40; ++t) {
        auto I = oracle::random_squarefree(7, 6, rng);
        auto H = Hypergraph::from_ideal(I);
        auto bf = oracle::covers(H.n(), H.edges());
        REQUIRE(minimal_covers(H) == bf);
        std::size_t tau = H.n();
        for (const auto& c : bf) tau = std::min(tau, c.size());
        REQUIRE(vertex_cover_number(H) == tau);
        REQUIRE(independence_number(H) == H.n() - tau);
        REQUIRE(matching_number(H) == oracle::matching(H.edges()));
        auto nu_f = fractional_matching_number(H);
        REQUIRE(nu_f >= BigInt(matching_number(H)));
        REQUIRE(nu_f <= BigInt(tau));
    }
}

TEST_CASE("edge and cover ideals") {
    auto C5 = Hypergraph::cycle(5);
    CHECK(edge_ideal(C5).num_generators() == 5);
    auto J = cover_ideal(C5);
    CHECK(J.num_generators() == 5);
    CHECK(height(J) == 2);
    CHECK(minimal_primes(J).size() == 5);
}

TEST_CASE("fractional invariants of standard graphs") {
    CHECK(fractional_matching_number(Hypergraph::cycle(5)) == Rational(5, 2));
    CHECK(fractional_matching_number(Hypergraph::complete(4)) == 2);
    CHECK(fractional_matching_number(Hypergraph::path(3)) == 1);
    CHECK(*fractional_chromatic(Hypergraph::cycle(5)) == Rational(5, 2));
    CHECK(*fractional_chromatic(Hypergraph::cycle(6)) == 2);
    CHECK(*fractional_chromatic(Hypergraph::complete(4)) == 4);
    CHECK_FALSE(fractional_chromatic(Hypergraph(2, {{0}, {1}})));
}

TEST_CASE("cliques and chordality") {
    auto K4 = Hypergraph::complete(4);
    CHECK(clique_number(K4) == 4);
    CHECK(is_chordal(K4));
    CHECK_FALSE(is_chordal(Hypergraph::cycle(4)));
    CHECK(is_chordal(Hypergraph::path(5)));
    auto G = Hypergraph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {2, 4}});
    CHECK(max_cliques(G) == std::vector<VarSet>{{0, 1, 2}, {2, 3, 4}});
    std::mt19937_64 rng(37);
    for (int t = 0; t < 20; ++t) {
        auto H = oracle::random_chordal(7, rng);
        CHECK(is_chordal(H));
        // a maximal clique is not contained in any other
        auto mc = max_cliques(H);
        for (const auto& a : mc)
            for (const auto& b : mc)
                if (a != b) CHECK_FALSE(std::includes(b.begin(), b.end(), a.begin(), a.end()));
    }
}

TEST_CASE("small graphs up to isomorphism") {
    const std::size_t counts[] = {0, 1, 2, 4, 11, 34, 156};
    for (std::size_t n = 1; n <= 6; ++n) CHECK(oracle::all_graphs(n).size() == counts[n]);
}

TEST_CASE("threshold bounds report") {
    auto b = threshold_bounds_report(Hypergraph::cycle(6));
    CHECK(b.ordinary_threshold == 3);
    CHECK(b.matching_identity);
    CHECK(b.ordinary_ok);
    CHECK(b.symbolic_ok);
    auto c = threshold_bounds_report(Hypergraph::path(4));
    CHECK(c.fractional_matching == 2);
    CHECK(c.ordinary_threshold == 2);
}
