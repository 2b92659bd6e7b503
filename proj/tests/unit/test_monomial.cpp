#include "doctest.h"

#include <random>

#include "fthresh/errors.hpp"
#include "fthresh/monomial.hpp"
#include "oracles.hpp"

using namespace fthresh;

TEST_CASE("rational helpers") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-4/2")) == "-2");
    CHECK(floor(parse_rational("-1/2")) == -1);
    CHECK(ceil(parse_rational("7/5")) == 2);
    CHECK(to_decimal(parse_rational("2/3"), 4) == "0.6666");
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK_THROWS_AS(to_u64(BigInt(-1)), CapabilityError);
}

TEST_CASE("minimal generators and containment") {
    MonomialIdeal I(2, {Monomial{2, 0}, Monomial{1, 1}, Monomial{3, 1}, Monomial{0, 2}});
    CHECK(I.num_generators() == 3);
    CHECK(to_string(I) == "x2^2;x1*x2;x1^2");
    CHECK(I.contains(Monomial{3, 1}));
    CHECK_FALSE(I.contains(Monomial{1, 0}));
    CHECK(MonomialIdeal::maximal(2).contains(I));
    CHECK_FALSE(I.contains(MonomialIdeal::maximal(2)));
    CHECK_THROWS_AS(divides(Monomial{1}, Monomial{1, 1}), DomainError);
    CHECK(MonomialIdeal::zero(3).is_zero());
    CHECK(MonomialIdeal::unit(3).is_unit());
}

TEST_CASE("ideal arithmetic matches the oracle on a grid") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 30; ++t) {
        auto A = oracle::random_ideal(3, 3, 3, rng);
        auto B = oracle::random_ideal(3, 3, 3, rng);
        auto S = A + B, P = A * B, X = A.intersect(B), A2 = A.power(2);
        auto Aq = A.bracket_power(BigInt(2));
        for (const auto& e : oracle::box(3, 7)) {
            auto u = oracle::mono(e);
            bool a = A.contains(u), b = B.contains(u);
            REQUIRE(S.contains(u) == (a || b));
            REQUIRE(X.contains(u) == (a && b));
            bool ab = false;
            for (const auto& g : A.generators())
                for (const auto& h : B.generators()) ab = ab || divides(g * h, u);
            REQUIRE(P.contains(u) == ab);
            REQUIRE(A2.contains(u) == oracle::in_power(A, 2, u));
            bool bq = false;
            for (const auto& g : A.generators()) bq = bq || divides(g.scaled(BigInt(2)), u);
            REQUIRE(Aq.contains(u) == bq);
        }
    }
}

TEST_CASE("colon and saturation") {
    auto I = parse_ideal("x1^2*x2;x2^3", 2);
    auto C = I.colon(Monomial{1, 1});
    CHECK(to_string(C) == "x2^2;x1");
    auto sat = parse_ideal("x1*x2;x1^2", 2).saturate(MonomialIdeal::maximal(2));
    CHECK(to_string(sat) == "x1");
    auto J = parse_ideal("x1*x2;x1*x3", 3).saturate(parse_ideal("x1", 3));
    CHECK(to_string(J) == "x3;x2");
}

TEST_CASE("irreducible decomposition recovers the ideal") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 40; ++t) {
        auto I = oracle::random_ideal(3, 4, 3, rng);
        auto comps = I.irreducible_components();
        for (const auto& e : oracle::box(3, 5)) {
            auto u = oracle::mono(e);
            bool in_all = true;
            for (const auto& c : comps) {
                bool hit = false;
                for (const auto& [j, a] : c) hit = hit || u[j] >= a;
                in_all = in_all && hit;
            }
            REQUIRE(in_all == I.contains(u));
        }
    }
}

TEST_CASE("minimal primes of square-free ideals") {
    auto I = parse_ideal("x1*x2;x2*x3;x1*x3", 3);
    CHECK(minimal_primes(I) == std::vector<VarSet>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(height(I) == 2);
    CHECK(big_height(I) == 2);
    auto mixed = parse_ideal("x1*x2;x1*x3", 3);
    CHECK(height(mixed) == 1);
    CHECK(big_height(mixed) == 2);
    CHECK_THROWS_AS(minimal_primes(parse_ideal("x1^2", 1)), DomainError);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 40; ++t) {
        auto J = oracle::random_squarefree(6, 5, rng);
        std::vector<VarSet> edges;
        for (const auto& g : J.generators()) edges.push_back(g.support());
        REQUIRE(minimal_primes(J) == oracle::covers(6, edges));
    }
}

TEST_CASE("parser") {
    CHECK(to_string(parse_ideal("x1^2*x3; x2")) == "x2;x1^2*x3");
    CHECK(parse_ideal("x1^2*x3; x2").ambient() == 3);
    CHECK(parse_ideal("[[2,0],[0,3]]") == parse_ideal("x1^2;x2^3"));
    CHECK(parse_ideal("[2,0];[0,3]") == parse_ideal("x1^2;x2^3"));
    CHECK(parse_ideal("m", 3) == MonomialIdeal::maximal(3));
    CHECK(parse_ideal("1", 2).is_unit());
    CHECK(parse_ideal("0", 2).is_zero());
    CHECK_THROWS_AS(parse_ideal("m"), ParseError);
    CHECK_THROWS_AS(parse_ideal("x1^2;x4", 3), DomainError);
    try {
        parse_ideal("x1*y2");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position == 3);
        CHECK(e.token == "y2");
    }
}
