// Copyright 2026 The noethops authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"

using namespace noethops;
using namespace noethops::testing;

TEST_SUITE_BEGIN("groebner");

TEST_CASE("single generator is its own reduced basis") {
    auto R = ring2();
    auto gb = groebner_basis(ideal_of(R, {"x1 - x2^3"}), MonomialOrder::lex());
    REQUIRE(gb->size() == 1);
    CHECK((*gb)[0] == P(R, "x1 - x2^3").reordered(MonomialOrder::lex()));
}

TEST_CASE("the paper's Q3 generators are already a reduced basis") {
    auto R = ring2();
    auto I = ideal_of(R, {"x1^3", "x2^3", "x1^2*x2 - x1*x2^2"});
    auto gb = groebner_basis(I);
    REQUIRE(gb->size() == 3);
    for (const auto& g : I.gens())
        CHECK(std::find(gb->begin(), gb->end(), g) != gb->end());
}

TEST_CASE("unit ideal reduces to {1}") {
    auto R = ring2();
    auto gb = groebner_basis(ideal_of(R, {"x1", "x1 - 1"}));
    REQUIRE(gb->size() == 1);
    CHECK((*gb)[0] == P(R, "1"));
    CHECK(groebner_basis(Ideal<Rational>::zero(R))->empty());
}

TEST_CASE("normal form examples") {
    auto R = ring2();
    CHECK(normal_form(P(R, "x1^2*x2 - x1*x2^2"), ideal_of(R, {"x1 - x2^3"}),
                      MonomialOrder::lex()) == P(R, "x2^7 - x2^5"));
    auto f = P(R, "x1^2 + 3*x2 - 1");
    CHECK(normal_form(f, Ideal<Rational>::zero(R)) == f);
    CHECK(normal_form(P(R, "x1^3*x2"), ideal_of(R, {"x1^3"})).is_zero());
}

TEST_CASE("intersection of coprime principal ideals is their product") {
    auto R = ring2();
    auto I = ideal_of(R, {"x1 - x2^3"});
    auto J = ideal_of(R, {"x2 - x1^3"});
    auto inter = ideal_intersect(I, J);
    auto prod = ideal_of(R, {"(x1 - x2^3)*(x2 - x1^3)"});
    CHECK(ideal_equal(inter, prod));
    // two-way membership oracle
    for (const auto& g : inter.gens()) {
        CHECK(brute_membership(g, I));
        CHECK(brute_membership(g, J));
    }
    CHECK(brute_membership(prod.gens()[0], inter));
}

TEST_CASE("saturating the paper ideal at m drops the embedded component") {
    PaperExample ex;
    auto sat = ideal_saturate(ex.I, ex.m);
    CHECK(ideal_equal(sat, ideal_of(ex.R, {"(x1 - x2^3)*(x2 - x1^3)"})));
}

TEST_CASE("colon by an element") {
    auto R = ring2();
    auto I = ideal_of(R, {"x1^2", "x1*x2"});
    auto q = ideal_colon_elt(I, P(R, "x1"));
    CHECK(ideal_equal(q, ideal_of(R, {"x1", "x2"})));
    CHECK_THROWS_AS(ideal_colon_elt(I, Poly<Rational>::zero(R)), PreconditionError);
    CHECK_THROWS_AS(ideal_saturate_elt(I, Poly<Rational>::zero(R)), PreconditionError);
}

TEST_CASE("quotient dimension and standard monomials") {
    PaperExample ex;
    auto q = quotient_basis(ideal_sum(ex.I, ideal_power(ex.m, 4)));
    CHECK(q.finite);
    CHECK(q.dimension() == 9);

    auto q2 = quotient_basis(ex.m);
    CHECK(q2.finite);
    CHECK(q2.dimension() == 1);
    CHECK(q2.monomials[0].is_one());

    auto q3 = quotient_basis(ideal_of(ex.R, {"x1 - x2^3"}));
    CHECK(!q3.finite);

    CHECK(quotient_basis(ideal_of(ex.R, {"1"})).dimension() == 0);
}

TEST_CASE("ideal equality") {
    auto R = ring2();
    CHECK(ideal_equal(ideal_of(R, {"x1", "x2"}), ideal_of(R, {"x2", "x1"})));
    CHECK(!ideal_equal(ideal_of(R, {"x1"}), ideal_of(R, {"x1^2"})));
    PaperExample ex;
    CHECK(ideal_equal(ideal_sum(ex.I, ideal_power(ex.m, 4)),
                      ideal_sum(ideal_of(ex.R, {"x1^2*x2 - x1*x2^2"}), ideal_power(ex.m, 4))));
}

TEST_CASE("Buchberger criterion holds on random ideals") {
    auto R = ring3();
    RandomSource rng(31);
    RandomIdealSpec spec{3, 3, 3, 4, 0};
    for (int round = 0; round < 25; ++round) {
        auto I = random_ideal(spec, R, rng);
        auto gb = groebner_basis(I);
        for (size_t i = 0; i < gb->size(); ++i)
            for (size_t j = i + 1; j < gb->size(); ++j) {
                auto s = detail::s_poly((*gb)[i], (*gb)[j]);
                CHECK(detail::reduce_exact(s, *gb, MonomialOrder::grevlex()).is_zero());
            }
        for (const auto& g : I.gens()) CHECK(normal_form(g, I).is_zero());
    }
}

TEST_CASE("reduced basis is independent of generator order") {
    auto R = ring2();
    RandomSource rng(37);
    RandomIdealSpec spec{2, 4, 3, 4, 0};
    for (int round = 0; round < 15; ++round) {
        auto I = random_ideal(spec, R, rng);
        auto gens = I.gens();
        std::reverse(gens.begin(), gens.end());
        if (gens.size() > 2) std::swap(gens[0], gens[1]);
        Ideal<Rational> J(R, gens);
        auto a = groebner_basis(I);
        auto b = groebner_basis(J);
        REQUIRE(a->size() == b->size());
        for (size_t i = 0; i < a->size(); ++i) CHECK((*a)[i] == (*b)[i]);
    }
}

TEST_CASE("normal form is linear over the field") {
    auto R = ring2();
    auto I = ideal_of(R, {"x1^2 - x2", "x1*x2 - 1"});
    RandomSource rng(41);
    for (int k = 0; k < 40; ++k) {
        auto f = random_poly(R, 4, 5, rng);
        auto g = random_poly(R, 4, 5, rng);
        Rational a(rng.below(9) - 4), b(rng.below(9) - 4);
        auto lhs = normal_form(f.scaled(a) + g.scaled(b), I);
        auto rhs = normal_form(f, I).scaled(a) + normal_form(g, I).scaled(b);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("random generator combinations are members") {
    auto R = ring2();
    RandomSource rng(43);
    RandomIdealSpec spec{2, 3, 3, 4, 0};
    for (int round = 0; round < 20; ++round) {
        auto I = random_ideal(spec, R, rng);
        auto f = Poly<Rational>::zero(R);
        for (const auto& g : I.gens()) f = f + g * random_poly(R, 2, 3, rng);
        CHECK(normal_form(f, I).is_zero());
    }
}

TEST_CASE("saturation is a fixpoint") {
    auto R = ring2();
    PaperExample ex;
    auto s1 = ideal_saturate(ex.I, ex.m);
    auto s2 = ideal_saturate(s1, ex.m);
    CHECK(ideal_equal(s1, s2));
    auto J = ideal_of(R, {"x1^2*x2^2"});
    auto t1 = ideal_saturate(J, ideal_of(R, {"x1"}));
    CHECK(ideal_equal(t1, ideal_of(R, {"x2^2"})));
    CHECK(ideal_equal(ideal_saturate(t1, ideal_of(R, {"x1"})), t1));
}

TEST_CASE("I,m-adic intersection recovers I past the nil index") {
    PaperExample ex;
    auto sat = ideal_saturate(ex.I, ex.m);
    for (int d = 4; d <= 6; ++d) {
        auto trunc = ideal_sum(ex.I, ideal_power(ex.m, d));
        CHECK(ideal_equal(ideal_intersect(sat, trunc), ex.I));
    }
    // below the nil index the intersection is strictly larger
    auto below = ideal_intersect(sat, ideal_sum(ex.I, ideal_power(ex.m, 3)));
    CHECK(!ideal_equal(below, ex.I));
}

TEST_SUITE_END();
