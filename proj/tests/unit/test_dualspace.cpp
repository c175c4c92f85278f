// Copyright 2026 The noethops authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "helpers.hpp"

using namespace noethops;
using namespace noethops::testing;

namespace {

std::shared_ptr<const ResidueField<Rational>> origin_field(const RingPtr& R) {
    std::vector<Poly<Rational>> gens;
    for (size_t i = 0; i < R->nvars(); ++i)
        gens.push_back(Poly<Rational>::variable(R, i, Rational(1)));
    return ResidueField<Rational>::make(Ideal<Rational>(R, std::move(gens)));
}

Ideal<Rational> point_ideal(const RingPtr& R, const std::vector<long>& p) {
    std::vector<Poly<Rational>> gens;
    for (size_t i = 0; i < R->nvars(); ++i)
        gens.push_back(Poly<Rational>::variable(R, i, Rational(1)) -
                       Poly<Rational>::constant(R, Rational(p[i])));
    return Ideal<Rational>(R, std::move(gens));
}

LocalOp<Rational> random_local_op(const RingPtr& R, int order,
                                  const std::shared_ptr<const ResidueField<Rational>>& kappa,
                                  RandomSource& rng) {
    LocalOp<Rational> op(R);
    auto monos = monomials_upto(R, order);
    for (const auto& a : monos) {
        long c = rng.below(7) - 3;
        if (c == 0) continue;
        op = op + LocalOp<Rational>::monomial(R, a, kappa->from_base(Rational(c)));
    }
    return op;
}

}  // namespace

TEST_SUITE_BEGIN("dualspace");

TEST_CASE("apply: differentiate then reduce at the point") {
    auto R = ring2();
    auto kappa = origin_field(R);
    auto d1d2 = local_op("d_x1*d_x2", kappa);
    CHECK(apply_op(d1d2, P(R, "x1^2*x2 - x1*x2^2"), *kappa).is_zero());
    CHECK(apply_op(d1d2, P(R, "x1*x2"), *kappa).is_one());

    // order-zero operator is evaluation at the point
    auto mp = point_ideal(R, {2, -1});
    auto kp = ResidueField<Rational>::make(mp);
    auto one_op = local_op("1", kp);
    auto f = P(R, "x1^2*x2 + 3*x1 - 1");   // f(2,-1) = -4 + 6 - 1 = 1
    CHECK(apply_op(one_op, f, *kp) == kp->from_base(Rational(1)));
}

TEST_CASE("apply requires a maximal ideal") {
    auto R = ring2();
    auto I = ideal_of(R, {"x1 - x2^3"});
    CHECK_THROWS_AS(ResidueField<Rational>::make(I), PreconditionError);
    CHECK_THROWS_AS(truncated_dual(ideal_of(R, {"x1"}), I, 1), PreconditionError);
}

TEST_CASE("antidifferentiate is the formal d/d(d_i)") {
    auto R = ring2();
    auto kappa = origin_field(R);
    CHECK(antidifferentiate(local_op("d_x1^2", kappa), 0) == local_op("2*d_x1", kappa));
    CHECK(antidifferentiate(local_op("1", kappa), 0).is_zero());
    CHECK(antidifferentiate(local_op("d_x1*d_x2", kappa), 0) == local_op("d_x2", kappa));
}

TEST_CASE("truncated dual of the paper ideal at order 3") {
    PaperExample ex;
    auto basis = truncated_dual(ex.I, ex.m, 3);
    REQUIRE(basis.dim() == 9);
    std::vector<LocalOp<Rational>> expected;
    for (const char* s : {"1", "d_x1", "d_x2", "d_x1^2", "d_x1*d_x2", "d_x2^2", "d_x1^3",
                          "d_x2^3", "d_x1^2*d_x2 + d_x1*d_x2^2"})
        expected.push_back(local_op(s, basis.kappa));
    CHECK(same_span(basis.ops, expected, *basis.kappa, ex.R, 3));
    for (const auto& op : expected) CHECK(in_dual_span(op, basis));
}

TEST_CASE("every operator of order <= 1 annihilates m^2 at the origin") {
    auto R = ring2();
    auto m = ideal_of(R, {"x1", "x2"});
    auto basis = truncated_dual(ideal_power(m, 2), m, 1);
    REQUIRE(basis.dim() == 3);
    std::vector<LocalOp<Rational>> expected = {local_op("1", basis.kappa),
                                               local_op("d_x1", basis.kappa),
                                               local_op("d_x2", basis.kappa)};
    CHECK(same_span(basis.ops, expected, *basis.kappa, R, 1));
}

TEST_CASE("degenerate ideals: unit gives empty dual, zero gives everything") {
    auto R = ring2();
    auto m = ideal_of(R, {"x1", "x2"});
    CHECK(truncated_dual(ideal_of(R, {"1"}), m, 2).dim() == 0);
    CHECK(truncated_dual(Ideal<Rational>::zero(R), m, 2).dim() == 6);
}

TEST_CASE("annihilator recovers I + m^d") {
    auto R = ring2();
    auto m = ideal_of(R, {"x1", "x2"});

    auto b1 = truncated_dual(ideal_power(m, 2), m, 1);  // {1, d1, d2}
    CHECK(ideal_equal(annihilator_ideal(b1), ideal_power(m, 2)));

    PaperExample ex;
    auto b3 = truncated_dual(ex.I, ex.m, 3);
    CHECK(ideal_equal(annihilator_ideal(b3),
                      ideal_sum(ideal_of(ex.R, {"x1^2*x2 - x1*x2^2"}), ideal_power(ex.m, 4))));

    auto b0 = truncated_dual(m, m, 0);  // {1}
    CHECK(ideal_equal(annihilator_ideal(b0), m));
}

TEST_CASE("stabilization detection") {
    auto R = ring2();
    auto m = ideal_of(R, {"x1", "x2"});
    CHECK(dual_stabilized(ideal_power(m, 2), m, 1));
    CHECK(dual_stabilized(m, m, 0));
    PaperExample ex;
    CHECK(!dual_stabilized(ex.I, ex.m, 3));
    // the paper ideal is not m-primary: the brute dual at order 4 is strictly larger
    CHECK(brute_dual(ex.I, ex.m, 4).dim() > brute_dual(ex.I, ex.m, 3).dim());
}

TEST_CASE("apply is bilinear") {
    auto R = ring2();
    auto kappa = origin_field(R);
    RandomSource rng(53);
    for (int k = 0; k < 30; ++k) {
        auto D = random_local_op(R, 2, kappa, rng);
        auto E = random_local_op(R, 2, kappa, rng);
        auto f = random_poly(R, 3, 4, rng);
        auto g = random_poly(R, 3, 4, rng);
        Rational a(rng.below(7) - 3);
        auto lhs = apply_op(D + E.scaled(kappa->from_base(a)), f, *kappa);
        auto rhs = apply_op(D, f, *kappa) + apply_op(E, f, *kappa) * kappa->from_base(a);
        CHECK(lhs == rhs);
        auto lhs2 = apply_op(D, f + g.scaled(a), *kappa);
        auto rhs2 = apply_op(D, f, *kappa) + apply_op(D, g, *kappa) * kappa->from_base(a);
        CHECK(lhs2 == rhs2);
    }
}

TEST_CASE("right action by (x_i - p_i) is antidifferentiation") {
    auto R = ring2();
    RandomSource rng(59);
    for (const auto& pt : std::vector<std::vector<long>>{{0, 0}, {1, -2}, {3, 5}}) {
        auto mp = point_ideal(R, pt);
        auto kp = ResidueField<Rational>::make(mp);
        for (int k = 0; k < 25; ++k) {
            auto D = random_local_op(R, 3, kp, rng);
            auto f = random_poly(R, 3, 4, rng);
            size_t i = static_cast<size_t>(rng.below(2));
            auto xi = Poly<Rational>::variable(R, i, Rational(1)) -
                      Poly<Rational>::constant(R, Rational(pt[i]));
            CHECK(apply_op(D, xi * f, *kp) == apply_op(antidifferentiate(D, i), f, *kp));
        }
    }
}

TEST_CASE("dual dimension equals quotient dimension of I + m^d") {
    auto R = ring2();
    auto m = ideal_of(R, {"x1", "x2"});
    RandomSource rng(61);
    RandomIdealSpec spec{2, 3, 3, 3, 0};
    for (int round = 0; round < 12; ++round) {
        auto I = random_ideal(spec, R, rng);
        for (int d = 1; d <= 3; ++d) {
            auto dual = truncated_dual(I, m, d - 1);
            auto quot = quotient_basis(ideal_sum(I, ideal_power(m, d)));
            REQUIRE(quot.finite);
            CHECK(dual.dim() == quot.dimension());
            // Lemma round trip
            CHECK(ideal_equal(annihilator_ideal(dual), ideal_sum(I, ideal_power(m, d))));
        }
    }
}

TEST_CASE("dual spaces turn sums into intersections and intersections into sums") {
    auto R = ring2();
    auto m = ideal_of(R, {"x1", "x2"});
    auto kappa = ResidueField<Rational>::make(m);
    LinAlg<ResidueElem<Rational>> la(kappa->zero(), kappa->one());

    auto check_pair = [&](const Ideal<Rational>& I, const Ideal<Rational>& J, int d) {
        auto cols = monomials_upto(R, d);
        auto di = op_rows(truncated_dual(I, m, d, kappa).ops, cols, *kappa);
        auto dj = op_rows(truncated_dual(J, m, d, kappa).ops, cols, *kappa);
        auto dsum = op_rows(truncated_dual(ideal_sum(I, J), m, d, kappa).ops, cols, *kappa);
        auto dint = op_rows(truncated_dual(ideal_intersect(I, J), m, d, kappa).ops, cols, *kappa);
        CHECK(la.span_equal(dsum, la.span_intersect(di, dj)));
        CHECK(la.span_equal(dint, la.span_sum(di, dj)));
    };

    auto I0 = ideal_of(R, {"x1^2"});
    auto J0 = ideal_of(R, {"x2^2"});
    check_pair(I0, J0, 2);
    {
        auto expected = std::vector<LocalOp<Rational>>{
            local_op("1", kappa), local_op("d_x1", kappa), local_op("d_x2", kappa),
            local_op("d_x1*d_x2", kappa)};
        auto got = truncated_dual(ideal_sum(I0, J0), m, 2, kappa);
        CHECK(same_span(got.ops, expected, *kappa, R, 2));
    }
    RandomSource rng(67);
    RandomIdealSpec spec{2, 2, 2, 3, 0};
    for (int round = 0; round < 6; ++round)
        check_pair(random_ideal(spec, R, rng), random_ideal(spec, R, rng), 2);
}

TEST_CASE("truncated duals are nested") {
    auto R = ring2();
    auto m = ideal_of(R, {"x1", "x2"});
    RandomSource rng(71);
    RandomIdealSpec spec{2, 3, 3, 3, 0};
    for (int round = 0; round < 8; ++round) {
        auto I = random_ideal(spec, R, rng);
        for (int d = 0; d <= 2; ++d) {
            auto lo = truncated_dual(I, m, d);
            auto hi = truncated_dual(I, m, d + 1);
            for (const auto& op : lo.ops) CHECK(in_dual_span(op, hi));
        }
    }
}

TEST_SUITE_END();
