#include <doctest.h>

#include "amou/projection.hpp"
#include "amou/sampling.hpp"

using namespace amou;

namespace {

const Algebra kM2{{2}};
const Algebra kCplusM2{{1, 2}};

AElement m2_diag(double a, double d) {
    AElement v(kM2, 1, 1);
    v.block(0)(0, 0) = a;
    v.block(0)(1, 1) = d;
    return v;
}

} // namespace

TEST_CASE("order projection membership") {
    const Tolerance tol;
    CHECK(is_order_projection(AElement(kCplusM2, 2, 2), tol));
    CHECK(is_order_projection(AElement::unit(kCplusM2, 2), tol));
    CHECK_FALSE(is_order_projection(AElement::unit(kM2, 1) * cplx(0.5), tol));
    CHECK_FALSE(is_order_projection(m2_diag(1.0, 0.3), tol));

    SUBCASE("spectral route agrees with the |2p - e| = e identity") {
        RandomGen rng(3);
        for (int t = 0; t < 40; ++t) {
            const AElement p = random_projection_element(rng, kCplusM2, rng.uniform_int(1, 2));
            CHECK(is_order_projection(p, tol));
            CHECK(projection_identity_holds(p, tol));
            const AElement h = random_positive_contraction(rng, kCplusM2, 1);
            CHECK(is_order_projection(h, tol) == projection_identity_holds(h, tol));
        }
    }
    SUBCASE("a widened snap threshold breaks the agreement") {
        const AElement mid = m2_diag(1.0, 0.3);
        CHECK(is_order_projection(mid, tol, 0.4)); // corrupted membership
        CHECK_FALSE(projection_identity_holds(mid, tol));
    }
    SUBCASE("make snaps to the exact spectral projection") {
        RandomGen rng(5);
        AElement noisy = random_projection_element(rng, kM2, 2);
        noisy.block(0)(0, 0) += 3e-8; // within snap distance
        const OrderProjection p = OrderProjection::make(noisy, tol);
        const AElement sq = p.element().mul(p.element());
        CHECK(distance(sq, p.element()) < 1e-13);
    }
    SUBCASE("rejects non-projections") {
        CHECK_THROWS_WITH_AS(OrderProjection::make(m2_diag(1.0, 0.3), tol),
                             doctest::Contains("NotProjection"), Error);
    }
}

TEST_CASE("rank_vector") {
    const Tolerance tol;
    const auto re = rank_vector(OrderProjection::unit(kCplusM2, 1), tol);
    CHECK(re == std::vector<int>{1, 2});
    const auto rz = rank_vector(OrderProjection::zero(kCplusM2, 2), tol);
    CHECK(rz == std::vector<int>{0, 0});
    const auto rp = rank_vector(OrderProjection::make(m2_diag(1.0, 0.0), tol), tol);
    CHECK(rp == std::vector<int>{1});
}

TEST_CASE("equivalent") {
    const Tolerance tol;
    const OrderProjection p = OrderProjection::make(m2_diag(1.0, 0.0), tol);
    const OrderProjection q = OrderProjection::make(m2_diag(0.0, 1.0), tol);
    const OrderProjection e = OrderProjection::unit(kM2, 1);

    SUBCASE("reflexive with witness p itself") {
        const auto w = equivalent(p, p, tol);
        REQUIRE(w.has_value());
        CHECK(approx_equal(abs(p.element(), tol), p.element(), tol));
    }
    SUBCASE("diag(1,0) ~ diag(0,1) with the matrix-unit witness") {
        const auto w = equivalent(p, q, tol);
        REQUIRE(w.has_value());
        CMatrix e12(2, 2);
        e12(0, 1) = 1.0;
        CHECK((w->v.block(0) - e12).frobenius() < 1e-12);
        CHECK(approx_equal(abs(w->v, tol), q.element(), tol));
        CHECK(approx_equal(abs(w->v.adjoint(), tol), p.element(), tol));
    }
    SUBCASE("rank mismatch yields no witness") {
        CHECK_FALSE(equivalent(p, e, tol).has_value());
    }
    SUBCASE("level padding") {
        const OrderProjection p3 = OrderProjection::make(p.element().embedded(3, 3), tol);
        const auto w = equivalent(p, p3, tol);
        REQUIRE(w.has_value());
        CHECK(w->level == 3);
        CHECK(w->pad_p == 2);
        CHECK(w->pad_q == 0);
    }
}

TEST_CASE("stably_equivalent") {
    const Tolerance tol;
    const OrderProjection p = OrderProjection::make(m2_diag(1.0, 0.0), tol);
    const OrderProjection e = OrderProjection::unit(kM2, 1);

    SUBCASE("p ~~ p (+) 0") {
        const OrderProjection padded = p.padded(3);
        const auto w = stably_equivalent(p, padded, tol);
        REQUIRE(w.has_value());
        CHECK(w->first == 1);
    }
    SUBCASE("p perp q gives p + q ~~ p (+) q") {
        RandomGen rng(11);
        for (int t = 0; t < 10; ++t) {
            // disjoint spans of one random unitary
            const CMatrix u = random_unitary(rng, 4);
            const int r1 = rng.uniform_int(0, 4);
            const int r2 = rng.uniform_int(0, 4 - r1);
            auto span = [&](int from, int count) {
                CMatrix blk(4, 4);
                for (int c = from; c < from + count; ++c)
                    for (int x = 0; x < 4; ++x)
                        for (int y = 0; y < 4; ++y) blk(x, y) += u(x, c) * std::conj(u(y, c));
                return AElement::from_blocks(kM2, 2, 2, {blk.hermitian_part()});
            };
            const OrderProjection pp = OrderProjection::make(span(0, r1), tol);
            const OrderProjection qq = OrderProjection::make(span(r1, r2), tol);
            const OrderProjection sum = OrderProjection::make(pp.element() + qq.element(), tol);
            const auto w = stably_equivalent(sum, OrderProjection::direct_sum(pp, qq), tol);
            REQUIRE(w.has_value());
            CHECK(w->first == 1);
            const AElement row = orthogonal_sum_witness(pp, qq, tol);
            CHECK(approx_equal(abs(row, tol),
                               AElement::direct_sum(pp.element(), qq.element()), Tolerance{1e-7}));
        }
    }
    SUBCASE("rank mismatch") {
        CHECK_FALSE(stably_equivalent(p, e, tol).has_value());
    }
}

TEST_CASE("condition (T) witness") {
    const Tolerance tol;
    CMatrix e12(2, 2), e22(2, 2), e11(2, 2);
    e12(0, 1) = 1.0;
    e22(1, 1) = 1.0;
    e11(0, 0) = 1.0;
    const AElement u = AElement::from_blocks(kM2, 1, 1, {e12});
    const AElement v = AElement::from_blocks(kM2, 1, 1, {e22});

    SUBCASE("u = e12, v = e22 gives w = e12") {
        const PartialIsometry pu = PartialIsometry::make(u, tol);
        const PartialIsometry pv = PartialIsometry::make(v, tol);
        const PartialIsometry w = condition_T_witness(pu, pv, tol);
        CHECK((w.element.block(0) - e12).frobenius() < 1e-12);
        CHECK(approx_equal(abs(w.element.adjoint(), tol), abs(u.adjoint(), tol), tol));
        CHECK(approx_equal(abs(w.element, tol), abs(v.adjoint(), tol), tol));
    }
    SUBCASE("v = u") {
        const PartialIsometry pu = PartialIsometry::make(u, tol);
        const PartialIsometry w = condition_T_witness(pu, pu, tol);
        CHECK(approx_equal(abs(w.element, tol), abs(u.adjoint(), tol), tol));
        CHECK(approx_equal(abs(w.element.adjoint(), tol), abs(u.adjoint(), tol), tol));
    }
    SUBCASE("mismatched absolute values are rejected") {
        const PartialIsometry pu = PartialIsometry::make(u, tol);
        const PartialIsometry pw =
            PartialIsometry::make(AElement::from_blocks(kM2, 1, 1, {e11}), tol);
        CHECK_THROWS_WITH_AS(condition_T_witness(pu, pw, tol),
                             doctest::Contains("PreconditionFailed"), Error);
    }
}

TEST_CASE("finiteness") {
    const Tolerance tol;
    RandomGen rng(17);
    CHECK(is_finite(OrderProjection::unit(kM2, 1), rng, tol));
    for (int n = 1; n <= 4; ++n) CHECK(is_finite(OrderProjection::unit(kCplusM2, n), rng, tol, 8));
    CHECK(is_finite(OrderProjection::zero(kM2, 2), rng, tol));
}

TEST_CASE("structured witnesses") {
    const Tolerance tol;
    RandomGen rng(23);
    for (int t = 0; t < 10; ++t) {
        const OrderProjection p = OrderProjection::make(
            random_projection_element(rng, kCplusM2, rng.uniform_int(1, 2)), tol);
        const OrderProjection q = OrderProjection::make(
            random_projection_element(rng, kCplusM2, rng.uniform_int(1, 2)), tol);
        const EquivWitness w = swap_witness(p, q, tol);
        CHECK(approx_equal(abs(w.v, tol),
                           AElement::direct_sum(q.element(), p.element()), Tolerance{1e-7}));
    }
}
