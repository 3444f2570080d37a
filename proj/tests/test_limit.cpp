#include <doctest.h>

#include "amou/limit.hpp"
#include "amou/sampling.hpp"

using namespace amou;

namespace {

const Algebra kM2{{2}};
const Algebra kCplusM2{{1, 2}};

} // namespace

TEST_CASE("FMatrix product rule and norms") {
    const Tolerance tol;
    // e_{ij} e_{kl} = delta_{jk} e_{il}
    CHECK((FMatrix::unit(1, 2) * FMatrix::unit(2, 3)).support().count({1, 3}) == 1);
    CHECK((FMatrix::unit(1, 2) * FMatrix::unit(3, 4)).support().empty());

    const FMatrix jn = FMatrix::shift(2);
    CHECK(jn.order() == 4);
    // J_n J_n* = i_n, J_n* J_n = 0_n (+) i_n
    const FMatrix left = jn * jn.adjoint();
    CHECK(left.support().size() == 2);
    CHECK(left.support().count({1, 1}) == 1);
    CHECK(left.support().count({2, 2}) == 1);
    const FMatrix right = jn.adjoint() * jn;
    CHECK(right.support().count({3, 3}) == 1);
    CHECK(right.support().count({4, 4}) == 1);
    CHECK(right.support().count({1, 1}) == 0);

    CHECK(FMatrix::identity_n(3).norm(tol) == doctest::Approx(1.0));
    CHECK(FMatrix::identity_n(3).is_local_unitary(tol));
    CHECK_FALSE((FMatrix::identity_n(3) * cplx(2.0)).is_local_unitary(tol));
}

TEST_CASE("lift computes the canonical order") {
    const Tolerance tol;
    RandomGen rng(3);

    const AElement v = random_element(rng, kCplusM2, 2, 2);
    const LimitElement lv = lift(v, tol);
    CHECK(lv.order() == 2);

    // v (+) 0_2 is the same limit element as v
    const LimitElement padded = lift(v.embedded(4, 4), tol);
    CHECK(padded.order() == 2);
    CHECK(approx_equal(padded, lv, tol));

    CHECK(lift(AElement(kCplusM2, 3, 3), tol).order() == 0);

    AElement w = random_element(rng, kCplusM2, 3, 3); // generic: nothing trims
    CHECK(lift(w, tol).order() == 3);
}

TEST_CASE("f_act") {
    const Tolerance tol;
    RandomGen rng(5);
    const AElement v = random_element(rng, kCplusM2, 2, 2);
    const LimitElement lv = lift(v, tol);

    SUBCASE("i_n v i_n = v for n >= o(v)") {
        for (int n = lv.order(); n <= lv.order() + 2; ++n) {
            const FMatrix in = FMatrix::identity_n(n);
            CHECK(approx_equal(f_act(in, lv, in, tol), lv, tol));
        }
    }
    SUBCASE("e_11 v e_11 = v for order-1 v") {
        const AElement v1 = random_element(rng, kM2, 1, 1);
        const LimitElement l1 = lift(v1, tol);
        REQUIRE(l1.order() == 1);
        const FMatrix e11 = FMatrix::unit(1, 1);
        CHECK(approx_equal(f_act(e11, l1, e11, tol), l1, tol));
    }
    SUBCASE("conjugation by J_n shifts down the diagonal") {
        const int n = lv.order();
        const FMatrix jn = FMatrix::shift(n);
        const LimitElement shifted = f_act(jn.adjoint(), lv, jn, tol);
        CHECK(shifted.order() == 2 * n);
        // entries live in grid rows/cols n..2n-1: truncating back recovers nothing
        const AElement back = shifted.payload().truncated(n, n);
        CHECK(back.frobenius() == doctest::Approx(0.0));
        // and shifting back recovers v
        CHECK(approx_equal(f_act(jn, shifted, jn.adjoint(), tol), lv, tol));
    }
    SUBCASE("norm inequality ||a v b|| <= ||a|| ||v|| ||b||") {
        for (int trial = 0; trial < 20; ++trial) {
            const FMatrix a = FMatrix::from_corner(random_cmatrix(rng, 3, 3));
            const FMatrix b = FMatrix::from_corner(random_cmatrix(rng, 3, 3));
            const double lhs = limit_norm(f_act(a, lv, b, tol), tol);
            const double rhs = a.norm(tol) * limit_norm(lv, tol) * b.norm(tol);
            CHECK(lhs <= rhs + 1e-7 * (1.0 + rhs));
        }
    }
}

TEST_CASE("abs on the limit") {
    const Tolerance tol;
    RandomGen rng(7);

    SUBCASE("positive fixed point and order drop") {
        const AElement p = random_positive_element(rng, kCplusM2, 2);
        const LimitElement lp = lift(p, tol);
        CHECK(approx_equal(abs(lp, tol), lp, Tolerance{1e-7}));
        const LimitElement lv = lift(random_element(rng, kCplusM2, 2, 2), tol);
        CHECK(abs(lv, tol).order() <= lv.order());
    }
    SUBCASE("local unitary covariance |a* v a| = a* |v| a") {
        const LimitElement lv = lift(random_element(rng, kCplusM2, 2, 2), tol);
        for (int trial = 0; trial < 20; ++trial) {
            const int n = lv.order() + rng.uniform_int(0, 1);
            const FMatrix a = FMatrix::from_corner(random_unitary(rng, n));
            REQUIRE(a.is_local_unitary(tol));
            const LimitElement lhs = abs(f_act(a.adjoint(), lv, a, tol), tol);
            const LimitElement rhs = f_act(a.adjoint(), abs(lv, tol), a, tol);
            CHECK(approx_equal(lhs, rhs, Tolerance{1e-7}));
        }
    }
    SUBCASE("additivity on F-independent elements") {
        const AElement u1 = random_element(rng, kCplusM2, 1, 1);
        const AElement v1 = random_element(rng, kCplusM2, 1, 1);
        const LimitElement u = lift(u1.embedded(1, 1), tol); // supported at {1}
        const FMatrix j1 = FMatrix::shift(1);
        const LimitElement v = f_act(j1.adjoint(), lift(v1, tol), j1, tol); // supported at {2}
        const auto supports = f_independent(u, v, tol);
        REQUIRE(supports.has_value());
        const LimitElement lhs = abs(add(u, v, tol), tol);
        const LimitElement rhs = add(abs(u, tol), abs(v, tol), tol);
        CHECK(approx_equal(lhs, rhs, Tolerance{1e-7}));
    }
}

TEST_CASE("pair_plus and sa_n against direct block construction") {
    const Tolerance tol;
    RandomGen rng(11);
    const int n = 2;
    const AElement v1 = random_positive_element(rng, kCplusM2, n);
    const AElement v2 = random_positive_element(rng, kCplusM2, n);
    const AElement v = random_element(rng, kCplusM2, n, n);
    const LimitElement l1 = lift(v1, tol), l2 = lift(v2, tol), lv = lift(v, tol);

    for (int sign = -1; sign <= 1; sign += 2) {
        const LimitElement sum =
            add(pair_plus(l1, l2, n, tol),
                lift(sa_n(lv, n, tol).payload() * cplx(double(sign)), tol), tol);
        // expected [[v1, +-v],[+-v*, v2]] at level 2n
        AElement expect(kCplusM2, 2 * n, 2 * n);
        const AElement vstar = v.adjoint();
        for (int i = 0; i < expect.block_count(); ++i) {
            const int ni = kCplusM2.block_size(i);
            CMatrix& blk = expect.block(i);
            blk.set_block(0, 0, v1.block(i));
            blk.set_block(0, n * ni, v.block(i) * cplx(double(sign)));
            blk.set_block(n * ni, 0, vstar.block(i) * cplx(double(sign)));
            blk.set_block(n * ni, n * ni, v2.block(i));
        }
        CHECK(approx_equal(sum, lift(expect, tol), Tolerance{1e-9}));
    }

    SUBCASE("trivial cases") {
        const LimitElement e = lift(AElement::unit(kCplusM2, 1), tol);
        const LimitElement ee = pair_plus(e, e, 1, tol);
        CHECK(approx_equal(ee, lift(AElement::unit(kCplusM2, 2), tol), tol));
        CHECK(sa_n(lift(AElement(kCplusM2, 1, 1), tol), 1, tol).order() == 0);
        CHECK_THROWS_WITH_AS(pair_plus(l1, l2, 1, tol), doctest::Contains("LevelTooSmall"), Error);
    }
}

TEST_CASE("limit_norm") {
    const Tolerance tol;
    RandomGen rng(13);

    CHECK(limit_norm(lift(AElement::unit(kCplusM2, 1), tol), tol) == doctest::Approx(1.0));
    CHECK(limit_norm(lift(AElement(kCplusM2, 2, 2), tol), tol) == 0.0);

    SUBCASE("equals the blockwise operator norm; padding invariant") {
        for (int trial = 0; trial < 20; ++trial) {
            const AElement v = random_element(rng, kCplusM2, rng.uniform_int(1, 2), rng.uniform_int(1, 2) == 1 ? 1 : 2);
            const AElement sq = v.square_level() ? v : AElement::direct_sum(v, v.adjoint());
            const LimitElement lv = lift(sq, tol);
            CHECK(limit_norm(lv, tol) == doctest::Approx(norm(sq, tol)).epsilon(1e-7));
            const LimitElement padded = lift(sq.embedded(sq.level_rows() + 2, sq.level_cols() + 2), tol);
            CHECK(limit_norm(padded, tol) == doctest::Approx(limit_norm(lv, tol)).epsilon(1e-9));
        }
    }
}

TEST_CASE("f_independent") {
    const Tolerance tol;
    RandomGen rng(17);
    const AElement v1 = random_element(rng, kM2, 1, 1);

    const LimitElement u = lift(v1, tol);
    const FMatrix j1 = FMatrix::shift(1);
    const LimitElement v = f_act(j1.adjoint(), lift(random_element(rng, kM2, 1, 1), tol), j1, tol);

    const auto pair = f_independent(u, v, tol);
    REQUIRE(pair.has_value());
    CHECK(pair->first.support().count({1, 1}) == 1);
    CHECK(pair->second.support().count({2, 2}) == 1);
    // r u r = u, s v s = v
    CHECK(approx_equal(f_act(pair->first, u, pair->first, tol), u, tol));
    CHECK(approx_equal(f_act(pair->second, v, pair->second, tol), v, tol));

    CHECK_FALSE(f_independent(u, u, tol).has_value());

    SUBCASE("supports with gaps: u at {1,2}, v at {3,5}") {
        const AElement u2 = random_element(rng, kM2, 2, 2);
        AElement gap(kM2, 5, 5);
        // nonzero cells only in grid rows/cols {3,5} (1-based)
        const int ni = kM2.block_size(0);
        const CMatrix cell = random_cmatrix(rng, ni, ni);
        gap.block(0).set_block(2 * ni, 2 * ni, cell);
        gap.block(0).set_block(4 * ni, 4 * ni, cell);
        gap.block(0).set_block(2 * ni, 4 * ni, cell);
        const auto pair = f_independent(lift(u2, tol), lift(gap, tol), tol);
        REQUIRE(pair.has_value());
        CHECK(pair->first.support().size() == 2);
        CHECK(pair->first.support().count({1, 1}) == 1);
        CHECK(pair->first.support().count({2, 2}) == 1);
        CHECK(pair->second.support().size() == 2);
        CHECK(pair->second.support().count({3, 3}) == 1);
        CHECK(pair->second.support().count({5, 5}) == 1);
    }

    SUBCASE("order monotonicity for dominated positive pairs") {
        for (int trial = 0; trial < 25; ++trial) {
            auto [a, b] = random_dominated_pair(rng, kCplusM2, 2, tol);
            // also exercise a strict order drop: pad b by an extra positive slot
            const AElement extra = random_positive_element(rng, kCplusM2, 1);
            const AElement bigger = AElement::direct_sum(b, extra);
            const AElement smaller = a.embedded(3, 3);
            CHECK(lift(a, tol).order() <= lift(b, tol).order());
            CHECK(lift(smaller, tol).order() <= lift(bigger, tol).order());
            CHECK(is_positive(lift(bigger, tol), tol));
        }
    }
}
