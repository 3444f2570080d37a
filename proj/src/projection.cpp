#include "amou/projection.hpp"

#include <algorithm>
#include <cmath>

namespace amou {

namespace {

// Orthonormal basis of range(p) for one block of a validated projection:
// eigenvector columns with eigenvalue near 1, in the eigensolver's order.
std::vector<std::vector<cplx>> range_basis(const CMatrix& block, const Tolerance& tol) {
    std::vector<std::vector<cplx>> basis;
    if (block.rows() == 0) return basis;
    const EigDecomp e = hermitian_eig(block, tol);
    for (int j = 0; j < block.rows(); ++j) {
        if (e.eigenvalues[std::size_t(j)] <= 0.5) continue;
        std::vector<cplx> col(std::size_t(block.rows()));
        for (int i = 0; i < block.rows(); ++i) col[std::size_t(i)] = e.eigenvectors(i, j);
        basis.push_back(std::move(col));
    }
    return basis;
}

CMatrix projection_onto(const std::vector<std::vector<cplx>>& basis, int dim) {
    CMatrix p(dim, dim);
    for (const auto& x : basis)
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) p(i, j) += x[std::size_t(i)] * std::conj(x[std::size_t(j)]);
    return p.hermitian_part();
}

void verify_witness(const AElement& v, const AElement& p, const AElement& q,
                    const Tolerance& tol) {
    const Tolerance check{std::max(tol.eps, 1e-9)};
    if (!approx_equal(abs(v, tol), q, check) || !approx_equal(abs(v.adjoint(), tol), p, check))
        fail("Internal", "constructed witness fails the definitional equalities");
}

} // namespace

bool is_order_projection(const AElement& v, const Tolerance& tol, double snap_tol) {
    if (!v.square_level()) fail("ShapeMismatch", "order projections live at square levels");
    if (!v.is_hermitian(tol)) return false;
    for (int i = 0; i < v.block_count(); ++i) {
        if (v.block(i).rows() == 0) continue;
        const EigDecomp e = hermitian_eig(v.block(i), tol);
        for (double lambda : e.eigenvalues)
            if (std::abs(lambda) > snap_tol && std::abs(lambda - 1.0) > snap_tol) return false;
    }
    return true;
}

bool projection_identity_holds(const AElement& v, const Tolerance& tol) {
    if (!v.square_level()) fail("ShapeMismatch", "order projections live at square levels");
    if (!v.is_hermitian(tol)) return false;
    const AElement e = AElement::unit(v.algebra(), v.level_rows());
    const AElement lhs = abs(v * cplx(2.0) - e, tol);
    return distance(lhs, e) <= std::max(tol.scaled(1.0 + v.frobenius()), 1e-7);
}

OrderProjection OrderProjection::make(const AElement& v, const Tolerance& tol, double snap_tol) {
    if (!is_order_projection(v, tol, snap_tol))
        fail("NotProjection", "element is not an order projection");
    AElement snapped(v.algebra(), v.level_rows(), v.level_cols());
    for (int i = 0; i < v.block_count(); ++i)
        snapped.block(i) = projection_onto(range_basis(v.block(i), tol), v.block(i).rows());
    return OrderProjection(std::move(snapped));
}

OrderProjection OrderProjection::zero(const Algebra& algebra, int level) {
    return OrderProjection(AElement(algebra, level, level));
}

OrderProjection OrderProjection::unit(const Algebra& algebra, int level) {
    return OrderProjection(AElement::unit(algebra, level));
}

OrderProjection OrderProjection::direct_sum(const OrderProjection& p, const OrderProjection& q) {
    return OrderProjection(AElement::direct_sum(p.p_, q.p_));
}

OrderProjection OrderProjection::padded(int level) const {
    if (level < this->level()) fail("ShapeMismatch", "padded below current level");
    return OrderProjection(p_.embedded(level, level));
}

std::vector<int> rank_vector(const OrderProjection& p, const Tolerance& tol) {
    std::vector<int> ranks;
    ranks.reserve(std::size_t(p.element().block_count()));
    for (int i = 0; i < p.element().block_count(); ++i) {
        const CMatrix& b = p.element().block(i);
        int r = 0;
        if (b.rows() > 0) {
            const EigDecomp e = hermitian_eig(b, tol);
            for (double lambda : e.eigenvalues)
                if (lambda > 0.5 && lambda < 1.5) ++r;
        }
        ranks.push_back(r);
    }
    return ranks;
}

PartialIsometry PartialIsometry::make(const AElement& v, const Tolerance& tol, double snap_tol) {
    if (!is_partial_isometry(v, tol, snap_tol))
        fail("NotProjection", "|v| or |v*| is not an order projection");
    return PartialIsometry{v};
}

bool is_partial_isometry(const AElement& v, const Tolerance& tol, double snap_tol) {
    return is_order_projection(abs(v, tol), tol, snap_tol) &&
           is_order_projection(abs(v.adjoint(), tol), tol, snap_tol);
}

std::optional<EquivWitness> equivalent(const OrderProjection& p, const OrderProjection& q,
                                       const Tolerance& tol) {
    if (p.algebra() != q.algebra()) fail("AlgebraMismatch", "projections over different algebras");
    const int level = std::max(p.level(), q.level());
    const OrderProjection pp = p.padded(level), qq = q.padded(level);
    if (rank_vector(pp, tol) != rank_vector(qq, tol)) return std::nullopt;

    AElement v(p.algebra(), level, level);
    for (int i = 0; i < v.block_count(); ++i) {
        const auto xs = range_basis(pp.element().block(i), tol);
        const auto ys = range_basis(qq.element().block(i), tol);
        const int dim = v.block(i).rows();
        CMatrix blk(dim, dim);
        for (std::size_t j = 0; j < xs.size(); ++j)
            for (int r = 0; r < dim; ++r)
                for (int c = 0; c < dim; ++c)
                    blk(r, c) += xs[j][std::size_t(r)] * std::conj(ys[j][std::size_t(c)]);
        v.block(i) = blk;
    }
    verify_witness(v, pp.element(), qq.element(), tol);
    return EquivWitness{v, level, level - p.level(), level - q.level()};
}

std::optional<std::pair<int, EquivWitness>> stably_equivalent(const OrderProjection& p,
                                                              const OrderProjection& q,
                                                              const Tolerance& tol) {
    if (p.algebra() != q.algebra()) fail("AlgebraMismatch", "projections over different algebras");
    {
        const int level = std::max(p.level(), q.level());
        if (rank_vector(p.padded(level), tol) != rank_vector(q.padded(level), tol))
            return std::nullopt;
    }
    const OrderProjection e1 = OrderProjection::unit(p.algebra(), 1);
    auto witness = equivalent(OrderProjection::direct_sum(p, e1),
                              OrderProjection::direct_sum(q, e1), tol);
    if (!witness) fail("Internal", "rank oracle and stabilized witness disagree");
    return std::make_pair(1, *witness);
}

PartialIsometry condition_T_witness(const PartialIsometry& u, const PartialIsometry& v,
                                    const Tolerance& tol) {
    require_same_algebra(u.element, v.element);
    if (u.element.level_cols() != v.element.level_cols())
        fail("PreconditionFailed", "condition (T) needs matching column levels");
    const AElement au = abs(u.element, tol), av = abs(v.element, tol);
    if (!approx_equal(au, av, Tolerance{std::max(tol.eps, 1e-7)}))
        fail("PreconditionFailed", "condition (T) needs |u| = |v|");

    AElement w(u.element.algebra(), u.element.level_rows(), v.element.level_rows());
    for (int i = 0; i < w.block_count(); ++i) {
        const CMatrix wu = polar(u.element.block(i), tol).isometry;
        const CMatrix wv = polar(v.element.block(i), tol).isometry;
        w.block(i) = wu * wv.adjoint();
    }
    return PartialIsometry::make(w, tol);
}

bool is_finite(const OrderProjection& p, RandomGen& rng, const Tolerance& tol, int trials) {
    const std::vector<int> full = rank_vector(p, tol);
    for (int trial = 0; trial < trials; ++trial) {
        // random sub-projection: rotate the range basis, keep a random prefix
        AElement q(p.algebra(), p.level(), p.level());
        for (int i = 0; i < q.block_count(); ++i) {
            const auto xs = range_basis(p.element().block(i), tol);
            const int d = int(xs.size());
            const int dim = q.block(i).rows();
            if (d == 0) continue;
            const CMatrix rot = random_unitary(rng, d);
            const int keep = rng.uniform_int(0, d);
            std::vector<std::vector<cplx>> ys;
            for (int c = 0; c < keep; ++c) {
                std::vector<cplx> y(std::size_t(dim), cplx(0.0));
                for (int j = 0; j < d; ++j)
                    for (int r = 0; r < dim; ++r)
                        y[std::size_t(r)] += xs[std::size_t(j)][std::size_t(r)] * rot(j, c);
                ys.push_back(std::move(y));
            }
            q.block(i) = projection_onto(ys, dim);
        }
        const OrderProjection sub = OrderProjection::make(q, tol);
        if (rank_vector(sub, tol) == full) {
            // q ~ p and q <= p must force q = p
            if (!approx_equal(sub.element(), p.element(), Tolerance{std::max(tol.eps, 1e-7)}))
                return false;
        }
    }
    return true;
}

EquivWitness swap_witness(const OrderProjection& p, const OrderProjection& q,
                          const Tolerance& tol) {
    if (p.algebra() != q.algebra()) fail("AlgebraMismatch", "projections over different algebras");
    const int m = p.level(), n = q.level();
    const AElement pq = AElement::direct_sum(p.element(), q.element());
    // permutation with blocks [[0, I_m],[I_n, 0]]: conjugation turns p(+)q into q(+)p
    CMatrix pi(m + n, m + n);
    for (int r = 0; r < m; ++r) pi(r, n + r) = 1.0;
    for (int s = 0; s < n; ++s) pi(m + s, s) = 1.0;
    const AElement v = scalar_act(CMatrix::identity(m + n), pq, pi);
    verify_witness(v, pq, AElement::direct_sum(q.element(), p.element()), tol);
    return EquivWitness{v, m + n, 0, 0};
}

AElement orthogonal_sum_witness(const OrderProjection& p, const OrderProjection& q,
                                const Tolerance& tol) {
    if (p.level() != q.level()) fail("ShapeMismatch", "orthogonal sum needs one level");
    if (!orthogonal(p.element(), q.element(), tol))
        fail("PreconditionFailed", "orthogonal_sum_witness needs p perp q");
    const AElement v = AElement::hstack(p.element(), q.element());
    verify_witness(v, p.element() + q.element(),
                   AElement::direct_sum(p.element(), q.element()), tol);
    return v;
}

} // namespace amou
