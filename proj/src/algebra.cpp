#include "amou/algebra.hpp"

#include <algorithm>
#include <cmath>

namespace amou {

AElement::AElement(Algebra algebra, int level_rows, int level_cols)
    : algebra_(std::move(algebra)), level_rows_(level_rows), level_cols_(level_cols) {
    blocks_.reserve(std::size_t(algebra_.block_count()));
    for (int i = 0; i < algebra_.block_count(); ++i)
        blocks_.emplace_back(level_rows_ * algebra_.block_size(i),
                             level_cols_ * algebra_.block_size(i));
}

AElement AElement::unit(const Algebra& algebra, int level) {
    AElement e(algebra, level, level);
    for (int i = 0; i < algebra.block_count(); ++i)
        e.blocks_[std::size_t(i)] = CMatrix::identity(level * algebra.block_size(i));
    return e;
}

AElement AElement::from_blocks(Algebra algebra, int level_rows, int level_cols,
                               std::vector<CMatrix> blocks) {
    if (int(blocks.size()) != algebra.block_count())
        fail("ShapeMismatch", "from_blocks: block count does not match the algebra");
    for (int i = 0; i < algebra.block_count(); ++i) {
        const CMatrix& b = blocks[std::size_t(i)];
        if (b.rows() != level_rows * algebra.block_size(i) ||
            b.cols() != level_cols * algebra.block_size(i))
            fail("ShapeMismatch", "from_blocks: block shape does not match the level");
    }
    AElement v;
    v.algebra_ = std::move(algebra);
    v.level_rows_ = level_rows;
    v.level_cols_ = level_cols;
    v.blocks_ = std::move(blocks);
    return v;
}

AElement AElement::adjoint() const {
    AElement v(algebra_, level_cols_, level_rows_);
    for (int i = 0; i < block_count(); ++i) v.blocks_[std::size_t(i)] = block(i).adjoint();
    return v;
}

AElement AElement::operator+(const AElement& o) const {
    require_same_algebra(*this, o);
    if (level_rows_ != o.level_rows_ || level_cols_ != o.level_cols_)
        fail("ShapeMismatch", "element addition at different levels");
    AElement v(algebra_, level_rows_, level_cols_);
    for (int i = 0; i < block_count(); ++i)
        v.blocks_[std::size_t(i)] = block(i) + o.block(i);
    return v;
}

AElement AElement::operator-(const AElement& o) const { return *this + (-o); }

AElement AElement::operator-() const { return *this * cplx(-1.0); }

AElement AElement::operator*(cplx s) const {
    AElement v(algebra_, level_rows_, level_cols_);
    for (int i = 0; i < block_count(); ++i) v.blocks_[std::size_t(i)] = block(i) * s;
    return v;
}

AElement AElement::mul(const AElement& o) const {
    require_same_algebra(*this, o);
    if (level_cols_ != o.level_rows_) fail("ShapeMismatch", "element product levels");
    AElement v(algebra_, level_rows_, o.level_cols_);
    for (int i = 0; i < block_count(); ++i)
        v.blocks_[std::size_t(i)] = block(i) * o.block(i);
    return v;
}

AElement AElement::direct_sum(const AElement& u, const AElement& v) {
    require_same_algebra(u, v);
    AElement w(u.algebra_, u.level_rows_ + v.level_rows_, u.level_cols_ + v.level_cols_);
    for (int i = 0; i < u.block_count(); ++i)
        w.blocks_[std::size_t(i)] = CMatrix::direct_sum(u.block(i), v.block(i));
    return w;
}

AElement AElement::hstack(const AElement& u, const AElement& v) {
    require_same_algebra(u, v);
    if (u.level_rows_ != v.level_rows_) fail("ShapeMismatch", "hstack row levels");
    AElement w(u.algebra_, u.level_rows_, u.level_cols_ + v.level_cols_);
    for (int i = 0; i < u.block_count(); ++i) {
        CMatrix& b = w.blocks_[std::size_t(i)];
        b.set_block(0, 0, u.block(i));
        b.set_block(0, u.block(i).cols(), v.block(i));
    }
    return w;
}

AElement AElement::embedded(int rows, int cols) const {
    if (rows < level_rows_ || cols < level_cols_)
        fail("ShapeMismatch", "embedded: target level smaller than current");
    AElement v(algebra_, rows, cols);
    for (int i = 0; i < block_count(); ++i) v.blocks_[std::size_t(i)].set_block(0, 0, block(i));
    return v;
}

AElement AElement::truncated(int rows, int cols) const {
    if (rows > level_rows_ || cols > level_cols_)
        fail("ShapeMismatch", "truncated: target level larger than current");
    AElement v(algebra_, rows, cols);
    for (int i = 0; i < block_count(); ++i) {
        const int ni = algebra_.block_size(i);
        v.blocks_[std::size_t(i)] = block(i).block(0, 0, rows * ni, cols * ni);
    }
    return v;
}

double AElement::frobenius() const {
    double s = 0.0;
    for (const CMatrix& b : blocks_) {
        const double f = b.frobenius();
        s += f * f;
    }
    return std::sqrt(s);
}

double AElement::max_abs() const {
    double m = 0.0;
    for (const CMatrix& b : blocks_) m = std::max(m, b.max_abs());
    return m;
}

bool AElement::is_hermitian(const Tolerance& tol) const {
    if (!square_level()) return false;
    for (const CMatrix& b : blocks_)
        if (b.hermitian_defect() > tol.scaled(b.frobenius())) return false;
    return true;
}

AElement AElement::hermitian_part() const {
    AElement v(algebra_, level_rows_, level_cols_);
    for (int i = 0; i < block_count(); ++i)
        v.blocks_[std::size_t(i)] = block(i).hermitian_part();
    return v;
}

void require_same_algebra(const AElement& u, const AElement& v) {
    if (u.algebra() != v.algebra())
        fail("AlgebraMismatch", "elements live over different algebras");
}

double distance(const AElement& u, const AElement& v) {
    require_same_algebra(u, v);
    if (u.level_rows() != v.level_rows() || u.level_cols() != v.level_cols())
        fail("ShapeMismatch", "distance at different levels");
    double m = 0.0;
    for (int i = 0; i < u.block_count(); ++i)
        m = std::max(m, (u.block(i) - v.block(i)).frobenius());
    return m;
}

bool approx_equal(const AElement& u, const AElement& v, const Tolerance& tol) {
    return distance(u, v) <= tol.scaled(u.frobenius() + v.frobenius());
}

bool is_positive(const AElement& v, const Tolerance& tol) {
    if (!v.square_level()) fail("ShapeMismatch", "is_positive needs a square level");
    for (int i = 0; i < v.block_count(); ++i) {
        const CMatrix& b = v.block(i);
        if (b.rows() == 0) continue;
        const double tau = tol.scaled(b.frobenius());
        if (b.hermitian_defect() > tau) return false;
        const EigDecomp e = hermitian_eig(b, tol);
        if (e.eigenvalues.front() < -tau) return false;
    }
    return true;
}

double min_eigenvalue(const AElement& v, const Tolerance& tol) {
    if (!v.square_level()) fail("ShapeMismatch", "min_eigenvalue needs a square level");
    double m = 0.0;
    bool first = true;
    for (int i = 0; i < v.block_count(); ++i) {
        if (v.block(i).rows() == 0) continue;
        const EigDecomp e = hermitian_eig(v.block(i), tol);
        if (first || e.eigenvalues.front() < m) m = e.eigenvalues.front();
        first = false;
    }
    return m;
}

AElement abs(const AElement& v, const Tolerance& tol) {
    std::vector<CMatrix> blocks;
    blocks.reserve(std::size_t(v.block_count()));
    const bool hermitian = v.square_level() && v.is_hermitian(tol);
    for (int i = 0; i < v.block_count(); ++i)
        blocks.push_back(hermitian ? matrix_abs(v.block(i), tol) : rect_abs(v.block(i), tol));
    return AElement::from_blocks(v.algebra(), v.level_cols(), v.level_cols(), std::move(blocks));
}

AElement scalar_act(const CMatrix& a, const AElement& v, const CMatrix& b) {
    if (a.cols() != v.level_rows() || b.rows() != v.level_cols())
        fail("ShapeMismatch", "scalar_act: shapes do not compose");
    std::vector<CMatrix> blocks;
    blocks.reserve(std::size_t(v.block_count()));
    for (int i = 0; i < v.block_count(); ++i) {
        const CMatrix id = CMatrix::identity(v.algebra().block_size(i));
        blocks.push_back(CMatrix::kron(a, id) * v.block(i) * CMatrix::kron(b, id));
    }
    return AElement::from_blocks(v.algebra(), a.rows(), b.cols(), std::move(blocks));
}

double norm(const AElement& v, const Tolerance& tol) {
    double m = 0.0;
    for (int i = 0; i < v.block_count(); ++i) m = std::max(m, op_norm(v.block(i), tol));
    return m;
}

double norm_order_unit(const AElement& v, const Tolerance& tol) {
    const double bound = norm(v, tol);
    if (bound == 0.0) return 0.0;
    const int m = v.level_rows(), n = v.level_cols();
    const AElement vstar = v.adjoint();

    auto dilation_positive = [&](double k) {
        AElement d(v.algebra(), m + n, m + n);
        for (int i = 0; i < v.block_count(); ++i) {
            const int ni = v.algebra().block_size(i);
            CMatrix& blk = d.block(i);
            blk.set_block(0, 0, CMatrix::identity(m * ni) * cplx(k));
            blk.set_block(0, m * ni, v.block(i));
            blk.set_block(m * ni, 0, vstar.block(i));
            blk.set_block(m * ni, m * ni, CMatrix::identity(n * ni) * cplx(k));
        }
        return is_positive(d, tol);
    };

    double lo = 0.0, hi = 2.0 * bound;
    for (int iter = 0; iter < 40; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (dilation_positive(mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

bool orthogonal(const AElement& u, const AElement& v, const Tolerance& tol) {
    if (!is_positive(u, tol) || !is_positive(v, tol))
        fail("NotPositive", "orthogonal is defined for positive elements");
    const AElement lhs = abs(u - v, tol);
    return distance(lhs, u + v) <= tol.scaled(u.frobenius() + v.frobenius());
}

bool orthogonal_product(const AElement& u, const AElement& v, const Tolerance& tol) {
    if (!is_positive(u, tol) || !is_positive(v, tol))
        fail("NotPositive", "orthogonal_product is defined for positive elements");
    return norm(u.mul(v), tol) <= tol.scaled(u.frobenius() * v.frobenius());
}

bool orthogonal_infty(const AElement& u, const AElement& v, const Tolerance& tol) {
    if (!is_positive(u, tol) || !is_positive(v, tol))
        fail("NotPositive", "orthogonal_infty is defined for positive elements");
    const double nu = norm(u, tol), nv = norm(v, tol);
    if (nu <= tol.eps || nv <= tol.eps)
        fail("ZeroElement", "orthogonal_infty needs nonzero elements");
    const double s = norm(u * cplx(1.0 / nu) + v * cplx(1.0 / nv), tol);
    return s <= 1.0 + tol.scaled(1.0);
}

OrthogonalParts orthogonal_decompose(const AElement& v, const Tolerance& tol) {
    if (!v.is_hermitian(tol)) fail("NotHermitian", "orthogonal_decompose needs v = v*");
    const AElement a = abs(v, tol);
    return OrthogonalParts{(a + v) * cplx(0.5), (a - v) * cplx(0.5)};
}

AElement sqrt_positive(const AElement& v, const Tolerance& tol) {
    std::vector<CMatrix> blocks;
    blocks.reserve(std::size_t(v.block_count()));
    for (int i = 0; i < v.block_count(); ++i) blocks.push_back(sqrt_psd(v.block(i), tol));
    return AElement::from_blocks(v.algebra(), v.level_rows(), v.level_cols(), std::move(blocks));
}

} // namespace amou
