#pragma once

#include <vector>

#include "amou/cmatrix.hpp"
#include "amou/linalg.hpp"
#include "amou/tolerance.hpp"

namespace amou {

// Finite-dimensional C*-model A = M_{n_1} (+) ... (+) M_{n_k}, given by its
// block sizes. This is the canonical absolute matrix order unit space: the
// order unit is the identity of the algebra and all the absolute-value axioms
// hold as theorems.
struct Algebra {
    std::vector<int> block_sizes;

    int block_count() const { return int(block_sizes.size()); }
    int block_size(int i) const { return block_sizes[std::size_t(i)]; }

    bool operator==(const Algebra& o) const { return block_sizes == o.block_sizes; }
    bool operator!=(const Algebra& o) const { return !(*this == o); }
};

// An element of M_{m,n}(A): for each algebra block i, a complex matrix of
// shape (m n_i) x (n n_i), laid out as an m x n grid of n_i x n_i cells.
class AElement {
public:
    AElement() = default;
    AElement(Algebra algebra, int level_rows, int level_cols); // zero element
    static AElement unit(const Algebra& algebra, int level);   // e^level
    static AElement from_blocks(Algebra algebra, int level_rows, int level_cols,
                                std::vector<CMatrix> blocks);

    const Algebra& algebra() const { return algebra_; }
    int level_rows() const { return level_rows_; }
    int level_cols() const { return level_cols_; }
    bool square_level() const { return level_rows_ == level_cols_; }
    int block_count() const { return int(blocks_.size()); }
    const CMatrix& block(int i) const { return blocks_[std::size_t(i)]; }
    CMatrix& block(int i) { return blocks_[std::size_t(i)]; }

    AElement adjoint() const;
    AElement operator+(const AElement& o) const;
    AElement operator-(const AElement& o) const;
    AElement operator-() const;
    AElement operator*(cplx s) const;
    friend AElement operator*(cplx s, const AElement& v) { return v * s; }
    // Blockwise product, levels (m,n) x (n,s) -> (m,s).
    AElement mul(const AElement& o) const;

    static AElement direct_sum(const AElement& u, const AElement& v);
    static AElement hstack(const AElement& u, const AElement& v); // [u v]
    // Zero-pad lower-right to level (rows, cols).
    AElement embedded(int rows, int cols) const;
    // Drop trailing grid rows/cols down to level (rows, cols).
    AElement truncated(int rows, int cols) const;

    double frobenius() const;
    double max_abs() const;
    bool is_hermitian(const Tolerance& tol) const;
    AElement hermitian_part() const;

private:
    Algebra algebra_;
    int level_rows_ = 0, level_cols_ = 0;
    std::vector<CMatrix> blocks_;
};

void require_same_algebra(const AElement& u, const AElement& v);

// Largest blockwise Frobenius distance between two same-shaped elements.
double distance(const AElement& u, const AElement& v);
bool approx_equal(const AElement& u, const AElement& v, const Tolerance& tol);

// M_n(V)+ membership: every block Hermitian with spectrum >= -scaled tolerance.
bool is_positive(const AElement& v, const Tolerance& tol);
double min_eigenvalue(const AElement& v, const Tolerance& tol);

// |v|: rect_abs blockwise; matrix_abs on square Hermitian input.
AElement abs(const AElement& v, const Tolerance& tol = {});

// a v b for scalar matrices a (r x m), b (n x s): blockwise
// (a (x) I_{n_i}) block_i (b (x) I_{n_i}).
AElement scalar_act(const CMatrix& a, const AElement& v, const CMatrix& b);

// Matrix norm ||v||: max over blocks of the operator norm.
double norm(const AElement& v, const Tolerance& tol = {});

// The order-unit norm inf{ k > 0 : [[k e, v], [v*, k e]] positive }, computed
// by bisection; cross-checks the blockwise operator norm.
double norm_order_unit(const AElement& v, const Tolerance& tol);

// u orthogonal to v: |u - v| = u + v (the definitional check).
bool orthogonal(const AElement& u, const AElement& v, const Tolerance& tol);
// Fast path valid in the C*-model: ||u v|| <= tolerance.
bool orthogonal_product(const AElement& u, const AElement& v, const Tolerance& tol);

// u perp_infty v for positive nonzero u, v: ||u/||u|| + v/||v|||| <= 1 + eps.
bool orthogonal_infty(const AElement& u, const AElement& v, const Tolerance& tol);

struct OrthogonalParts {
    AElement plus;  // (|v| + v)/2
    AElement minus; // (|v| - v)/2
};
OrthogonalParts orthogonal_decompose(const AElement& v, const Tolerance& tol);

// Blockwise positive square root of a positive element.
AElement sqrt_positive(const AElement& v, const Tolerance& tol);

} // namespace amou
