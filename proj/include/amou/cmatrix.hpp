#pragma once

#include <complex>
#include <vector>

#include "amou/errors.hpp"

namespace amou {

using cplx = std::complex<double>;

// Dense complex matrix, row-major. Values are immutable in spirit: every
// operation returns a fresh matrix. Zero-dimensional matrices are legal and
// behave as empty sums.
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}

    static CMatrix identity(int n);
    static CMatrix diag(const std::vector<double>& d);
    static CMatrix direct_sum(const CMatrix& a, const CMatrix& b);
    static CMatrix kron(const CMatrix& a, const CMatrix& b);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    cplx& operator()(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
    const cplx& operator()(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

    CMatrix adjoint() const;
    CMatrix block(int row0, int col0, int nrows, int ncols) const;
    void set_block(int row0, int col0, const CMatrix& b);

    double frobenius() const;
    double max_abs() const;
    // Frobenius norm of M - M*.
    double hermitian_defect() const;
    CMatrix hermitian_part() const; // (M + M*) / 2

    CMatrix operator+(const CMatrix& o) const;
    CMatrix operator-(const CMatrix& o) const;
    CMatrix operator-() const;
    CMatrix operator*(const CMatrix& o) const;
    CMatrix operator*(cplx s) const;
    friend CMatrix operator*(cplx s, const CMatrix& m) { return m * s; }

    bool same_shape(const CMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<cplx> a_;
};

} // namespace amou
