#pragma once

#include <vector>

#include "amou/cmatrix.hpp"
#include "amou/tolerance.hpp"

namespace amou {

// Eigendecomposition of a Hermitian matrix: eigenvalues ascending, columns of
// `eigenvectors` an orthonormal eigenbasis, M = U diag(lambda) U*.
struct EigDecomp {
    std::vector<double> eigenvalues;
    CMatrix eigenvectors;
};

struct PolarDecomp {
    CMatrix isometry; // partial-isometry factor w, m x n
    CMatrix positive; // (v* v)^(1/2), n x n
};

// Cyclic Jacobi. Throws NotHermitian / NoConvergence.
EigDecomp hermitian_eig(const CMatrix& m, const Tolerance& tol = {});

// |M| = U diag(|lambda|) U* for Hermitian M.
CMatrix matrix_abs(const CMatrix& m, const Tolerance& tol = {});

// Positive square root with eigenvalue clamping; eigenvalues below -scaled
// tolerance raise NotPositive.
CMatrix sqrt_psd(const CMatrix& m, const Tolerance& tol = {});

// |v| = (v* v)^(1/2) for rectangular v.
CMatrix rect_abs(const CMatrix& v, const Tolerance& tol = {});

// v = w |v| with w* w the support projection of |v|. Singular values below
// 0.5 * scaled tolerance count as kernel.
PolarDecomp polar(const CMatrix& v, const Tolerance& tol = {});

// Largest singular value.
double op_norm(const CMatrix& m, const Tolerance& tol = {});

} // namespace amou
