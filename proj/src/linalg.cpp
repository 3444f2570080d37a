#include "amou/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace amou {

namespace {

double offdiag_frobenius(const CMatrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

constexpr int kMaxSweeps = 100;
constexpr double kOffdiagEps = 1e-12;

} // namespace

EigDecomp hermitian_eig(const CMatrix& m, const Tolerance& tol) {
    if (m.rows() != m.cols()) fail("ShapeMismatch", "hermitian_eig needs a square matrix");
    const int n = m.rows();
    const double fro = m.frobenius();
    if (m.hermitian_defect() > tol.scaled(fro))
        fail("NotHermitian", "hermitian_eig: ||M - M*|| exceeds tolerance");

    CMatrix a = m.hermitian_part();
    CMatrix v = CMatrix::identity(n);
    const double thresh = kOffdiagEps * (1.0 + fro);

    bool converged = n < 2;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        if (offdiag_frobenius(a) <= thresh) {
            converged = true;
            break;
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag == 0.0) continue;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * mag);
                double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0.0) t = -t;
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const cplx phase = apq / mag;

                // A <- R* A R with R the identity outside rows/cols p,q and
                // R(p,p)=c, R(p,q)=s*phase, R(q,p)=-s*conj(phase), R(q,q)=c.
                for (int j = 0; j < n; ++j) {
                    const cplx xp = a(p, j), xq = a(q, j);
                    a(p, j) = c * xp - s * phase * xq;
                    a(q, j) = s * std::conj(phase) * xp + c * xq;
                }
                for (int i = 0; i < n; ++i) {
                    const cplx xp = a(i, p), xq = a(i, q);
                    a(i, p) = c * xp - s * std::conj(phase) * xq;
                    a(i, q) = s * phase * xp + c * xq;
                    const cplx vp = v(i, p), vq = v(i, q);
                    v(i, p) = c * vp - s * std::conj(phase) * vq;
                    v(i, q) = s * phase * vp + c * vq;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }
    if (!converged && offdiag_frobenius(a) > thresh)
        fail("NoConvergence", "hermitian_eig: Jacobi sweep cap exceeded");

    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&a](int i, int j) { return a(i, i).real() < a(j, j).real(); });

    EigDecomp out;
    out.eigenvalues.resize(std::size_t(n));
    out.eigenvectors = CMatrix(n, n);
    for (int j = 0; j < n; ++j) {
        out.eigenvalues[std::size_t(j)] = a(idx[std::size_t(j)], idx[std::size_t(j)]).real();
        for (int i = 0; i < n; ++i) out.eigenvectors(i, j) = v(i, idx[std::size_t(j)]);
    }
    return out;
}

namespace {

// U diag(lambda) U*, symmetrized against roundoff.
CMatrix rebuild(const EigDecomp& e, const std::vector<double>& lambda) {
    CMatrix m = e.eigenvectors * CMatrix::diag(lambda) * e.eigenvectors.adjoint();
    return m.hermitian_part();
}

} // namespace

CMatrix matrix_abs(const CMatrix& m, const Tolerance& tol) {
    EigDecomp e = hermitian_eig(m, tol);
    std::vector<double> lambda = e.eigenvalues;
    for (double& x : lambda) x = std::abs(x);
    return rebuild(e, lambda);
}

CMatrix sqrt_psd(const CMatrix& m, const Tolerance& tol) {
    EigDecomp e = hermitian_eig(m, tol);
    const double tau = tol.scaled(m.frobenius());
    std::vector<double> lambda = e.eigenvalues;
    for (double& x : lambda) {
        if (x < -tau) fail("NotPositive", "sqrt_psd: eigenvalue below -tolerance");
        x = std::sqrt(std::max(x, 0.0));
    }
    return rebuild(e, lambda);
}

CMatrix rect_abs(const CMatrix& v, const Tolerance& tol) {
    const int m = v.rows(), n = v.cols();
    if (n == 0 || m == 0) return CMatrix(n, n);
    // (v* v)^(1/2) through the dilation [[0, v],[v*, 0]]: |H| is
    // (v v*)^(1/2) (+) (v* v)^(1/2), and the eigenvalues +-sigma carry no
    // square-root noise amplification near the kernel.
    CMatrix h(m + n, m + n);
    h.set_block(0, m, v);
    h.set_block(m, 0, v.adjoint());
    EigDecomp e = hermitian_eig(h, tol);
    std::vector<double> lambda = e.eigenvalues;
    for (double& x : lambda) x = std::abs(x);
    return rebuild(e, lambda).block(m, m, n, n).hermitian_part();
}

PolarDecomp polar(const CMatrix& v, const Tolerance& tol) {
    const int m = v.rows(), n = v.cols();
    // Eigenpairs of the Hermitian dilation [[0, v],[v*, 0]] are (+-sigma,
    // (a; +-b)) with a, b matched singular vectors scaled by 1/sqrt(2). This
    // keeps the kernel cutoff honest: sigma enters linearly, not as a square
    // root of Gram-matrix noise, and no division by small sigma occurs.
    CMatrix h(m + n, m + n);
    h.set_block(0, m, v);
    h.set_block(m, 0, v.adjoint());
    EigDecomp e = hermitian_eig(h, tol);

    const double cut = 0.5 * tol.scaled(v.frobenius());
    CMatrix w(m, n);
    CMatrix p(n, n);
    for (int j = 0; j < m + n; ++j) {
        const double sigma = e.eigenvalues[std::size_t(j)];
        if (sigma <= cut) continue;
        for (int i = 0; i < m; ++i) {
            const cplx ai = e.eigenvectors(i, j);
            if (ai == cplx(0.0)) continue;
            for (int k = 0; k < n; ++k)
                w(i, k) += 2.0 * ai * std::conj(e.eigenvectors(m + k, j));
        }
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l)
                p(k, l) += 2.0 * sigma * e.eigenvectors(m + k, j) *
                           std::conj(e.eigenvectors(m + l, j));
    }
    return PolarDecomp{w, p.hermitian_part()};
}

double op_norm(const CMatrix& m, const Tolerance& tol) {
    if (m.rows() == 0 || m.cols() == 0) return 0.0;
    const CMatrix gram = (m.adjoint() * m).hermitian_part();
    EigDecomp e = hermitian_eig(gram, tol);
    return std::sqrt(std::max(e.eigenvalues.back(), 0.0));
}

} // namespace amou
