#include "amou/sampling.hpp"

namespace amou {

AElement random_element(RandomGen& rng, const Algebra& a, int level_rows, int level_cols) {
    AElement v(a, level_rows, level_cols);
    for (int i = 0; i < a.block_count(); ++i)
        v.block(i) = random_cmatrix(rng, v.block(i).rows(), v.block(i).cols());
    return v;
}

AElement random_hermitian_element(RandomGen& rng, const Algebra& a, int level) {
    return random_element(rng, a, level, level).hermitian_part();
}

AElement random_positive_element(RandomGen& rng, const Algebra& a, int level) {
    const AElement w = random_element(rng, a, level, level);
    return w.adjoint().mul(w).hermitian_part();
}

AElement random_positive_contraction(RandomGen& rng, const Algebra& a, int level) {
    const AElement p = random_positive_element(rng, a, level);
    const double n = norm(p);
    const double target = 0.05 + 0.9 * rng.uniform();
    return p * cplx(n > 0.0 ? target / n : 0.0);
}

AElement random_projection_element(RandomGen& rng, const Algebra& a, int level) {
    AElement p(a, level, level);
    for (int i = 0; i < a.block_count(); ++i) {
        const int dim = level * a.block_size(i);
        const CMatrix u = random_unitary(rng, dim);
        const int rank = rng.uniform_int(0, dim);
        CMatrix blk(dim, dim);
        for (int c = 0; c < rank; ++c)
            for (int r1 = 0; r1 < dim; ++r1)
                for (int r2 = 0; r2 < dim; ++r2)
                    blk(r1, r2) += u(r1, c) * std::conj(u(r2, c));
        p.block(i) = blk.hermitian_part();
    }
    return p;
}

std::pair<AElement, AElement> random_orthogonal_positives(RandomGen& rng, const Algebra& a,
                                                          int level) {
    AElement u(a, level, level), v(a, level, level);
    for (int i = 0; i < a.block_count(); ++i) {
        const int dim = level * a.block_size(i);
        const CMatrix q = random_unitary(rng, dim);
        const int split = dim >= 2 ? rng.uniform_int(1, dim - 1) : rng.uniform_int(0, 1);
        std::vector<double> du(std::size_t(dim), 0.0), dv(std::size_t(dim), 0.0);
        for (int s = 0; s < dim; ++s) {
            const double val = 0.1 + std::abs(rng.normal());
            (s < split ? du : dv)[std::size_t(s)] = val;
        }
        u.block(i) = (q * CMatrix::diag(du) * q.adjoint()).hermitian_part();
        v.block(i) = (q * CMatrix::diag(dv) * q.adjoint()).hermitian_part();
    }
    return {u, v};
}

std::pair<AElement, AElement> random_dominated_pair(RandomGen& rng, const Algebra& a, int level,
                                                    const Tolerance& tol) {
    const AElement v = random_positive_element(rng, a, level);
    const AElement c = random_positive_contraction(rng, a, level);
    const AElement r = sqrt_positive(v, tol);
    const AElement u = r.mul(c).mul(r).hermitian_part();
    return {u, v};
}

} // namespace amou
