#include "amou/random.hpp"

#include <cmath>

namespace amou {

CMatrix random_cmatrix(RandomGen& rng, int rows, int cols) {
    CMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = rng.cnormal();
    return m;
}

CMatrix random_hermitian(RandomGen& rng, int n) {
    return random_cmatrix(rng, n, n).hermitian_part();
}

CMatrix random_isometry(RandomGen& rng, int rows, int cols) {
    if (cols > rows) fail("ShapeMismatch", "random_isometry needs rows >= cols");
    CMatrix g = random_cmatrix(rng, rows, cols);
    // Two MGS passes; Gaussian columns are never close to dependent at desk scale.
    for (int pass = 0; pass < 2; ++pass) {
        for (int j = 0; j < cols; ++j) {
            for (int k = 0; k < j; ++k) {
                cplx proj = 0.0;
                for (int i = 0; i < rows; ++i) proj += std::conj(g(i, k)) * g(i, j);
                for (int i = 0; i < rows; ++i) g(i, j) -= proj * g(i, k);
            }
            double nrm = 0.0;
            for (int i = 0; i < rows; ++i) nrm += std::norm(g(i, j));
            nrm = std::sqrt(nrm);
            for (int i = 0; i < rows; ++i) g(i, j) = g(i, j) * (1.0 / nrm);
        }
    }
    return g;
}

CMatrix random_unitary(RandomGen& rng, int n) {
    return random_isometry(rng, n, n);
}

} // namespace amou
