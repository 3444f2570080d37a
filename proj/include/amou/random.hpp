#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "amou/cmatrix.hpp"

namespace amou {

// Deterministic generator passed by value/reference, never ambient state.
// mt19937_64 output is pinned by the standard; the distributions are ours, so
// a fixed seed reproduces bit-identical streams on every platform.
class RandomGen {
public:
    explicit RandomGen(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    // Independent stream for a stably-indexed sub-task.
    RandomGen fork(std::uint64_t index) const {
        std::uint64_t x = seed_ * 0x9e3779b97f4a7c15ull + (index + 1) * 0xbf58476d1ce4e5b9ull;
        x ^= x >> 31;
        return RandomGen(x);
    }

    double uniform() { // [0, 1)
        return double(engine_() >> 11) * 0x1.0p-53;
    }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform(); // (0, 1]
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    cplx cnormal() {
        const double re = normal();
        const double im = normal();
        return {re * 0.7071067811865476, im * 0.7071067811865476};
    }

    int uniform_int(int lo, int hi) { // inclusive bounds
        const int span = hi - lo + 1;
        int k = int(uniform() * span);
        if (k >= span) k = span - 1;
        return lo + k;
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

CMatrix random_cmatrix(RandomGen& rng, int rows, int cols);
CMatrix random_hermitian(RandomGen& rng, int n);
// Orthonormal columns (rows >= cols), via modified Gram-Schmidt with one
// re-orthogonalization pass.
CMatrix random_isometry(RandomGen& rng, int rows, int cols);
CMatrix random_unitary(RandomGen& rng, int n);

} // namespace amou
