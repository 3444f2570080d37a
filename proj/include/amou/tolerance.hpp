#pragma once

namespace amou {

// Single tolerance policy, passed explicitly. Comparisons against a matrix of
// Frobenius norm f use scaled(f) = eps * (1 + f); norm comparisons use eps as is.
struct Tolerance {
    double eps = 1e-9;

    double scaled(double frobenius) const { return eps * (1.0 + frobenius); }
};

} // namespace amou
