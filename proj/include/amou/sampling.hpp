#pragma once

#include <utility>

#include "amou/algebra.hpp"
#include "amou/random.hpp"

namespace amou {

AElement random_element(RandomGen& rng, const Algebra& a, int level_rows, int level_cols);
AElement random_hermitian_element(RandomGen& rng, const Algebra& a, int level);
// w* w for random w; positive, generically full rank.
AElement random_positive_element(RandomGen& rng, const Algebra& a, int level);
// Positive with norm < 1, so 0 <= c <= e.
AElement random_positive_contraction(RandomGen& rng, const Algebra& a, int level);
// Exact spectral projection: per block a random range of random rank.
AElement random_projection_element(RandomGen& rng, const Algebra& a, int level);
// Positive pair with exactly disjoint supports (blockwise spectral slots).
std::pair<AElement, AElement> random_orthogonal_positives(RandomGen& rng, const Algebra& a,
                                                          int level);
// (u, v) with 0 <= u <= v, via u = v^(1/2) c v^(1/2).
std::pair<AElement, AElement> random_dominated_pair(RandomGen& rng, const Algebra& a, int level,
                                                    const Tolerance& tol);

} // namespace amou
