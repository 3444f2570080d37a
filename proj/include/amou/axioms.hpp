#pragma once

#include <cstdint>

#include "amou/algebra.hpp"
#include "amou/report.hpp"

namespace amou {

// Sampled verification that the model satisfies the absolutely matrix ordered
// space definition (per-level absolute-value axioms, the rectangular
// contraction law, the direct-sum law) and the five rectangular consequences
// (isometry absorption, dilation absolute value, dilation positivity, row and
// column padding). Every check records pass/fail counts and the first
// counterexample; in this model a failure means an implementation bug.
CheckReport check_axioms(const Algebra& a, int trials, std::uint64_t seed, const Tolerance& tol,
                         double check_eps = 1e-7);

} // namespace amou
