#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "amou/algebra.hpp"
#include "amou/random.hpp"

namespace amou {

// An eigenvalue must sit this close to {0, 1} to count as projection spectrum.
inline constexpr double kProjectionSnapTol = 1e-7;

// Self-adjoint p with |2p - e^n| = e^n. Instances are snapped to their exact
// spectral projection at construction, so downstream (+)-chains do not
// accumulate tolerance drift.
class OrderProjection {
public:
    static OrderProjection make(const AElement& v, const Tolerance& tol,
                                double snap_tol = kProjectionSnapTol);
    static OrderProjection zero(const Algebra& algebra, int level);
    static OrderProjection unit(const Algebra& algebra, int level);
    static OrderProjection direct_sum(const OrderProjection& p, const OrderProjection& q);
    // p padded with zero blocks lower-right up to the given level.
    OrderProjection padded(int level) const;

    const AElement& element() const { return p_; }
    const Algebra& algebra() const { return p_.algebra(); }
    int level() const { return p_.level_rows(); }

private:
    explicit OrderProjection(AElement p) : p_(std::move(p)) {}
    AElement p_;
};

// Spectrum-proximity test: Hermitian and every block eigenvalue within
// snap_tol of {0, 1}.
bool is_order_projection(const AElement& v, const Tolerance& tol,
                         double snap_tol = kProjectionSnapTol);

// The definitional route: ||2v - e^n|_n - e^n| within tolerance. Cross-checks
// the spectral test; the two must agree on every input.
bool projection_identity_holds(const AElement& v, const Tolerance& tol);

// Per algebra block, the number of eigenvalues in (0.5, 1.5).
std::vector<int> rank_vector(const OrderProjection& p, const Tolerance& tol = {});

// v whose |v| and |v*| are both order projections.
struct PartialIsometry {
    AElement element;

    static PartialIsometry make(const AElement& v, const Tolerance& tol,
                                double snap_tol = kProjectionSnapTol);
};

bool is_partial_isometry(const AElement& v, const Tolerance& tol,
                         double snap_tol = kProjectionSnapTol);

// Witness v for p ~ q: abs(v*) = p (+) 0_pad_p and abs(v) = q (+) 0_pad_q at
// the common level.
struct EquivWitness {
    AElement v;
    int level = 0;
    int pad_p = 0;
    int pad_q = 0;
};

// Returns a witness iff the rank vectors agree; absence signals inequivalence.
std::optional<EquivWitness> equivalent(const OrderProjection& p, const OrderProjection& q,
                                       const Tolerance& tol);

// p ~~ q decided through p (+) e^m ~ q (+) e^m with m = 1; coincides with ~
// here because the rank monoid is cancellative.
std::optional<std::pair<int, EquivWitness>> stably_equivalent(const OrderProjection& p,
                                                              const OrderProjection& q,
                                                              const Tolerance& tol);

// Condition (T): u in PI_{m,n}, v in PI_{l,n} with |u| = |v| yield
// w = polar(u) polar(v)* in PI_{m,l} with |w*| = |u*| and |w| = |v*|.
PartialIsometry condition_T_witness(const PartialIsometry& u, const PartialIsometry& v,
                                    const Tolerance& tol);

// Sampled finiteness check: random sub-projections q <= p with q ~ p force q = p.
bool is_finite(const OrderProjection& p, RandomGen& rng, const Tolerance& tol, int trials = 20);

// Explicit structured witnesses.
// p (+) q ~ q (+) p via the block-swap permutation.
EquivWitness swap_witness(const OrderProjection& p, const OrderProjection& q,
                          const Tolerance& tol);
// For p perp q at one level: p + q ~ p (+) q via the row witness [p q].
AElement orthogonal_sum_witness(const OrderProjection& p, const OrderProjection& q,
                                const Tolerance& tol);

} // namespace amou
