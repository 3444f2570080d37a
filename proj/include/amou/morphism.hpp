#pragma once

#include <functional>
#include <string>
#include <vector>

#include "amou/k0.hpp"
#include "amou/projection.hpp"
#include "amou/sampling.hpp"

namespace amou {

using IntMatrix = std::vector<std::vector<long long>>;

IntMatrix int_identity(int n);
IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix int_add(const IntMatrix& a, const IntMatrix& b);

// A unital (or corner) *-homomorphism between finite-dimensional C*-models:
// target block j receives mult[j][i] copies of source block i, zero-padded,
// conjugated by a unitary. Every unital *-homomorphism between such algebras
// has this form; conjugators are not validated for unitarity so that
// deliberately broken specs can be fed to the checkers.
struct MorphismSpec {
    Algebra source;
    Algebra target;
    std::vector<std::vector<int>> multiplicity; // l x k, nonnegative
    std::vector<CMatrix> conjugators;           // one m_j x m_j matrix per target block

    int zero_pad(int j) const;
    bool unital() const;
    bool zero_mult() const;

    static MorphismSpec identity(const Algebra& a);
    static MorphismSpec zero(const Algebra& source, const Algebra& target);
};

// Shape validation: multiplicities nonnegative, conjugator shapes, pads >= 0.
void validate_spec(const MorphismSpec& f);

// The amplified action on M_{m,n}(source).
AElement apply(const MorphismSpec& f, const AElement& v);

// [[0, v],[v*, 0]] at level m+n.
AElement hermitian_dilation(const AElement& v);

struct MapCheck {
    int pass = 0;
    int fail = 0;
    std::string counterexample;

    bool ok() const { return fail == 0; }
};

// Samples v at levels <= maxlevel and checks abs(f(v)) = f(abs(v)).
MapCheck is_completely_abs_preserving(const MorphismSpec& f, int trials, int maxlevel,
                                      RandomGen& rng, const Tolerance& tol);

// phi(u) perp psi(v) on sampled positives (the pair (e, e) always included);
// cross-checked against disjointness of the unit images.
bool orthogonal_maps(const MorphismSpec& phi, const MorphismSpec& psi, int trials,
                     RandomGen& rng, const Tolerance& tol);

// Pointwise sum of two orthogonal specs; not itself a MorphismSpec.
struct MapSum {
    MorphismSpec phi;
    MorphismSpec psi;

    AElement operator()(const AElement& v) const { return apply(phi, v) + apply(psi, v); }
};

// Throws NotOrthogonal when the maps overlap; re-verifies |.|-preservation of
// the sum through the 2n-level dilation identity on samples.
MapSum sum_maps(const MorphismSpec& phi, const MorphismSpec& psi, RandomGen& rng,
                const Tolerance& tol, int trials = 20);

struct CbNormReport {
    std::vector<double> level_norms; // ||f_n|| estimates for n = 1..L
    double sup = 0.0;
    double exact = 0.0; // 1 for a nonzero *-homomorphism, 0 for the zero map
};

CbNormReport cb_norm(const std::function<AElement(const AElement&)>& map, const Algebra& source,
                     double exact, int maxlevel, int trials, RandomGen& rng,
                     const Tolerance& tol);
double cb_norm_exact(const MorphismSpec& f);

// K0(f) as the multiplicity matrix; requires f(e) to be an order projection
// and verifies the commuting diagram class_of(f(p)) = M class_of(p) on
// generators and random projections.
IntMatrix k0_of_map(const MorphismSpec& f, RandomGen& rng, const Tolerance& tol);

} // namespace amou
