#include "amou/morphism.hpp"

#include <cmath>
#include <sstream>

namespace amou {

IntMatrix int_identity(int n) {
    IntMatrix m(std::size_t(n), std::vector<long long>(std::size_t(n), 0));
    for (int i = 0; i < n; ++i) m[std::size_t(i)][std::size_t(i)] = 1;
    return m;
}

IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t l = a.size(), mid = b.size(), k = b.empty() ? 0 : b[0].size();
    IntMatrix m(l, std::vector<long long>(k, 0));
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < mid; ++j)
            for (std::size_t c = 0; c < k; ++c) m[i][c] += a[i][j] * b[j][c];
    return m;
}

IntMatrix int_add(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix m = a;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] += b[i][j];
    return m;
}

int MorphismSpec::zero_pad(int j) const {
    int used = 0;
    for (int i = 0; i < source.block_count(); ++i)
        used += multiplicity[std::size_t(j)][std::size_t(i)] * source.block_size(i);
    return target.block_size(j) - used;
}

bool MorphismSpec::unital() const {
    for (int j = 0; j < target.block_count(); ++j)
        if (zero_pad(j) != 0) return false;
    return true;
}

bool MorphismSpec::zero_mult() const {
    for (const auto& row : multiplicity)
        for (int m : row)
            if (m != 0) return false;
    return true;
}

MorphismSpec MorphismSpec::identity(const Algebra& a) {
    MorphismSpec f;
    f.source = a;
    f.target = a;
    const int k = a.block_count();
    f.multiplicity.assign(std::size_t(k), std::vector<int>(std::size_t(k), 0));
    for (int i = 0; i < k; ++i) {
        f.multiplicity[std::size_t(i)][std::size_t(i)] = 1;
        f.conjugators.push_back(CMatrix::identity(a.block_size(i)));
    }
    return f;
}

MorphismSpec MorphismSpec::zero(const Algebra& source, const Algebra& target) {
    MorphismSpec f;
    f.source = source;
    f.target = target;
    f.multiplicity.assign(std::size_t(target.block_count()),
                          std::vector<int>(std::size_t(source.block_count()), 0));
    for (int j = 0; j < target.block_count(); ++j)
        f.conjugators.push_back(CMatrix::identity(target.block_size(j)));
    return f;
}

void validate_spec(const MorphismSpec& f) {
    const int l = f.target.block_count(), k = f.source.block_count();
    if (int(f.multiplicity.size()) != l || int(f.conjugators.size()) != l)
        fail("ShapeMismatch", "morphism: one multiplicity row and conjugator per target block");
    for (int j = 0; j < l; ++j) {
        if (int(f.multiplicity[std::size_t(j)].size()) != k)
            fail("ShapeMismatch", "morphism: multiplicity row length");
        for (int i = 0; i < k; ++i)
            if (f.multiplicity[std::size_t(j)][std::size_t(i)] < 0)
                fail("ShapeMismatch", "morphism: negative multiplicity");
        const int mj = f.target.block_size(j);
        if (f.conjugators[std::size_t(j)].rows() != mj ||
            f.conjugators[std::size_t(j)].cols() != mj)
            fail("ShapeMismatch", "morphism: conjugator shape");
        if (f.zero_pad(j) < 0)
            fail("ShapeMismatch", "morphism: multiplicities exceed the target block");
    }
}

AElement apply(const MorphismSpec& f, const AElement& v) {
    if (v.algebra() != f.source) fail("AlgebraMismatch", "apply: element over the wrong algebra");
    const int m = v.level_rows(), n = v.level_cols();
    AElement out(f.target, m, n);
    for (int j = 0; j < f.target.block_count(); ++j) {
        const int mj = f.target.block_size(j);
        const CMatrix& u = f.conjugators[std::size_t(j)];
        const CMatrix ustar = u.adjoint();
        CMatrix& blk = out.block(j);
        for (int r = 0; r < m; ++r)
            for (int s = 0; s < n; ++s) {
                CMatrix cell(mj, mj);
                int off = 0;
                for (int i = 0; i < f.source.block_count(); ++i) {
                    const int ni = f.source.block_size(i);
                    const CMatrix sub = v.block(i).block(r * ni, s * ni, ni, ni);
                    for (int c = 0; c < f.multiplicity[std::size_t(j)][std::size_t(i)]; ++c) {
                        cell.set_block(off, off, sub);
                        off += ni;
                    }
                }
                blk.set_block(r * mj, s * mj, u * cell * ustar);
            }
    }
    return out;
}

AElement hermitian_dilation(const AElement& v) {
    const int m = v.level_rows(), n = v.level_cols();
    AElement d(v.algebra(), m + n, m + n);
    const AElement vstar = v.adjoint();
    for (int i = 0; i < d.block_count(); ++i) {
        const int ni = v.algebra().block_size(i);
        d.block(i).set_block(0, m * ni, v.block(i));
        d.block(i).set_block(m * ni, 0, vstar.block(i));
    }
    return d;
}

MapCheck is_completely_abs_preserving(const MorphismSpec& f, int trials, int maxlevel,
                                      RandomGen& rng, const Tolerance& tol) {
    validate_spec(f);
    MapCheck check;
    const Tolerance cmp{std::max(tol.eps, 1e-7)};
    for (int t = 0; t < trials; ++t) {
        const int lr = rng.uniform_int(1, maxlevel);
        const int lc = rng.uniform_int(1, maxlevel);
        const AElement v = random_element(rng, f.source, lr, lc);
        const AElement lhs = abs(apply(f, v), tol);
        const AElement rhs = apply(f, abs(v, tol));
        if (approx_equal(lhs, rhs, cmp)) {
            ++check.pass;
        } else {
            ++check.fail;
            if (check.counterexample.empty()) {
                std::ostringstream os;
                os << "trial " << t << " level (" << lr << "," << lc
                   << "): ||abs(f(v)) - f(abs(v))|| = " << distance(lhs, rhs);
                check.counterexample = os.str();
            }
        }
    }
    return check;
}

bool orthogonal_maps(const MorphismSpec& phi, const MorphismSpec& psi, int trials,
                     RandomGen& rng, const Tolerance& tol) {
    if (phi.source != psi.source || phi.target != psi.target)
        fail("AlgebraMismatch", "orthogonal_maps: maps must share source and target");
    const Tolerance cmp{std::max(tol.eps, 1e-7)};

    bool all = true;
    for (int level = 1; level <= 3 && all; ++level) {
        const AElement e = AElement::unit(phi.source, level);
        if (!orthogonal(apply(phi, e), apply(psi, e), cmp)) all = false;
        for (int t = 0; t < trials && all; ++t) {
            const AElement u = random_positive_element(rng, phi.source, level);
            const AElement v = random_positive_element(rng, phi.source, level);
            if (!orthogonal(apply(phi, u), apply(psi, v), cmp)) all = false;
        }
    }
    // structural route: disjoint unit images
    const AElement e1 = AElement::unit(phi.source, 1);
    const bool structural = orthogonal_product(apply(phi, e1), apply(psi, e1), cmp);
    if (structural != all)
        fail("Internal", "sampled and structural orthogonality disagree");
    return all;
}

MapSum sum_maps(const MorphismSpec& phi, const MorphismSpec& psi, RandomGen& rng,
                const Tolerance& tol, int trials) {
    if (!orthogonal_maps(phi, psi, trials, rng, tol))
        fail("NotOrthogonal", "sum_maps needs orthogonal summands");
    MapSum sum{phi, psi};
    // Re-verify through the 2n-level identity: |sum([[0,v],[v*,0]])| must be
    // |sum(v*)| (+) |sum(v)|.
    const Tolerance cmp{std::max(tol.eps, 1e-7)};
    for (int t = 0; t < 8; ++t) {
        const int lr = rng.uniform_int(1, 2), lc = rng.uniform_int(1, 2);
        const AElement v = random_element(rng, phi.source, lr, lc);
        const AElement lhs = abs(sum(hermitian_dilation(v)), tol);
        const AElement rhs =
            AElement::direct_sum(abs(sum(v.adjoint()), tol), abs(sum(v), tol));
        if (!approx_equal(lhs, rhs, cmp))
            fail("Internal", "orthogonal sum fails the dilation identity");
    }
    return sum;
}

CbNormReport cb_norm(const std::function<AElement(const AElement&)>& map, const Algebra& source,
                     double exact, int maxlevel, int trials, RandomGen& rng,
                     const Tolerance& tol) {
    CbNormReport report;
    report.exact = exact;
    for (int level = 1; level <= maxlevel; ++level) {
        double best = 0.0;
        const AElement e = AElement::unit(source, level);
        const double ne = norm(map(e), tol);
        best = std::max(best, ne); // ||e^n|| = 1
        for (int t = 0; t < trials; ++t) {
            const AElement v = random_element(rng, source, level, level);
            const double nv = norm(v, tol);
            if (nv <= tol.eps) continue;
            best = std::max(best, norm(map(v), tol) / nv);
        }
        report.level_norms.push_back(best);
        report.sup = std::max(report.sup, best);
    }
    return report;
}

double cb_norm_exact(const MorphismSpec& f) { return f.zero_mult() ? 0.0 : 1.0; }

IntMatrix k0_of_map(const MorphismSpec& f, RandomGen& rng, const Tolerance& tol) {
    validate_spec(f);
    const AElement fe = apply(f, AElement::unit(f.source, 1));
    if (!is_order_projection(fe, tol))
        fail("NotProjectionPreserving", "f(e) is not an order projection");

    IntMatrix m(std::size_t(f.target.block_count()),
                std::vector<long long>(std::size_t(f.source.block_count()), 0));
    for (std::size_t j = 0; j < m.size(); ++j)
        for (std::size_t i = 0; i < m[j].size(); ++i)
            m[j][i] = f.multiplicity[j][i];

    // the chi diagram: class_of(f(p)) = M class_of(p)
    auto check_diagram = [&](const OrderProjection& p) {
        const K0Class cp = class_of(p, tol);
        const OrderProjection fp = OrderProjection::make(apply(f, p.element()), tol);
        const K0Class cfp = class_of(fp, tol);
        for (std::size_t j = 0; j < m.size(); ++j) {
            long long want = 0;
            for (std::size_t i = 0; i < m[j].size(); ++i) want += m[j][i] * cp.ranks[i];
            if (cfp.ranks[j] != want) fail("Internal", "K0 diagram does not commute");
        }
    };
    for (int i = 0; i < f.source.block_count(); ++i) {
        K0Class c{f.source, std::vector<long long>(std::size_t(f.source.block_count()), 0)};
        c.ranks[std::size_t(i)] = 1;
        check_diagram(synthesize_projection(c));
    }
    for (int t = 0; t < 5; ++t) {
        const AElement p = random_projection_element(rng, f.source, rng.uniform_int(1, 2));
        check_diagram(OrderProjection::make(p, tol));
    }
    return m;
}

} // namespace amou
