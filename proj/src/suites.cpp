#include "amou/suites.hpp"

#include <algorithm>
#include <sstream>

#include "amou/axioms.hpp"
#include "amou/limit.hpp"
#include "amou/sampling.hpp"

namespace amou {

namespace {

std::string note(const std::string& what, double value) {
    std::ostringstream os;
    os << what << " " << value;
    return os.str();
}

// per-block random projection pairs with exactly orthogonal ranges
std::pair<AElement, AElement> random_orthogonal_projections(RandomGen& rng, const Algebra& a,
                                                            int level) {
    AElement p(a, level, level), q(a, level, level);
    for (int i = 0; i < a.block_count(); ++i) {
        const int dim = level * a.block_size(i);
        const CMatrix u = random_unitary(rng, dim);
        const int r1 = rng.uniform_int(0, dim);
        const int r2 = rng.uniform_int(0, dim - r1);
        auto span = [&](int from, int count) {
            CMatrix blk(dim, dim);
            for (int c = from; c < from + count; ++c)
                for (int x = 0; x < dim; ++x)
                    for (int y = 0; y < dim; ++y) blk(x, y) += u(x, c) * std::conj(u(y, c));
            return blk.hermitian_part();
        };
        p.block(i) = span(0, r1);
        q.block(i) = span(r1, r2);
    }
    return {p, q};
}

// conjugate of p by a blockwise random unitary: same rank vector
AElement unitary_conjugate(RandomGen& rng, const AElement& p) {
    AElement q(p.algebra(), p.level_rows(), p.level_cols());
    for (int i = 0; i < p.block_count(); ++i) {
        const CMatrix u = random_unitary(rng, p.block(i).rows());
        q.block(i) = (u * p.block(i) * u.adjoint()).hermitian_part();
    }
    return q;
}

// ---- random morphism specs ------------------------------------------------

Algebra random_target_for(RandomGen& rng, const Algebra& source,
                          std::vector<std::vector<int>>& mult_out) {
    const int k = source.block_count();
    const int l = rng.uniform_int(1, 2);
    Algebra target;
    mult_out.assign(std::size_t(l), std::vector<int>(std::size_t(k), 0));
    for (int j = 0; j < l; ++j) {
        int mj = 0;
        while (mj == 0) {
            for (int i = 0; i < k; ++i) {
                const int c = rng.uniform_int(0, 2);
                mult_out[std::size_t(j)][std::size_t(i)] = c;
                mj += c * source.block_size(i);
            }
        }
        target.block_sizes.push_back(mj);
    }
    return target;
}

MorphismSpec random_unital_spec(RandomGen& rng, const Algebra& source) {
    MorphismSpec f;
    f.source = source;
    f.target = random_target_for(rng, source, f.multiplicity);
    for (int j = 0; j < f.target.block_count(); ++j)
        f.conjugators.push_back(random_unitary(rng, f.target.block_size(j)));
    validate_spec(f);
    return f;
}

// Two orthogonal specs into a shared target: per target block, phi occupies
// the leading slots and psi the following ones, both twisted by one random
// unitary.
std::pair<MorphismSpec, MorphismSpec> random_orthogonal_specs(RandomGen& rng,
                                                              const Algebra& source) {
    const int k = source.block_count();
    const int l = rng.uniform_int(1, 2);
    MorphismSpec phi, psi;
    phi.source = psi.source = source;
    phi.multiplicity.assign(std::size_t(l), std::vector<int>(std::size_t(k), 0));
    psi.multiplicity.assign(std::size_t(l), std::vector<int>(std::size_t(k), 0));
    Algebra target;
    for (int j = 0; j < l; ++j) {
        int dphi = 0, dpsi = 0;
        while (dphi == 0 || dpsi == 0) {
            dphi = dpsi = 0;
            for (int i = 0; i < k; ++i) {
                phi.multiplicity[std::size_t(j)][std::size_t(i)] = rng.uniform_int(0, 1);
                psi.multiplicity[std::size_t(j)][std::size_t(i)] = rng.uniform_int(0, 1);
                dphi += phi.multiplicity[std::size_t(j)][std::size_t(i)] * source.block_size(i);
                dpsi += psi.multiplicity[std::size_t(j)][std::size_t(i)] * source.block_size(i);
            }
        }
        const int mj = dphi + dpsi;
        target.block_sizes.push_back(mj);
        const CMatrix w = random_unitary(rng, mj);
        // psi's slots shifted past phi's
        CMatrix shift(mj, mj);
        for (int x = 0; x < dpsi; ++x) shift(dphi + x, x) = 1.0;
        for (int x = dpsi; x < mj; ++x) shift(x - dpsi, x) = 1.0;
        phi.conjugators.push_back(w);
        psi.conjugators.push_back(w * shift);
    }
    phi.target = psi.target = target;
    validate_spec(phi);
    validate_spec(psi);
    return {phi, psi};
}

// An invertible unital spec (block permutation + unitary twist) and its inverse.
std::pair<MorphismSpec, MorphismSpec> random_permutation_specs(RandomGen& rng,
                                                               const Algebra& source) {
    const int k = source.block_count();
    std::vector<int> perm(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) perm[std::size_t(i)] = i;
    for (int i = k - 1; i > 0; --i) std::swap(perm[std::size_t(i)], perm[std::size_t(rng.uniform_int(0, i))]);

    MorphismSpec phi;
    phi.source = source;
    for (int j = 0; j < k; ++j) phi.target.block_sizes.push_back(source.block_size(perm[std::size_t(j)]));
    phi.multiplicity.assign(std::size_t(k), std::vector<int>(std::size_t(k), 0));
    for (int j = 0; j < k; ++j) {
        phi.multiplicity[std::size_t(j)][std::size_t(perm[std::size_t(j)])] = 1;
        phi.conjugators.push_back(random_unitary(rng, phi.target.block_size(j)));
    }
    validate_spec(phi);

    MorphismSpec psi;
    psi.source = phi.target;
    psi.target = source;
    psi.multiplicity.assign(std::size_t(k), std::vector<int>(std::size_t(k), 0));
    psi.conjugators.resize(std::size_t(k));
    for (int j = 0; j < k; ++j) {
        // target block perm[j] of psi receives source block j of phi.target
        psi.multiplicity[std::size_t(perm[std::size_t(j)])][std::size_t(j)] = 1;
        psi.conjugators[std::size_t(perm[std::size_t(j)])] = phi.conjugators[std::size_t(j)].adjoint();
    }
    validate_spec(psi);
    return {phi, psi};
}

// ---- suites ----------------------------------------------------------------

CheckReport suite_axioms(const SuiteOptions& opt) {
    CheckReport report;
    report.title = "axioms";
    std::uint64_t salt = 1;
    for (const auto& [name, alg] : opt.algebras) {
        CheckReport one = check_axioms(alg, opt.trials, opt.seed * 1009 + salt++, opt.tol,
                                       opt.check_eps);
        for (CheckResult& c : one.checks) {
            c.name = "[" + name + "] " + c.name;
            report.checks.push_back(std::move(c));
        }
    }
    return report;
}

CheckReport suite_limit(const SuiteOptions& opt) {
    CheckReport report;
    report.title = "limit";
    const Tolerance cmp{opt.check_eps};

    std::uint64_t salt = 100;
    for (const auto& [name, alg] : opt.algebras) {
        RandomGen rng(opt.seed * 2003 + salt++);
        CheckResult mono{"[" + name + "] order_monotonicity", 0, 0, ""};
        CheckResult nondeg{"[" + name + "] non_degeneracy", 0, 0, ""};
        CheckResult covar{"[" + name + "] local_unitary_covariance", 0, 0, ""};
        CheckResult nrm{"[" + name + "] limit_norm_vs_blockwise", 0, 0, ""};
        CheckResult bimod{"[" + name + "] bimodule_norm_inequality", 0, 0, ""};
        CheckResult pairsa{"[" + name + "] pair_plus_sa_blocks", 0, 0, ""};
        CheckResult iff{"[" + name + "] order_unit_plus_minus_iff", 0, 0, ""};
        CheckResult cone{"[" + name + "] cone_proper_generating", 0, 0, ""};
        CheckResult isom{"[" + name + "] isometric_absorption", 0, 0, ""};

        for (int t = 0; t < opt.trials; ++t) {
            const int level = rng.uniform_int(1, 2);

            { // dominated pairs, including a strict order drop
                auto [u, v] = random_dominated_pair(rng, alg, level, opt.tol);
                bool ok = lift(u, opt.tol).order() <= lift(v, opt.tol).order();
                const AElement extra = random_positive_element(rng, alg, 1);
                const AElement vbig = AElement::direct_sum(v, extra);
                const AElement usmall = u.embedded(level + 1, level + 1);
                ok = ok && lift(usmall, opt.tol).order() <= lift(vbig, opt.tol).order();
                mono.record(ok, note("trial", t));
            }

            const LimitElement lv = lift(random_element(rng, alg, level, level), opt.tol);
            { // i_n v i_n = v at n = o(v)
                const FMatrix in = FMatrix::identity_n(std::max(lv.order(), 1));
                nondeg.record(approx_equal(f_act(in, lv, in, opt.tol), lv, cmp),
                              note("trial", t));
            }
            { // |a* v a| = a* |v| a for a local unitary
                const int n = lv.order() + rng.uniform_int(0, 1);
                if (n >= 1) {
                    const FMatrix a = FMatrix::from_corner(random_unitary(rng, n));
                    const LimitElement lhs = abs(f_act(a.adjoint(), lv, a, opt.tol), opt.tol);
                    const LimitElement rhs = f_act(a.adjoint(), abs(lv, opt.tol), a, opt.tol);
                    covar.record(approx_equal(lhs, rhs, cmp), note("trial", t));
                }
            }
            { // limit norm equals blockwise operator norm
                const double a = limit_norm(lv, opt.tol);
                const double b = norm(lv.payload(), opt.tol);
                nrm.record(std::abs(a - b) <= opt.check_eps * (1.0 + b), note("deviation", a - b));
            }
            { // ||a v b|| <= ||a|| ||v|| ||b||
                const int oa = rng.uniform_int(1, 3), ob = rng.uniform_int(1, 3);
                FMatrix a = FMatrix::from_corner(random_cmatrix(rng, oa, oa));
                FMatrix b = FMatrix::from_corner(random_cmatrix(rng, ob, ob));
                if (t % 3 == 0) { // mix in off-corner supports
                    a = a * FMatrix::shift(oa).adjoint();
                    b = FMatrix::shift(ob) * b;
                }
                const double lhs = limit_norm(f_act(a, lv, b, opt.tol), opt.tol);
                const double rhs = a.norm(opt.tol) * limit_norm(lv, opt.tol) * b.norm(opt.tol);
                bimod.record(lhs <= rhs + opt.check_eps * (1.0 + rhs), note("excess", lhs - rhs));
            }
            { // T_2n^{-1}((v1,v2)_n^+ +- sa_n(v)) = [[v1,+-v],[+-v*,v2]]
                const int n = level;
                const AElement v1 = random_positive_element(rng, alg, n);
                const AElement v2 = random_positive_element(rng, alg, n);
                const AElement vv = random_element(rng, alg, n, n);
                const LimitElement l1 = lift(v1, opt.tol), l2 = lift(v2, opt.tol);
                const LimitElement lvv = lift(vv, opt.tol);
                bool ok = true;
                for (int sign = -1; sign <= 1; sign += 2) {
                    const LimitElement got =
                        add(pair_plus(l1, l2, n, opt.tol),
                            lift(sa_n(lvv, n, opt.tol).payload() * cplx(double(sign)), opt.tol),
                            opt.tol);
                    AElement want(alg, 2 * n, 2 * n);
                    const AElement vs = vv.adjoint();
                    for (int i = 0; i < want.block_count(); ++i) {
                        const int ni = alg.block_size(i);
                        want.block(i).set_block(0, 0, v1.block(i));
                        want.block(i).set_block(0, n * ni, vv.block(i) * cplx(double(sign)));
                        want.block(i).set_block(n * ni, 0, vs.block(i) * cplx(double(sign)));
                        want.block(i).set_block(n * ni, n * ni, v2.block(i));
                    }
                    ok = ok && approx_equal(got, lift(want, opt.tol), cmp);
                }
                pairsa.record(ok, note("trial", t));
            }
            { // (k e^n, k e^n)+ + sa_n(v) positive iff the minus variant is
                const int n = std::max(lv.order(), 1);
                const double k = norm(lv.payload(), opt.tol) * (0.5 + rng.uniform());
                const LimitElement ke = lift(AElement::unit(alg, n) * cplx(k), opt.tol);
                const LimitElement plus =
                    add(pair_plus(ke, ke, n, opt.tol), sa_n(lv, n, opt.tol), opt.tol);
                const LimitElement minus =
                    add(pair_plus(ke, ke, n, opt.tol),
                        lift(sa_n(lv, n, opt.tol).payload() * cplx(-1.0), opt.tol), opt.tol);
                iff.record(is_positive(plus, opt.tol) == is_positive(minus, opt.tol),
                           note("k", k));
            }
            { // properness and generation, sampled
                const AElement h = random_hermitian_element(rng, alg, level);
                const auto parts = orthogonal_decompose(h, opt.tol);
                bool ok = is_positive(parts.plus, cmp) && is_positive(parts.minus, cmp) &&
                          approx_equal(parts.plus - parts.minus, h, cmp);
                const AElement p = random_positive_element(rng, alg, level);
                if (norm(p, opt.tol) > 1e-6) ok = ok && !is_positive(-p, opt.tol);
                cone.record(ok, note("trial", t));
            }
            { // |a v| = |v| for a* a = i_{o(v)}
                const int n = std::max(lv.order(), 1);
                const FMatrix a =
                    FMatrix::from_corner(random_isometry(rng, n + rng.uniform_int(0, 2), n));
                const LimitElement lhs =
                    abs(f_act(a, lv, FMatrix::identity_n(n), opt.tol), opt.tol);
                isom.record(approx_equal(lhs, abs(lv, opt.tol), cmp), note("trial", t));
            }
        }
        report.checks.insert(report.checks.end(),
                             {mono, nondeg, covar, nrm, bimod, pairsa, iff, cone, isom});
    }
    return report;
}

CheckReport suite_projections(const SuiteOptions& opt) {
    CheckReport report;
    report.title = "projections";
    const Tolerance cmp{opt.check_eps};

    std::uint64_t salt = 200;
    for (const auto& [name, alg] : opt.algebras) {
        RandomGen rng(opt.seed * 3001 + salt++);
        CheckResult agree{"[" + name + "] spectral_vs_definitional", 0, 0, ""};
        CheckResult stated{"[" + name + "] membership_examples", 0, 0, ""};
        CheckResult ranks{"[" + name + "] rank_vector", 0, 0, ""};
        CheckResult oracle{"[" + name + "] witness_oracle_agreement", 0, 0, ""};
        CheckResult laws{"[" + name + "] equivalence_laws", 0, 0, ""};
        CheckResult condT{"[" + name + "] condition_T_transitivity", 0, 0, ""};
        CheckResult swp{"[" + name + "] swap_commutes", 0, 0, ""};
        CheckResult perp{"[" + name + "] orthogonal_sum_and_additivity", 0, 0, ""};
        CheckResult stab{"[" + name + "] sim_implies_approx", 0, 0, ""};
        CheckResult fin{"[" + name + "] finiteness", 0, 0, ""};

        { // stated membership examples
            const Tolerance tol = opt.tol;
            bool ok = is_order_projection(AElement(alg, 2, 2), tol, opt.snap_tol) &&
                      is_order_projection(AElement::unit(alg, 2), tol, opt.snap_tol) &&
                      !is_order_projection(AElement::unit(alg, 1) * cplx(0.5), tol, opt.snap_tol);
            // spectral projection of a random Hermitian onto eigenvalues > 0
            const AElement h = random_hermitian_element(rng, alg, 2);
            AElement spectral(alg, 2, 2);
            for (int i = 0; i < h.block_count(); ++i) {
                const EigDecomp e = hermitian_eig(h.block(i), tol);
                CMatrix blk(h.block(i).rows(), h.block(i).cols());
                for (int j = 0; j < h.block(i).rows(); ++j) {
                    if (e.eigenvalues[std::size_t(j)] <= 0.0) continue;
                    for (int x = 0; x < blk.rows(); ++x)
                        for (int y = 0; y < blk.cols(); ++y)
                            blk(x, y) += e.eigenvectors(x, j) * std::conj(e.eigenvectors(y, j));
                }
                spectral.block(i) = blk.hermitian_part();
            }
            ok = ok && is_order_projection(spectral, tol, opt.snap_tol);
            stated.record(ok, "stated membership examples");
        }

        for (int t = 0; t < opt.trials; ++t) {
            const int level = rng.uniform_int(1, 2);
            { // the spectral test and |2p - e| = e must agree
                AElement sample(alg, level, level);
                if (t % 2 == 0) {
                    sample = random_projection_element(rng, alg, level);
                } else {
                    for (int i = 0; i < sample.block_count(); ++i) {
                        const int dim = level * alg.block_size(i);
                        const CMatrix u = random_unitary(rng, dim);
                        std::vector<double> d(static_cast<std::size_t>(dim));
                        for (double& x : d) x = 0.05 + 0.9 * rng.uniform();
                        sample.block(i) = (u * CMatrix::diag(d) * u.adjoint()).hermitian_part();
                    }
                }
                const bool spectral = is_order_projection(sample, opt.tol, opt.snap_tol);
                const bool definitional = projection_identity_holds(sample, opt.tol);
                agree.record(spectral == definitional,
                             note(spectral ? "spectral=1 definitional=0, trial" :
                                             "spectral=0 definitional=1, trial",
                                  t));
            }
            { // rank vector identities
                const OrderProjection e = OrderProjection::unit(alg, level);
                const OrderProjection z = OrderProjection::zero(alg, level);
                bool ok = true;
                const auto re = rank_vector(e, opt.tol);
                for (int i = 0; i < alg.block_count(); ++i)
                    ok = ok && re[std::size_t(i)] == level * alg.block_size(i);
                for (int r : rank_vector(z, opt.tol)) ok = ok && r == 0;
                const OrderProjection p = OrderProjection::make(
                    random_projection_element(rng, alg, level), opt.tol);
                const auto rp = rank_vector(p, opt.tol);
                const auto rsum = rank_vector(OrderProjection::direct_sum(p, e), opt.tol);
                for (int i = 0; i < alg.block_count(); ++i)
                    ok = ok && rsum[std::size_t(i)] == rp[std::size_t(i)] + re[std::size_t(i)];
                ranks.record(ok, note("trial", t));
            }
            // witness/oracle agreement on two pairs per trial (conjugate + independent)
            for (int kind = 0; kind < 2; ++kind) {
                const AElement pe = random_projection_element(rng, alg, level);
                const OrderProjection p = OrderProjection::make(pe, opt.tol);
                const OrderProjection q = OrderProjection::make(
                    kind == 0 ? unitary_conjugate(rng, pe)
                              : random_projection_element(rng, alg, level),
                    opt.tol);
                const bool same_rank = rank_vector(p, opt.tol) == rank_vector(q, opt.tol);
                const auto w = equivalent(p, q, opt.tol);
                bool ok = w.has_value() == same_rank;
                if (w) {
                    ok = ok && approx_equal(abs(w->v, opt.tol), q.padded(w->level).element(), cmp);
                    ok = ok &&
                         approx_equal(abs(w->v.adjoint(), opt.tol), p.padded(w->level).element(), cmp);
                }
                oracle.record(ok, note("trial", t));
            }
            { // reflexivity and symmetry with explicit witnesses
                const OrderProjection p =
                    OrderProjection::make(random_projection_element(rng, alg, level), opt.tol);
                bool ok = approx_equal(abs(p.element(), opt.tol), p.element(), cmp);
                const OrderProjection q =
                    OrderProjection::make(unitary_conjugate(rng, p.element()), opt.tol);
                const auto w = equivalent(p, q, opt.tol);
                ok = ok && w.has_value();
                if (w) {
                    const AElement vstar = w->v.adjoint();
                    ok = ok && approx_equal(abs(vstar, opt.tol), p.element(), cmp) &&
                         approx_equal(abs(vstar.adjoint(), opt.tol), q.element(), cmp);
                }
                laws.record(ok, note("trial", t));
            }
            if (t * 2 < opt.trials) { // condition (T) on a ~ chain, ~50 triples at trials=100
                const AElement pe = random_projection_element(rng, alg, level);
                const OrderProjection p = OrderProjection::make(pe, opt.tol);
                const OrderProjection q =
                    OrderProjection::make(unitary_conjugate(rng, pe), opt.tol);
                const OrderProjection r =
                    OrderProjection::make(unitary_conjugate(rng, pe), opt.tol);
                const auto a = equivalent(p, q, opt.tol);
                const auto b = equivalent(q, r, opt.tol);
                bool ok = a.has_value() && b.has_value();
                if (ok) {
                    const PartialIsometry u = PartialIsometry::make(a->v, opt.tol);
                    const PartialIsometry vb =
                        PartialIsometry::make(b->v.adjoint(), opt.tol); // |b*| = q as well
                    const PartialIsometry w = condition_T_witness(u, vb, opt.tol);
                    ok = approx_equal(abs(w.element.adjoint(), opt.tol), p.element(), cmp) &&
                         approx_equal(abs(w.element, opt.tol), r.element(), cmp);
                }
                condT.record(ok, note("trial", t));
            }
            { // p (+) q ~ q (+) p with the explicit swap witness
                const OrderProjection p =
                    OrderProjection::make(random_projection_element(rng, alg, level), opt.tol);
                const OrderProjection q = OrderProjection::make(
                    random_projection_element(rng, alg, rng.uniform_int(1, 2)), opt.tol);
                const EquivWitness w = swap_witness(p, q, opt.tol);
                const AElement want_q = AElement::direct_sum(q.element(), p.element());
                const AElement want_p = AElement::direct_sum(p.element(), q.element());
                swp.record(approx_equal(abs(w.v, opt.tol), want_q, cmp) &&
                               approx_equal(abs(w.v.adjoint(), opt.tol), want_p, cmp),
                           note("trial", t));
            }
            { // p perp q: p + q ~ p (+) q, and additivity of ~ across orthogonal pairs
                auto [pe, qe] = random_orthogonal_projections(rng, alg, level);
                const OrderProjection p = OrderProjection::make(pe, opt.tol);
                const OrderProjection q = OrderProjection::make(qe, opt.tol);
                const AElement w = orthogonal_sum_witness(p, q, opt.tol);
                bool ok = approx_equal(abs(w, opt.tol),
                                       AElement::direct_sum(p.element(), q.element()), cmp) &&
                          approx_equal(abs(w.adjoint(), opt.tol), p.element() + q.element(), cmp);

                // p ~ p2, q ~ q2 under one rotation keeps orthogonality
                std::vector<CMatrix> us;
                for (int i = 0; i < alg.block_count(); ++i)
                    us.push_back(random_unitary(rng, level * alg.block_size(i)));
                AElement p2(alg, level, level), q2(alg, level, level);
                for (int i = 0; i < alg.block_count(); ++i) {
                    p2.block(i) = (us[std::size_t(i)] * pe.block(i) * us[std::size_t(i)].adjoint())
                                      .hermitian_part();
                    q2.block(i) = (us[std::size_t(i)] * qe.block(i) * us[std::size_t(i)].adjoint())
                                      .hermitian_part();
                }
                const OrderProjection pp = OrderProjection::make(p2, opt.tol);
                const OrderProjection qq = OrderProjection::make(q2, opt.tol);
                const auto w1 = equivalent(p, pp, opt.tol);
                const auto w2 = equivalent(q, qq, opt.tol);
                ok = ok && w1.has_value() && w2.has_value();
                if (w1 && w2) {
                    const AElement sum = w1->v + w2->v;
                    ok = ok &&
                         approx_equal(abs(sum, opt.tol), pp.element() + qq.element(), cmp) &&
                         approx_equal(abs(sum.adjoint(), opt.tol), p.element() + q.element(), cmp);
                }
                perp.record(ok, note("trial", t));
            }
            { // ~ implies ~~, decided through the m = 1 stabilization
                const AElement pe = random_projection_element(rng, alg, level);
                const OrderProjection p = OrderProjection::make(pe, opt.tol);
                const OrderProjection q =
                    OrderProjection::make(unitary_conjugate(rng, pe), opt.tol);
                const auto w = stably_equivalent(p, q, opt.tol);
                bool ok = w.has_value() && w->first == 1;
                if (ok) {
                    const OrderProjection e1 = OrderProjection::unit(alg, 1);
                    const AElement want_p =
                        AElement::direct_sum(p.element(), e1.element());
                    const AElement want_q =
                        AElement::direct_sum(q.element(), e1.element());
                    ok = approx_equal(abs(w->second.v, opt.tol), want_q, cmp) &&
                         approx_equal(abs(w->second.v.adjoint(), opt.tol), want_p, cmp);
                }
                stab.record(ok, note("trial", t));
            }
        }
        { // finiteness of e^n and of sampled projections
            bool ok = true;
            for (int n = 1; n <= 3; ++n)
                ok = ok && is_finite(OrderProjection::unit(alg, n), rng, opt.tol, 5);
            for (int t = 0; t < 5; ++t) {
                const OrderProjection p =
                    OrderProjection::make(random_projection_element(rng, alg, 2), opt.tol);
                ok = ok && is_finite(p, rng, opt.tol, 4);
            }
            fin.record(ok, "finiteness violated");
        }
        report.checks.insert(report.checks.end(),
                             {stated, agree, ranks, oracle, laws, condT, swp, perp, stab, fin});
    }
    return report;
}

CheckReport suite_k0(const SuiteOptions& opt) {
    CheckReport report;
    report.title = "k0";

    std::uint64_t salt = 300;
    for (const auto& [name, alg] : opt.algebras) {
        RandomGen rng(opt.seed * 4001 + salt++);
        CheckResult structure{"[" + name + "] group_structure", 0, 0, ""};
        CheckResult additivity{"[" + name + "] class_additivity", 0, 0, ""};
        CheckResult cancel{"[" + name + "] cancellation", 0, 0, ""};
        CheckResult equivrel{"[" + name + "] pair_equivalence_transitivity", 0, 0, ""};
        CheckResult glaws{"[" + name + "] group_laws", 0, 0, ""};
        CheckResult bound{"[" + name + "] order_unit_bound", 0, 0, ""};
        CheckResult faithful{"[" + name + "] class_vs_witness", 0, 0, ""};

        { // group structure, constructive checks inside k0_of
            const K0Group g = k0_of(alg, rng, opt.tol);
            bool ok = g.rank() == alg.block_count() && g.finiteness_gate;
            for (int i = 0; i < alg.block_count(); ++i)
                ok = ok && g.order_unit[std::size_t(i)] == alg.block_size(i);
            structure.record(ok, "structure mismatch");
        }

        const int k = alg.block_count();
        auto random_class = [&](int maxlevel) {
            K0Class c{alg, std::vector<long long>(std::size_t(k), 0)};
            for (int i = 0; i < k; ++i)
                c.ranks[std::size_t(i)] = rng.uniform_int(0, maxlevel * alg.block_size(i));
            return c;
        };

        for (int t = 0; t < opt.trials; ++t) {
            { // class_of(p (+) q) = class_of(p) + class_of(q)
                const OrderProjection p = OrderProjection::make(
                    random_projection_element(rng, alg, rng.uniform_int(1, 2)), opt.tol);
                const OrderProjection q = OrderProjection::make(
                    random_projection_element(rng, alg, rng.uniform_int(1, 2)), opt.tol);
                const K0Class lhs = class_of(OrderProjection::direct_sum(p, q), opt.tol);
                const K0Class rhs = class_add(class_of(p, opt.tol), class_of(q, opt.tol));
                additivity.record(lhs.ranks == rhs.ranks, note("trial", t));
            }
            { // cancellation through representatives
                const K0Class a = random_class(2);
                const K0Class b = t % 2 == 0 ? a : random_class(2);
                const K0Class r = random_class(1);
                const OrderProjection p = synthesize_projection(a);
                const OrderProjection q = synthesize_projection(b);
                const OrderProjection rr = synthesize_projection(r);
                const K0Class lhs = class_of(OrderProjection::direct_sum(p, rr), opt.tol);
                const K0Class rhs = class_of(OrderProjection::direct_sum(q, rr), opt.tol);
                bool ok = true;
                if (lhs.ranks == rhs.ranks)
                    ok = class_of(p, opt.tol).ranks == class_of(q, opt.tol).ranks;
                cancel.record(ok, note("trial", t));
            }
            { // pairs with one difference class are all equivalent; transitivity
                const K0Class base = random_class(1);
                auto make_pair = [&] {
                    const K0Class q = random_class(1);
                    return std::make_pair(synthesize_projection(class_add(base, q)),
                                          synthesize_projection(q));
                };
                auto [p1, q1] = make_pair();
                auto [p2, q2] = make_pair();
                auto [p3, q3] = make_pair();
                bool ok = pairs_equivalent(p1, q1, p2, q2, opt.tol) &&
                          pairs_equivalent(p2, q2, p3, q3, opt.tol) &&
                          pairs_equivalent(p1, q1, p3, q3, opt.tol);
                // a shifted pair is not equivalent
                K0Class shifted = random_class(1);
                shifted.ranks[std::size_t(rng.uniform_int(0, k - 1))] += 1;
                const OrderProjection p4 = synthesize_projection(class_add(base, shifted));
                const OrderProjection q4 = synthesize_projection(random_class(1));
                if (class_of(p4, opt.tol).ranks != class_add(base, class_of(q4, opt.tol)).ranks)
                    ok = ok && !pairs_equivalent(p1, q1, p4, q4, opt.tol);
                equivrel.record(ok, note("trial", t));
            }
            { // group laws in integer arithmetic
                const K0Element g = k0_element(random_class(2), random_class(2));
                const K0Element h = k0_element(random_class(2), random_class(2));
                const K0Element f = k0_element(random_class(2), random_class(2));
                bool ok = true;
                for (long long d : k0_add(g, k0_negate(g)).diff) ok = ok && d == 0;
                ok = ok && k0_add(g, h).diff == k0_add(h, g).diff;
                ok = ok && k0_add(k0_add(g, h), f).diff == k0_add(g, k0_add(h, f)).diff;
                // [(p,q)] + [(q,p)] = 0
                const K0Class cp = random_class(2), cq = random_class(2);
                for (long long d : k0_add(k0_element(cp, cq), k0_element(cq, cp)).diff)
                    ok = ok && d == 0;
                glaws.record(ok, note("trial", t));
            }
            { // order unit bound is attained and minimal
                const K0Element g = k0_element(random_class(3), random_class(3));
                const long long n = order_unit_bound(g);
                bool ok = true;
                if (n > 0) {
                    bool tight = false;
                    for (std::size_t i = 0; i < g.diff.size(); ++i)
                        if (std::llabs(g.diff[i]) > (n - 1) * alg.block_sizes[i]) tight = true;
                    ok = tight;
                } else {
                    for (long long d : g.diff) ok = ok && d == 0;
                }
                bound.record(ok, note("bound", double(n)));
            }
            { // class equality iff a constructive witness exists
                const AElement pe = random_projection_element(rng, alg, 1);
                const OrderProjection p = OrderProjection::make(pe, opt.tol);
                const OrderProjection q = OrderProjection::make(
                    t % 2 == 0 ? unitary_conjugate(rng, pe)
                               : random_projection_element(rng, alg, 1),
                    opt.tol);
                const bool same = class_of(p, opt.tol).ranks == class_of(q, opt.tol).ranks;
                faithful.record(equivalent(p, q, opt.tol).has_value() == same, note("trial", t));
            }
        }
        report.checks.insert(report.checks.end(),
                             {structure, additivity, cancel, equivrel, glaws, bound, faithful});
    }
    return report;
}

CheckReport suite_functor(const SuiteOptions& opt) {
    CheckReport report;
    report.title = "functor";
    const Tolerance cmp{opt.check_eps};
    RandomGen rng(opt.seed * 5003 + 17);

    CheckResult ident{"k0_of_identity", 0, 0, ""};
    CheckResult zero{"k0_of_zero", 0, 0, ""};
    CheckResult preserving{"family_is_completely_abs_preserving", 0, 0, ""};
    CheckResult compose{"functoriality_composition", 0, 0, ""};
    CheckResult additive{"additivity_on_orthogonal_sums", 0, 0, ""};
    CheckResult cb{"cb_norm_max_identity", 0, 0, ""};
    CheckResult iso{"isomorphism_invariance", 0, 0, ""};
    CheckResult proj{"orthogonal_sums_preserve_projections", 0, 0, ""};

    const auto& algebras = opt.algebras;
    auto pick_algebra = [&](int t) -> const Algebra& {
        return algebras[std::size_t(t) % algebras.size()].second;
    };

    // identity and zero
    for (const auto& [name, alg] : algebras) {
        const IntMatrix mi = k0_of_map(MorphismSpec::identity(alg), rng, opt.tol);
        ident.record(mi == int_identity(alg.block_count()), "[" + name + "]");
        bool zok = true;
        const IntMatrix mz = k0_of_map(MorphismSpec::zero(alg, alg), rng, opt.tol);
        for (const auto& row : mz)
            for (long long x : row) zok = zok && x == 0;
        zero.record(zok, "[" + name + "]");
    }

    const int pair_count = std::max(20, opt.trials / 5);
    for (int t = 0; t < pair_count; ++t) {
        const Algebra& a = pick_algebra(t);

        { // the family is completely |.|-preserving
            const MorphismSpec f = random_unital_spec(rng, a);
            const MapCheck mc = is_completely_abs_preserving(f, 5, 2, rng, opt.tol);
            preserving.record(mc.ok(), mc.counterexample);
        }
        { // K0(psi . phi) = K0(psi) K0(phi) on composable pairs
            const MorphismSpec phi = random_unital_spec(rng, a);
            const MorphismSpec psi = random_unital_spec(rng, phi.target);
            const IntMatrix expect = int_mul(k0_of_map(psi, rng, opt.tol),
                                             k0_of_map(phi, rng, opt.tol));
            bool ok = true;
            for (int i = 0; i < a.block_count() && ok; ++i) {
                K0Class c{a, std::vector<long long>(std::size_t(a.block_count()), 0)};
                c.ranks[std::size_t(i)] = 1;
                const OrderProjection p = synthesize_projection(c);
                const OrderProjection img = OrderProjection::make(
                    apply(psi, apply(phi, p.element())), opt.tol);
                const K0Class got = class_of(img, opt.tol);
                for (std::size_t j = 0; j < expect.size(); ++j)
                    ok = ok && got.ranks[j] == expect[j][std::size_t(i)];
            }
            // and on one random projection
            if (ok) {
                const OrderProjection p = OrderProjection::make(
                    random_projection_element(rng, a, 1), opt.tol);
                const K0Class cp = class_of(p, opt.tol);
                const K0Class got = class_of(
                    OrderProjection::make(apply(psi, apply(phi, p.element())), opt.tol), opt.tol);
                for (std::size_t j = 0; j < expect.size(); ++j) {
                    long long want = 0;
                    for (std::size_t i = 0; i < expect[j].size(); ++i)
                        want += expect[j][i] * cp.ranks[i];
                    ok = ok && got.ranks[j] == want;
                }
            }
            compose.record(ok, note("pair", t));
        }
        { // K0(phi + psi) = K0(phi) + K0(psi), cb-norm max law, projections
            auto [phi, psi] = random_orthogonal_specs(rng, a);
            const MapSum sum = sum_maps(phi, psi, rng, opt.tol, 4);
            const IntMatrix expect = int_add(k0_of_map(phi, rng, opt.tol),
                                             k0_of_map(psi, rng, opt.tol));
            bool ok = true;
            for (int i = 0; i < a.block_count() && ok; ++i) {
                K0Class c{a, std::vector<long long>(std::size_t(a.block_count()), 0)};
                c.ranks[std::size_t(i)] = 1;
                const OrderProjection p = synthesize_projection(c);
                const AElement img = sum(p.element());
                const OrderProjection imgp = OrderProjection::make(img, opt.tol);
                const K0Class got = class_of(imgp, opt.tol);
                for (std::size_t j = 0; j < expect.size(); ++j)
                    ok = ok && got.ranks[j] == expect[j][std::size_t(i)];
            }
            additive.record(ok, note("pair", t));

            // projections map to projections under the orthogonal sum
            const OrderProjection p = OrderProjection::make(
                random_projection_element(rng, a, 1), opt.tol);
            proj.record(is_order_projection(sum(p.element()), opt.tol), note("pair", t));

            // ||phi + psi||_cb = max identity; all level norms contractive
            RandomGen cbrng = rng.fork(std::uint64_t(t) * 13 + 1);
            const CbNormReport rphi =
                cb_norm([&](const AElement& v) { return apply(phi, v); }, a,
                        cb_norm_exact(phi), 3, 4, cbrng, opt.tol);
            const CbNormReport rpsi =
                cb_norm([&](const AElement& v) { return apply(psi, v); }, a,
                        cb_norm_exact(psi), 3, 4, cbrng, opt.tol);
            const CbNormReport rsum =
                cb_norm([&](const AElement& v) { return sum(v); }, a,
                        std::max(cb_norm_exact(phi), cb_norm_exact(psi)), 3, 4, cbrng, opt.tol);
            bool cok = rsum.exact == std::max(rphi.exact, rpsi.exact);
            cok = cok && std::abs(rsum.sup - std::max(rphi.sup, rpsi.sup)) <= opt.check_eps;
            for (double x : rsum.level_norms) cok = cok && x <= 1.0 + opt.check_eps;
            for (double x : rphi.level_norms) cok = cok && x <= 1.0 + opt.check_eps;
            cb.record(cok, note("pair", t));
        }
        if (a.block_count() >= 1) { // invertible specs
            auto [phi, inv] = random_permutation_specs(rng, a);
            const IntMatrix m1 = k0_of_map(phi, rng, opt.tol);
            const IntMatrix m2 = k0_of_map(inv, rng, opt.tol);
            bool ok = int_mul(m2, m1) == int_identity(a.block_count()) &&
                      int_mul(m1, m2) == int_identity(a.block_count());
            const AElement v = random_element(rng, a, 2, 2);
            ok = ok && approx_equal(apply(inv, apply(phi, v)), v, cmp);
            iso.record(ok, note("pair", t));
        }
    }

    // workspace-provided morphisms
    for (const auto& [mname, spec] : opt.morphisms) {
        CheckResult wm{"[morphism " + mname + "] completely_abs_preserving", 0, 0, ""};
        const MapCheck mc = is_completely_abs_preserving(spec, std::max(10, opt.trials / 10), 2,
                                                         rng, opt.tol);
        wm.record(mc.ok(), mc.counterexample);
        try {
            const IntMatrix m = k0_of_map(spec, rng, opt.tol);
            (void)m;
            wm.record(true, "");
        } catch (const Error& e) {
            wm.record(false, e.what());
        }
        report.checks.push_back(wm);
    }

    report.checks.insert(report.checks.begin(),
                         {ident, zero, preserving, compose, additive, cb, iso, proj});
    return report;
}

} // namespace

std::vector<std::pair<std::string, Algebra>> default_algebras() {
    return {{"C", Algebra{{1}}},
            {"M2", Algebra{{2}}},
            {"M3", Algebra{{3}}},
            {"C+M2", Algebra{{1, 2}}},
            {"M2+M3", Algebra{{2, 3}}}};
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"axioms", "limit", "projections", "k0",
                                                   "functor"};
    return names;
}

std::vector<CheckReport> run_suites(const std::string& name, const SuiteOptions& options) {
    if (options.trials < 1) fail("UnknownSuite", "trials must be >= 1");
    if (options.algebras.empty()) fail("UnknownName", "no algebras to check");
    std::vector<CheckReport> reports;
    auto run_one = [&](const std::string& suite) {
        if (suite == "axioms") return suite_axioms(options);
        if (suite == "limit") return suite_limit(options);
        if (suite == "projections") return suite_projections(options);
        if (suite == "k0") return suite_k0(options);
        if (suite == "functor") return suite_functor(options);
        fail("UnknownSuite", "no suite named '" + suite + "'");
    };
    if (name == "all") {
        for (const std::string& suite : suite_names()) reports.push_back(run_one(suite));
    } else {
        reports.push_back(run_one(name));
    }
    return reports;
}

std::string render_reports(const std::vector<CheckReport>& reports) {
    std::string out;
    int checks = 0, failures = 0;
    for (const CheckReport& r : reports) {
        out += render_report(r);
        checks += int(r.checks.size());
        failures += r.failures();
    }
    out += "total: " + std::to_string(checks) + " checks, " + std::to_string(failures) +
           " failures\n";
    return out;
}

} // namespace amou
