#include "amou/axioms.hpp"

#include <sstream>

#include "amou/morphism.hpp"
#include "amou/sampling.hpp"

namespace amou {

namespace {

std::string trial_note(int t, double dist) {
    std::ostringstream os;
    os << "trial " << t << ": deviation " << dist;
    return os.str();
}

} // namespace

CheckReport check_axioms(const Algebra& a, int trials, std::uint64_t seed, const Tolerance& tol,
                         double check_eps) {
    if (trials < 1) fail("UnknownSuite", "check_axioms needs trials >= 1");
    const Tolerance cmp{check_eps};
    RandomGen rng(seed);

    CheckReport report;
    report.title = "axioms";
    CheckResult abs_positive{"cond1_abs_positive", 0, 0, ""};
    CheckResult abs_fixes{"cond1_abs_fixes_positives", 0, 0, ""};
    CheckResult decomposition{"cond1_orthogonal_decomposition", 0, 0, ""};
    CheckResult homogeneity{"cond1_scalar_homogeneity", 0, 0, ""};
    CheckResult hereditary{"cond1_hereditary_orthogonality", 0, 0, ""};
    CheckResult perp_sums{"cond1_orthogonality_of_abs_sums", 0, 0, ""};
    CheckResult contraction{"cond2_contraction", 0, 0, ""};
    CheckResult dsum{"cond3_direct_sum", 0, 0, ""};
    CheckResult prop1{"prop1_isometry_absorption", 0, 0, ""};
    CheckResult prop2{"prop2_dilation_abs", 0, 0, ""};
    CheckResult prop3{"prop3_dilation_positive", 0, 0, ""};
    CheckResult prop4{"prop4_row_padding", 0, 0, ""};
    CheckResult prop5{"prop5_column_padding", 0, 0, ""};

    for (int t = 0; t < trials; ++t) {
        const int m = rng.uniform_int(1, 3), n = rng.uniform_int(1, 3);
        const AElement v = random_element(rng, a, m, n);
        const AElement sq = random_element(rng, a, n, n);
        const AElement herm = sq.hermitian_part();

        // condition 1: each level is an absolutely ordered space
        abs_positive.record(is_positive(abs(v, tol), cmp), trial_note(t, 0.0));
        {
            const AElement p = random_positive_element(rng, a, n);
            abs_fixes.record(approx_equal(abs(p, tol), p, cmp),
                             trial_note(t, distance(abs(p, tol), p)));
        }
        {
            const auto parts = orthogonal_decompose(herm, tol);
            const bool ok = approx_equal(parts.plus - parts.minus, herm, cmp) &&
                            approx_equal(parts.plus + parts.minus, abs(herm, tol), cmp) &&
                            orthogonal(parts.plus, parts.minus, cmp);
            decomposition.record(ok, trial_note(t, distance(parts.plus - parts.minus, herm)));
        }
        {
            const double alpha = 3.0 * rng.normal();
            const AElement lhs = abs(v * cplx(alpha), tol);
            const AElement rhs = abs(v, tol) * cplx(std::abs(alpha));
            homogeneity.record(approx_equal(lhs, rhs, cmp), trial_note(t, distance(lhs, rhs)));
        }
        {
            auto [u, w] = random_orthogonal_positives(rng, a, n);
            const AElement rw = sqrt_positive(w, tol);
            const AElement sub =
                rw.mul(random_positive_contraction(rng, a, n)).mul(rw).hermitian_part();
            const AElement lhs = abs(u - sub, tol);
            hereditary.record(approx_equal(lhs, u + sub, cmp),
                              trial_note(t, distance(lhs, u + sub)));
        }
        {
            // u perp v and u perp w with v, w sharing spectral slots
            AElement u(a, n, n), w1(a, n, n), w2(a, n, n);
            for (int i = 0; i < a.block_count(); ++i) {
                const int dim = n * a.block_size(i);
                const CMatrix q = random_unitary(rng, dim);
                const int split = dim >= 2 ? rng.uniform_int(1, dim - 1) : 1;
                std::vector<double> du(std::size_t(dim), 0.0), d1(std::size_t(dim), 0.0),
                    d2(std::size_t(dim), 0.0);
                for (int s = 0; s < dim; ++s) {
                    if (s < split)
                        du[std::size_t(s)] = std::abs(rng.normal());
                    else {
                        d1[std::size_t(s)] = std::abs(rng.normal());
                        d2[std::size_t(s)] = std::abs(rng.normal());
                    }
                }
                u.block(i) = (q * CMatrix::diag(du) * q.adjoint()).hermitian_part();
                w1.block(i) = (q * CMatrix::diag(d1) * q.adjoint()).hermitian_part();
                w2.block(i) = (q * CMatrix::diag(d2) * q.adjoint()).hermitian_part();
            }
            bool ok = true;
            double worst = 0.0;
            for (int sign = -1; sign <= 1; sign += 2) {
                const AElement aw = abs(w1 + w2 * cplx(double(sign)), tol);
                const AElement lhs = abs(u - aw, tol);
                const double d = distance(lhs, u + aw);
                worst = std::max(worst, d);
                ok = ok && approx_equal(lhs, u + aw, cmp);
            }
            perp_sums.record(ok, trial_note(t, worst));
        }

        // condition 2: |alpha v beta| <= ||alpha|| | |v| beta |
        // every fourth trial specializes alpha = I, i.e. |v beta| <= ||v| beta|
        {
            const int r = t % 4 == 0 ? m : rng.uniform_int(1, 3);
            const int s = rng.uniform_int(1, 3);
            const CMatrix alpha = t % 4 == 0 ? CMatrix::identity(m) : random_cmatrix(rng, r, m);
            const CMatrix beta = random_cmatrix(rng, n, s);
            const AElement lhs = abs(scalar_act(alpha, v, beta), tol);
            const AElement rhs =
                abs(scalar_act(CMatrix::identity(n), abs(v, tol), beta), tol) *
                cplx(op_norm(alpha, tol));
            contraction.record(is_positive(rhs - lhs, cmp), trial_note(t, min_eigenvalue(rhs - lhs, tol)));
        }

        // condition 3: |v (+) w| = |v| (+) |w|
        {
            const AElement w = random_element(rng, a, rng.uniform_int(1, 2), rng.uniform_int(1, 2));
            const AElement lhs = abs(AElement::direct_sum(v, w), tol);
            const AElement rhs = AElement::direct_sum(abs(v, tol), abs(w, tol));
            dsum.record(approx_equal(lhs, rhs, cmp), trial_note(t, distance(lhs, rhs)));
        }

        // proposition items 1..5
        {
            const int r = m + rng.uniform_int(0, 2);
            const CMatrix alpha = random_isometry(rng, r, m);
            const AElement lhs = abs(scalar_act(alpha, v, CMatrix::identity(n)), tol);
            prop1.record(approx_equal(lhs, abs(v, tol), cmp),
                         trial_note(t, distance(lhs, abs(v, tol))));
        }
        {
            const AElement lhs = abs(hermitian_dilation(v), tol);
            const AElement rhs = AElement::direct_sum(abs(v.adjoint(), tol), abs(v, tol));
            prop2.record(approx_equal(lhs, rhs, cmp), trial_note(t, distance(lhs, rhs)));
        }
        {
            const AElement d =
                hermitian_dilation(v) + AElement::direct_sum(abs(v.adjoint(), tol), abs(v, tol));
            prop3.record(is_positive(d, cmp), trial_note(t, min_eigenvalue(d, tol)));
        }
        {
            const int r = rng.uniform_int(1, 2);
            const AElement lhs = abs(v.embedded(m + r, n), tol);
            prop4.record(approx_equal(lhs, abs(v, tol), cmp),
                         trial_note(t, distance(lhs, abs(v, tol))));
        }
        {
            const int s = rng.uniform_int(1, 2);
            const AElement lhs = abs(v.embedded(m, n + s), tol);
            const AElement rhs = abs(v, tol).embedded(n + s, n + s);
            prop5.record(approx_equal(lhs, rhs, cmp), trial_note(t, distance(lhs, rhs)));
        }
    }

    report.checks = {abs_positive, abs_fixes, decomposition, homogeneity, hereditary, perp_sums,
                     contraction,  dsum,      prop1,         prop2,       prop3,     prop4,
                     prop5};
    return report;
}

} // namespace amou
