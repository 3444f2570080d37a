// Acceptance: property-based at desk scale, one line per criterion.
// Usage: acceptance_suite <path-to-amou-k0>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "amou/sampling.hpp"
#include "amou/suites.hpp"

using namespace amou;

namespace {

int failures = 0;

void report(int id, bool pass, const std::string& label) {
    std::printf("criterion %d %s: %s\n", id, pass ? "PASS" : "FAIL", label.c_str());
    if (!pass) ++failures;
}

SuiteOptions base_options(std::uint64_t seed) {
    SuiteOptions opt;
    opt.algebras = default_algebras();
    opt.trials = 100;
    opt.seed = seed;
    opt.check_eps = 1e-7;
    return opt;
}

bool suite_passes(const std::string& name, const SuiteOptions& opt, std::string* detail) {
    const auto reports = run_suites(name, opt);
    bool ok = true;
    for (const CheckReport& r : reports)
        if (!r.all_pass()) {
            ok = false;
            if (detail) *detail += render_report(r);
        }
    return ok;
}

bool orthogonality_criterion() {
    const Tolerance tol;
    const Tolerance cmp{1e-7};
    const auto algebras = default_algebras();
    bool ok = true;

    // perp <-> perp_infty agreement on 200 norm-one positive pairs
    for (int t = 0; t < 200 && ok; ++t) {
        RandomGen rng(9000 + std::uint64_t(t));
        const Algebra& a = algebras[std::size_t(t) % algebras.size()].second;
        AElement u(a, 2, 2), v(a, 2, 2);
        if (t % 2 == 0) {
            auto pair = random_orthogonal_positives(rng, a, 2);
            u = pair.first;
            v = pair.second;
        } else {
            u = random_positive_element(rng, a, 2);
            v = random_positive_element(rng, a, 2);
        }
        const double nu = norm(u, tol), nv = norm(v, tol);
        if (nu <= 1e-9 || nv <= 1e-9) continue;
        u = u * cplx(1.0 / nu);
        v = v * cplx(1.0 / nv);
        ok = ok && orthogonal(u, v, cmp) == orthogonal_infty(u, v, cmp);
    }

    // orthogonal_decompose reconstructs v and |v| within 1e-7
    for (int t = 0; t < 100 && ok; ++t) {
        RandomGen rng(9500 + std::uint64_t(t));
        const Algebra& a = algebras[std::size_t(t) % algebras.size()].second;
        const AElement h = random_hermitian_element(rng, a, rng.uniform_int(1, 2));
        const auto parts = orthogonal_decompose(h, tol);
        ok = ok && approx_equal(parts.plus - parts.minus, h, cmp);
        ok = ok && approx_equal(parts.plus + parts.minus, abs(h, tol), cmp);
        ok = ok && orthogonal(parts.plus, parts.minus, cmp);
    }
    return ok;
}

bool planted_bug_criterion() {
    // (a) snap threshold corrupted to 0.4: projections suite must fail
    SuiteOptions snap = base_options(31);
    snap.trials = 40;
    snap.snap_tol = 0.4;
    bool snap_failed = false;
    for (const CheckReport& r : run_suites("projections", snap))
        if (!r.all_pass()) snap_failed = true;

    // (b) one conjugator made non-unitary: functor suite must fail
    SuiteOptions corrupt = base_options(32);
    corrupt.trials = 20;
    MorphismSpec bad = MorphismSpec::identity(Algebra{{2}});
    bad.conjugators[0](0, 0) = 1.1;
    corrupt.morphisms.emplace_back("corrupted", bad);
    bool conj_failed = false;
    for (const CheckReport& r : run_suites("functor", corrupt))
        if (!r.all_pass()) conj_failed = true;

    return snap_failed && conj_failed;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

bool cli_determinism(const std::string& cli) {
    if (cli.empty()) return false;
    const std::string f1 = "acceptance_cli_run1.txt";
    const std::string f2 = "acceptance_cli_run2.txt";
    const int s1 = std::system(("'" + cli + "' check all --seed 7 > " + f1 + " 2>&1").c_str());
    const int s2 = std::system(("'" + cli + "' check all --seed 7 > " + f2 + " 2>&1").c_str());
    if (s1 != 0 || s2 != 0) return false;
    const std::string b1 = slurp(f1), b2 = slurp(f2);
    return !b1.empty() && b1 == b2;
}

} // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    std::string detail;

    {
        SuiteOptions opt = base_options(21);
        report(1, suite_passes("axioms", opt, &detail),
               "axiom suite: absolutely matrix ordered space conditions and consequence items "
               "1-5 on {C, M2, M3, C+M2, M2+M3}, 100 trials, tolerance 1e-7");
    }
    {
        SuiteOptions opt = base_options(22);
        report(2, suite_passes("limit", opt, &detail),
               "limit suite: order monotonicity, local unitary covariance, limit norm vs "
               "blockwise norm, bimodule norm inequality");
    }
    report(3, orthogonality_criterion(),
           "orthogonality suite: perp <-> perp_infty agreement on 200 norm-one positives, "
           "orthogonal decomposition within 1e-7");
    {
        SuiteOptions opt = base_options(24);
        report(4, suite_passes("projections", opt, &detail),
               "equivalence suite: witness/oracle agreement on 200 pairs per algebra, "
               "equivalence laws with condition-(T) witnesses, explicit swap and orthogonal-sum "
               "witnesses");
    }
    {
        SuiteOptions opt = base_options(25);
        report(5, suite_passes("k0", opt, &detail),
               "K0 suite: Z^k with cone Z+^k and unit (n_i) on the five algebras; cancellation, "
               "pair-equivalence transitivity, group laws, order unit bound");
    }
    {
        SuiteOptions opt = base_options(26);
        report(6, suite_passes("functor", opt, &detail),
               "functor suite: K0(identity), K0(zero), composition on 20 pairs, additivity on 20 "
               "orthogonal pairs, cb-norm max identity");
    }
    report(7, planted_bug_criterion(),
           "planted-bug sensitivity: corrupted snap threshold and non-unitary conjugator each "
           "trip a suite");
    report(8, cli_determinism(cli),
           "CLI determinism: 'check all --seed 7' twice is byte-identical with exit 0");

    if (!detail.empty()) std::printf("---- failing suite detail ----\n%s", detail.c_str());
    std::printf("acceptance: %d/8 criteria passed\n", 8 - failures);
    return failures == 0 ? 0 : 1;
}
