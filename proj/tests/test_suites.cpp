#include <doctest.h>

#include "amou/suites.hpp"

using namespace amou;

namespace {

SuiteOptions small_options() {
    SuiteOptions opt;
    opt.algebras = {{"M2", Algebra{{2}}}, {"C+M2", Algebra{{1, 2}}}};
    opt.trials = 8;
    opt.seed = 7;
    return opt;
}

} // namespace

TEST_CASE("all suites pass on the model") {
    const auto reports = run_suites("all", small_options());
    CHECK(reports.size() == 5);
    for (const CheckReport& r : reports) {
        INFO(render_report(r));
        CHECK(r.all_pass());
    }
}

TEST_CASE("suite reports are deterministic for a fixed seed") {
    const auto a = run_suites("limit", small_options());
    const auto b = run_suites("limit", small_options());
    CHECK(render_reports(a) == render_reports(b));
}

TEST_CASE("unknown suites and bad trial counts are rejected") {
    SuiteOptions opt = small_options();
    CHECK_THROWS_WITH_AS(run_suites("nonsense", opt), doctest::Contains("UnknownSuite"), Error);
    opt.trials = 0;
    CHECK_THROWS_WITH_AS(run_suites("axioms", opt), doctest::Contains("UnknownSuite"), Error);
}

TEST_CASE("planted bug: widened snap threshold trips the projections suite") {
    SuiteOptions opt = small_options();
    opt.trials = 30;
    opt.snap_tol = 0.4;
    const auto reports = run_suites("projections", opt);
    CHECK_FALSE(reports.front().all_pass());
}

TEST_CASE("planted bug: a non-unitary conjugator trips the functor suite") {
    SuiteOptions opt = small_options();
    MorphismSpec bad = MorphismSpec::identity(Algebra{{2}});
    bad.conjugators[0](0, 0) = 1.1;
    opt.morphisms.emplace_back("bad", bad);
    const auto reports = run_suites("functor", opt);
    CHECK_FALSE(reports.front().all_pass());
}
