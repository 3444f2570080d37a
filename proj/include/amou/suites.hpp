#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "amou/morphism.hpp"
#include "amou/report.hpp"

namespace amou {

struct SuiteOptions {
    std::vector<std::pair<std::string, Algebra>> algebras; // named
    int trials = 100;
    std::uint64_t seed = 0;
    Tolerance tol{1e-9};
    double check_eps = 1e-7; // assertion tolerance
    double snap_tol = kProjectionSnapTol;
    std::vector<std::pair<std::string, MorphismSpec>> morphisms; // workspace-supplied
};

// C, M2, M3, C+M2, M2+M3.
std::vector<std::pair<std::string, Algebra>> default_algebras();

const std::vector<std::string>& suite_names(); // axioms, limit, projections, k0, functor

// name is one of suite_names() or "all". Throws UnknownSuite.
std::vector<CheckReport> run_suites(const std::string& name, const SuiteOptions& options);

std::string render_reports(const std::vector<CheckReport>& reports);

} // namespace amou
