#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <sstream>

#include "amou/k0.hpp"
#include "amou/suites.hpp"
#include "amou/workspace.hpp"

namespace {

using namespace amou;

struct Session {
    std::string workspace_path;
    int trials = 100;
    std::uint64_t seed = 0;
    double tol_eps = 1e-9;

    bool has_workspace() const { return !workspace_path.empty(); }

    Workspace workspace() const { return load_workspace_file(workspace_path); }

    Tolerance tolerance() const { return Tolerance{tol_eps}; }

    // Named algebras: the workspace's when given, the built-in set otherwise.
    std::vector<std::pair<std::string, Algebra>> algebra_set(const Workspace* ws) const {
        if (ws) {
            std::vector<std::pair<std::string, Algebra>> out;
            for (const auto& [name, alg] : ws->algebras) out.emplace_back(name, alg);
            return out;
        }
        return default_algebras();
    }
};

const Algebra& find_algebra(const std::vector<std::pair<std::string, Algebra>>& set,
                            const std::string& name) {
    for (const auto& [n, a] : set)
        if (n == name) return a;
    fail("UnknownName", "algebra '" + name + "' is not defined");
}

int cmd_k0(const Session& s, const std::string& name) {
    Workspace ws;
    const Workspace* wsp = nullptr;
    if (s.has_workspace()) {
        ws = s.workspace();
        wsp = &ws;
    }
    const auto set = s.algebra_set(wsp);
    const Algebra& alg = find_algebra(set, name);
    RandomGen rng(s.seed);
    const K0Group g = k0_of(alg, rng, s.tolerance());
    std::cout << "command: k0 " << name << "\n";
    std::cout << render_group(g) << "\n";
    std::cout << "finiteness gate: " << (g.finiteness_gate ? "PASS" : "FAIL") << "\n";
    return g.finiteness_gate ? 0 : 1;
}

int cmd_equiv(const Session& s, const std::string& pname, const std::string& qname) {
    if (!s.has_workspace()) fail("UnknownName", "equiv needs a workspace defining the elements");
    const Workspace ws = s.workspace();
    auto get = [&](const std::string& n) -> const AElement& {
        const auto it = ws.elements.find(n);
        if (it == ws.elements.end()) fail("UnknownName", "element '" + n + "' is not defined");
        return it->second.value;
    };
    const Tolerance tol = s.tolerance();
    const OrderProjection p = OrderProjection::make(get(pname), tol);
    const OrderProjection q = OrderProjection::make(get(qname), tol);

    std::cout << "command: equiv " << pname << " " << qname << "\n";
    const auto w = equivalent(p, q, tol);
    if (!w) {
        auto ranks = [&](const OrderProjection& r) {
            std::ostringstream os;
            os << "(";
            const auto v = rank_vector(r, tol);
            for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
            os << ")";
            return os.str();
        };
        std::cout << "INEQUIVALENT ranks " << pname << " = " << ranks(p) << " " << qname << " = "
                  << ranks(q) << "\n";
        return 1;
    }
    std::cout << "EQUIVALENT level " << w->level << " pad_" << pname << " " << w->pad_p << " pad_"
              << qname << " " << w->pad_q << "\n";
    for (int i = 0; i < w->v.block_count(); ++i) {
        std::cout << "witness block " << i + 1 << " = ";
        std::ostringstream os;
        const CMatrix& b = w->v.block(i);
        os << "[";
        for (int r = 0; r < b.rows(); ++r) {
            os << (r ? "," : "") << "[";
            for (int c = 0; c < b.cols(); ++c) os << (c ? "," : "") << format_complex(b(r, c));
            os << "]";
        }
        os << "]";
        std::cout << os.str() << "\n";
    }
    return 0;
}

int cmd_check(const Session& s, const std::string& suite) {
    Workspace ws;
    const Workspace* wsp = nullptr;
    if (s.has_workspace()) {
        ws = s.workspace();
        wsp = &ws;
    }
    SuiteOptions opt;
    opt.algebras = s.algebra_set(wsp);
    opt.trials = s.trials;
    opt.seed = s.seed;
    opt.tol = s.tolerance();
    if (wsp)
        for (const auto& [name, mo] : wsp->morphisms) opt.morphisms.emplace_back(name, mo.spec);

    std::cout << "command: check " << suite << " --trials " << opt.trials << " --seed " << opt.seed
              << "\n";
    const auto reports = run_suites(suite, opt);
    std::cout << render_reports(reports);
    for (const CheckReport& r : reports)
        if (!r.all_pass()) return 1;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ordered K0 workbench for finite-dimensional C*-models"};
    app.require_subcommand(1);
    app.fallthrough();

    Session s;
    app.add_option("--workspace", s.workspace_path, "workspace file")
        ->envname("AMOU_K0_WORKSPACE");
    app.add_option("--trials", s.trials, "trials per check");
    app.add_option("--seed", s.seed, "random seed");
    app.add_option("--tol", s.tol_eps, "tolerance eps");

    std::string algebra_name, pname, qname, suite;
    CLI::App* k0cmd = app.add_subcommand("k0", "ordered K0 group of an algebra");
    k0cmd->add_option("algebra", algebra_name)->required();
    CLI::App* equivcmd = app.add_subcommand("equiv", "decide p ~ q and print a witness");
    equivcmd->add_option("p", pname)->required();
    equivcmd->add_option("q", qname)->required();
    CLI::App* checkcmd = app.add_subcommand("check", "run a property suite");
    checkcmd->add_option("suite", suite)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (k0cmd->parsed()) return cmd_k0(s, algebra_name);
        if (equivcmd->parsed()) return cmd_equiv(s, pname, qname);
        return cmd_check(s, suite);
    } catch (const amou::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
