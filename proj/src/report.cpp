#include "amou/report.hpp"

#include <sstream>

namespace amou {

std::string render_report(const CheckReport& report) {
    std::ostringstream os;
    os << "== suite " << report.title << " ==\n";
    for (const CheckResult& c : report.checks) {
        os << c.name << ": " << c.pass << "/" << (c.pass + c.fail);
        if (!c.ok()) {
            os << " FAIL";
            os << "\n";
            if (!c.counterexample.empty()) os << "  counterexample: " << c.counterexample;
        }
        os << "\n";
    }
    os << "suite " << report.title << ": " << (report.all_pass() ? "PASS" : "FAIL") << " ("
       << report.checks.size() << " checks, " << report.failures() << " failures)\n";
    return os.str();
}

} // namespace amou
