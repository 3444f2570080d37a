#pragma once

#include <string>
#include <vector>

namespace amou {

struct CheckResult {
    std::string name;
    int pass = 0;
    int fail = 0;
    std::string counterexample; // first failure only

    bool ok() const { return fail == 0; }

    void record(bool passed, const std::string& detail_on_fail) {
        if (passed) {
            ++pass;
        } else {
            ++fail;
            if (counterexample.empty()) counterexample = detail_on_fail;
        }
    }
};

struct CheckReport {
    std::string title;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const CheckResult& c : checks)
            if (!c.ok()) return false;
        return true;
    }
    int failures() const {
        int n = 0;
        for (const CheckResult& c : checks) n += c.fail;
        return n;
    }
};

std::string render_report(const CheckReport& report);

} // namespace amou
