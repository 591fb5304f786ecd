// Acceptance runner: one line per criterion, exit 0 only if every line passes.
// Each criterion wraps a verification suite and a wall-clock budget.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "twistlab/suites.hpp"

namespace {

struct Criterion {
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    double budget_seconds = 0.0;  // 0 means no budget
};

Criterion run_suites(const std::string& name, const std::vector<std::string>& suites,
                     double budget_seconds) {
    Criterion c;
    c.name = name;
    c.budget_seconds = budget_seconds;
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    for (const auto& s : suites) {
        auto report = twistlab::run_suite(s);
        ok = ok && report.passed();
    }
    auto stop = std::chrono::steady_clock::now();
    c.seconds = std::chrono::duration<double>(stop - start).count();
    c.pass = ok && (budget_seconds == 0.0 || c.seconds <= budget_seconds);
    return c;
}

void print(const Criterion& c) {
    if (c.budget_seconds > 0.0)
        std::printf("[%s] %-34s %7.2fs (budget %.0fs)\n", c.pass ? "pass" : "FAIL",
                    c.name.c_str(), c.seconds, c.budget_seconds);
    else
        std::printf("[%s] %-34s %7.2fs\n", c.pass ? "pass" : "FAIL", c.name.c_str(), c.seconds);
}

}  // namespace

int main() {
    std::vector<Criterion> results;
    results.push_back(run_suites("octonion algebra checks", {"octonions"}, 1.0));
    results.push_back(run_suites("cochain identities", {"cochains"}, 1.0));
    results.push_back(run_suites("seven-sphere classical geometry", {"s7-classical"}, 120.0));
    results.push_back(run_suites("seven-sphere twisted geometry", {"s7-twisted"}, 180.0));
    results.push_back(run_suites("lower spheres", {"s3", "s1"}, 30.0));
    results.push_back(run_suites("derivation-twisted two-sphere", {"podles"}, 60.0));

    {
        Criterion c;
        c.name = "stepwise product oracle";
        auto start = std::chrono::steady_clock::now();
        auto report = twistlab::make_report("oracle", twistlab::oracle_checks());
        auto stop = std::chrono::steady_clock::now();
        c.seconds = std::chrono::duration<double>(stop - start).count();
        c.pass = report.passed();
        results.push_back(c);
    }

    bool all = true;
    for (const auto& c : results) {
        print(c);
        all = all && c.pass;
    }
    std::printf("%s\n", all ? "ACCEPTANCE: pass" : "ACCEPTANCE: FAIL");
    return all ? 0 : 1;
}
