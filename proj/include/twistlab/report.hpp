#pragma once

// Check records and suite reports. Reports serialize to JSON with sorted
// keys and checks sorted by name, so repeated runs differ only in the
// timing fields.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "twistlab/cochain.hpp"

namespace twistlab {

struct CheckOutcome {
    bool pass = true;
    std::string residual;
};

struct Check {
    std::string name;
    bool pass = false;
    std::string residual;
    long long ms = 0;
};

struct SuiteReport {
    std::string suite;
    std::string fingerprint;
    std::vector<Check> checks;
    long long total_ms = 0;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Identifies the engine conventions: component order of the group labels
// and the full octonion sign table, hashed with FNV-1a.
inline std::string engine_fingerprint() {
    const Cochain2 F = sign_cochain(3);
    uint64_t h = 1469598103934665603ull;
    auto mix = [&h](uint8_t byte) {
        h ^= byte;
        h *= 1099511628211ull;
    };
    for (unsigned a = 0; a < F.order(); ++a)
        for (unsigned b = 0; b < F.order(); ++b) mix(F.at(a, b) > 0 ? 1 : 2);
    char hex[17];
    std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(h));
    return std::string("bit-order=msb-first;family=sign-z2;table=") + hex;
}

template <typename Fn>
Check run_check(std::string name, Fn&& body) {
    auto t0 = std::chrono::steady_clock::now();
    CheckOutcome out = body();
    auto t1 = std::chrono::steady_clock::now();
    Check c;
    c.name = std::move(name);
    c.pass = out.pass;
    c.residual = std::move(out.residual);
    c.ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return c;
}

inline SuiteReport make_report(std::string suite, std::vector<Check> checks) {
    SuiteReport r;
    r.suite = std::move(suite);
    r.fingerprint = engine_fingerprint();
    std::sort(checks.begin(), checks.end(),
              [](const Check& a, const Check& b) { return a.name < b.name; });
    for (const auto& c : checks) r.total_ms += c.ms;
    r.checks = std::move(checks);
    return r;
}

inline nlohmann::json report_json(const SuiteReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) {
        nlohmann::json jc;
        jc["name"] = c.name;
        jc["status"] = c.pass ? "pass" : "fail";
        jc["ms"] = c.ms;
        if (!c.pass && !c.residual.empty()) jc["residual"] = c.residual;
        checks.push_back(jc);
    }
    nlohmann::json j;
    j["suite"] = r.suite;
    j["fingerprint"] = r.fingerprint;
    j["checks"] = checks;
    j["total_ms"] = r.total_ms;
    return j;
}

inline std::string report_text(const SuiteReport& r) {
    std::string out = "suite: " + r.suite + "\n";
    out += "fingerprint: " + r.fingerprint + "\n";
    for (const auto& c : r.checks) {
        out += std::string(c.pass ? "[pass] " : "[FAIL] ") + c.name + " (" +
               std::to_string(c.ms) + " ms)\n";
        if (!c.pass && !c.residual.empty()) out += "       residual: " + c.residual + "\n";
    }
    out += std::string("result: ") + (r.passed() ? "pass" : "FAIL") + " (" +
           std::to_string(r.total_ms) + " ms total)\n";
    return out;
}

}  // namespace twistlab
