#pragma once

#include <string>
#include <vector>

#include "checks.hpp"
#include "json.hpp"

namespace kmv {

// Deterministic by construction: no timestamps, no durations, insertion
// order preserved. Pass with_timing to append the one volatile field.
inline std::string report_json(const std::vector<CheckResult>& results, bool with_timing = false,
                               double total_seconds = 0.0) {
    nlohmann::ordered_json j;
    j["schema"] = "verification-report-v1";
    j["level"] = "-5/2";
    auto arr = nlohmann::ordered_json::array();
    std::size_t passed = 0;
    for (const auto& r : results) {
        nlohmann::ordered_json c;
        c["id"] = r.id;
        c["criterion"] = r.criterion;
        c["pass"] = r.pass;
        auto facts = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.facts) facts[k] = v;
        c["facts"] = facts;
        if (!r.notes.empty()) c["notes"] = r.notes;
        arr.push_back(std::move(c));
        if (r.pass) ++passed;
    }
    j["checks"] = std::move(arr);
    j["summary"] = {{"total", results.size()},
                    {"passed", passed},
                    {"failed", results.size() - passed}};
    if (with_timing) j["timing_seconds"] = total_seconds;
    return j.dump(2) + "\n";
}

inline std::string report_markdown(const std::vector<CheckResult>& results,
                                   double total_seconds = 0.0) {
    std::ostringstream os;
    std::size_t passed = 0;
    for (const auto& r : results)
        if (r.pass) ++passed;
    os << "# Exact verification report\n\n";
    os << results.size() << " checks, " << passed << " passed, " << results.size() - passed
       << " failed";
    if (total_seconds > 0) {
        os.setf(std::ios::fixed);
        os.precision(2);
        os << " (" << total_seconds << " s)";
    }
    os << ".\n\n";
    os << "| check | criterion | status | seconds |\n";
    os << "|---|---|---|---|\n";
    os.setf(std::ios::fixed);
    os.precision(2);
    for (const auto& r : results)
        os << "| " << r.id << " | " << r.criterion << " | " << (r.pass ? "pass" : "FAIL")
           << " | " << r.seconds << " |\n";
    os << "\n";
    for (const auto& r : results) {
        os << "## " << r.id << "\n\n";
        for (const auto& [k, v] : r.facts) os << "- " << k << ": " << v << "\n";
        if (!r.notes.empty()) os << "- notes: " << r.notes << "\n";
        os << "\n";
    }
    return os.str();
}

} // namespace kmv
