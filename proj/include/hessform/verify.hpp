#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hessform {

/// One named check: a reproduction of a specific identity, value or scan,
/// grouped under a section tag and an acceptance-criterion number.
struct CheckResult {
    std::string name;
    std::string section;
    int criterion = 0;  // 1..15
    bool pass = false;
    std::string exact;   // headline exact value, "num/den" style when scalar
    double approx = 0.0; // float companion of `exact` when meaningful
    std::string detail;
    double elapsed_ms = 0.0;
};

struct RunReport {
    std::string selection;
    uint64_t seed = 0;
    std::vector<CheckResult> results;
    double elapsed_ms = 0.0;

    bool all_pass() const {
        for (const auto& r : results)
            if (!r.pass) return false;
        return !results.empty();
    }
};

/// Section tags accepted by run_verify_suite, in registry order.
std::vector<std::string> verify_sections();

/// Runs the full suite ("all") or one section. Deterministic per seed.
/// Throws std::invalid_argument on an unknown section tag.
RunReport run_verify_suite(const std::string& selection, uint64_t seed);

struct CriterionSummary {
    int criterion = 0;
    std::string title;
    int checks = 0;
    bool pass = false;
};

const char* criterion_title(int criterion);

/// Aggregates a full-suite report into one row per acceptance criterion.
std::vector<CriterionSummary> summarize_criteria(const RunReport& report);

}  // namespace hessform
