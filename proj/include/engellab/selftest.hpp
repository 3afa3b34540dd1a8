#pragma once

// End-to-end self-check used by `engel-lab selftest`: runs the full
// analysis pipeline over the catalog and a seeded instance set, checking
// every result against frozen expectations and internal cross-checks.

#include <cstdint>
#include <string>
#include <vector>

#include "engellab/catalog.hpp"

namespace engellab {

struct SuiteResult {
    std::string name;
    std::size_t checks = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

struct SelftestOptions {
    std::uint64_t seed = 0;
    // Deliberately corrupts one expected value so the harness can prove the
    // selftest is actually capable of failing. Never exposed in --help.
    bool inject_defect = false;
};

struct SelftestReport {
    std::uint64_t seed;
    std::vector<SuiteResult> suites;
    bool ok() const;
    std::size_t total_checks() const;
    std::size_t total_failures() const;
};

SelftestReport run_selftest(const SelftestOptions& opts);

std::string selftest_report_text(const SelftestReport& r);
std::string selftest_report_json(const SelftestReport& r);

} // namespace engellab
