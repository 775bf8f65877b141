#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pcoh {

// One verification check inside a suite run: which instance it ran on, what
// was checked, and a witness string when it failed.
struct SuiteCheck {
    std::string instance;
    std::string name;
    bool passed = false;
    std::string witness;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    int max_dim = 0;
    int truncate = 0;
    int grid_denominator = 0;
    std::vector<SuiteCheck> checks;
    long long wall_ms = 0;  // measured; never rendered, so reports stay stable

    bool all_passed() const;
    int failed_count() const;
};

struct SuiteOptions {
    std::uint64_t seed = 1;
    int max_dim = 3;
    int truncate = 4;
    int grid_denominator = 4;
    int instances = 0;  // 0 = the suite's own default count
};

// Named verification suites. Every suite draws its instances from a seeded
// deterministic generator, so a (name, options) pair fixes the full check
// list and every witness.
std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts);

// Deterministic text rendering of a report; timing is excluded on purpose
// so identical seeds and flags give byte-identical files.
std::string render_report(const SuiteReport& rep);

}  // namespace pcoh
