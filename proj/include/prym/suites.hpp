#ifndef PRYM_SUITES_HPP
#define PRYM_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace prym {

struct SuiteConfig {
    std::uint64_t seed = 1;
    int cases = 50;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    int cases = 0;
    std::vector<std::string> lines;  // "PASS <suite>/<check> <detail>", sorted by check id
    int passed = 0;
    int failed = 0;
    double wall_seconds = 0;  // informational; not part of the deterministic output
};

// Suites map 1:1 to the library's verification properties.
std::vector<std::string> suite_names();
bool is_suite(const std::string& name);

SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg);

// Deterministic rendering: header, sorted check lines, summary.  Timing is
// deliberately excluded so reports are byte-identical for a fixed seed.
std::string format_report(const SuiteReport& rep);

}  // namespace prym

#endif
