// Acceptance gate: one line per criterion, exact combinatorial expectations
// with a wall-clock budget each.  Exit status 0 iff every line is a PASS.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "prym/suites.hpp"

namespace {

using prym::SuiteConfig;
using prym::SuiteReport;

struct Criterion {
    std::string id;
    std::string description;
    double budget_seconds;
    std::function<bool(std::string&)> run;
};

bool suite_clean(const std::string& name, std::uint64_t seed, int cases, std::string& detail) {
    SuiteConfig cfg;
    cfg.seed = seed;
    cfg.cases = cases;
    SuiteReport rep = prym::run_suite(name, cfg);
    detail = "checks=" + std::to_string(rep.passed + rep.failed) +
             " failures=" + std::to_string(rep.failed);
    return rep.failed == 0;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria;
    auto add = [&](std::string id, std::string desc, double budget,
                   std::function<bool(std::string&)> run) {
        criteria.push_back({std::move(id), std::move(desc), budget, std::move(run)});
    };

    add("criterion-1", "Recillas genus relation, 200 etale trigonal towers", 10.0,
        [](std::string& d) { return suite_clean("recillas", 20260810, 200, d); });
    add("criterion-2", "Recillas bijection round trips, 200 instances", 30.0,
        [](std::string& d) { return suite_clean("recillas", 998877, 200, d); });
    add("criterion-3", "bigonal involutivity and branch exchange, all six local cases", 30.0,
        [](std::string& d) {
            std::string d1, d2;
            bool a = suite_clean("bigonal-symmetry", 31337, 200, d1);
            bool b = suite_clean("branch-exchange", 31337, 200, d2);
            d = d1 + " / " + d2;
            return a && b;
        });
    add("criterion-4", "tetragonal triality on 100 etale towers (WC_4 conjugacy)", 60.0,
        [](std::string& d) { return suite_clean("triality", 4242, 100, d); });
    add("criterion-5", "split direct image has component degrees 1,4,6,4,1", 1.0,
        [](std::string& d) { return suite_clean("local-pictures", 5150, 10, d); });
    add("criterion-6", "genus and Prym-dimension shadows, 200 instances each", 30.0,
        [](std::string& d) { return suite_clean("genus-shadows", 616, 200, d); });
    add("criterion-7", "bihyperelliptic shapes (3.6) and bielliptic dichotomy (3.8)", 60.0,
        [](std::string& d) { return suite_clean("bielliptic", 77, 50, d); });
    add("criterion-8", "F2 identities and descent, exhaustive for g <= 3", 60.0,
        [](std::string& d) { return suite_clean("f2-identities", 8, 1, d); });
    add("criterion-9", "Fano diagram: 7 solutions, one orbit, 4T/3Q/6C", 5.0,
        [](std::string& d) { return suite_clean("fano-diagram", 9, 1, d); });
    add("criterion-10", "WD4 subgroup lattice orders and indices", 5.0,
        [](std::string& d) { return suite_clean("wd4-lattice", 10, 1, d); });
    add("criterion-11", "del Pezzo census: 27/16 lines, 45, 36, 51840/1920, nodal quotient",
        60.0, [](std::string& d) { return suite_clean("delpezzo-census", 11, 1, d); });
    add("criterion-12", "boundary examples classify allowable/unallowable/allowable", 10.0,
        [](std::string& d) { return suite_clean("allowability", 12, 50, d); });
    add("criterion-13", "verify reports are byte-identical across equal-seed runs", 60.0,
        [](std::string& d) {
            for (const auto& name : prym::suite_names()) {
                SuiteConfig cfg;
                cfg.seed = 13;
                cfg.cases = 10;
                std::string a = prym::format_report(prym::run_suite(name, cfg));
                std::string b = prym::format_report(prym::run_suite(name, cfg));
                if (a != b) {
                    d = "suite " + name + " differs between runs";
                    return false;
                }
            }
            d = "all 13 suites double-run identical";
            return true;
        });

    int failures = 0;
    for (auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_budget = secs <= c.budget_seconds;
        bool pass = ok && in_budget;
        if (!pass) ++failures;
        std::printf("%s %s: %s (%s; %.2fs of %.0fs budget)\n", pass ? "PASS" : "FAIL",
                    c.id.c_str(), c.description.c_str(), detail.c_str(), secs,
                    c.budget_seconds);
    }
    if (failures) std::printf("ACCEPTANCE: %d criterion(s) failed\n", failures);
    else std::printf("ACCEPTANCE: all %zu criteria passed\n", criteria.size());
    return failures == 0 ? 0 : 1;
}
