// Acceptance suite: runs every reproduction claim at tolerance zero and
// prints one pass/fail line per criterion. Exit code is the number of
// failing criteria (0 = fully green).
#include <cstdlib>
#include <iostream>

#include "cubforge/report.hpp"

int main() {
    cubforge::ReportOptions options;
    if (const char* dir = std::getenv("CUBFORGE_TEST_DATA")) options.data_dir = dir;
    cubforge::ReproductionReport report = cubforge::run_reproduction_report(options);
    std::cout << report.render();
    int failed_criteria = report.criteria_total - report.criteria_passed;
    if (failed_criteria != 0)
        std::cout << "NOTE: failing claims compare computed exact values against "
                     "published reference values; see the claim details above for "
                     "the exact discrepancies.\n";
    return failed_criteria;
}
