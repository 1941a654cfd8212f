#pragma once

#include <string>
#include <vector>

namespace cubforge {

// One reproduction claim checked by exact computation. Verdicts never come
// from approximate comparisons.
struct ClaimRecord {
    std::string id;         // e.g. "1a"
    std::string reference;  // what the claim pins down, human-readable
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct ReproductionReport {
    std::vector<ClaimRecord> claims;
    int criteria_total = 0;
    int criteria_passed = 0;

    bool all_pass() const;
    std::string render() const;  // one line per criterion plus claim details
};

struct ReportOptions {
    int threads = 0;
    std::string data_dir;  // bundled designs/identities; empty = built-ins only
};

// Runs the full battery of reproduction claims and property suites.
ReproductionReport run_reproduction_report(const ReportOptions& options = {});

}  // namespace cubforge
