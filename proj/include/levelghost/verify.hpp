#pragma once

#include <string>
#include <vector>

namespace levelghost {

struct VerifyItem {
    std::string id;
    std::string description;
    bool passed = false;
    std::string details; // counts only — never timings or worker counts
};

struct VerifyReport {
    std::vector<VerifyItem> items;
    bool all_passed = false;
};

// The one-shot battery reproducing every headline result end to end:
// table parity, the closed-form families, the preset witnesses, the
// three-edge non-existence levels, the level-12 sieve, the codimension-4
// witness, the classification sweep, the scaling property, and the
// coboundary oracle cross-check.  `workers` only distributes the searches;
// the report bytes are identical for every value.
VerifyReport run_verification_battery(int workers = 0);

std::string render_verify_text(const VerifyReport& report);
std::string verify_report_json(const VerifyReport& report);

} // namespace levelghost
