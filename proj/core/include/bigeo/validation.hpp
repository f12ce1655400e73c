// validation.hpp — the acceptance-criteria suite behind `bigeo validate`
//
// Each check returns a CheckResult with the worst measured value, the bound it
// was held to and per-point details. Informational findings (info_only) never
// affect the pass/fail summary; they surface known inconsistencies in the
// source closed forms that are documented rather than asserted.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bigeo::validation {

struct CheckResult {
    std::string name;
    bool passed{true};
    bool info_only{false};
    std::string measured;
    std::string bound;
    std::string details;
    double seconds{0.0};
};

// Run every check whose name contains `filter` (empty = all).
std::vector<CheckResult> run_all(const std::string& filter = "");

// True when every non-informational check passed.
bool all_passed(const std::vector<CheckResult>& results);

void print_report(const std::vector<CheckResult>& results, std::ostream& os);

} // namespace bigeo::validation
