#pragma once

#include <string>
#include <vector>

namespace lrtrap {

// Self-check harness behind `lrtrap verify`.  Every check reduces to a
// discrepancy that must stay at or below its tolerance.

struct VerifyCheck {
    std::string name;
    double value = 0.0;      // measured discrepancy
    double tolerance = 0.0;  // pass iff value <= tolerance
    bool passed = false;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    bool all_passed() const;
};

VerifyReport run_verify(bool full);

std::string verify_report_json(const VerifyReport& report);

}  // namespace lrtrap
