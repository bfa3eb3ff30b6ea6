#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qgolden {

// Outcome of one identity check. Both sides are carried verbatim as decimal
// strings so a failure is reproducible from the report alone; passed is
// true exactly when lhs == rhs elementwise.
struct VerificationReport {
    std::string check;
    std::vector<std::pair<std::string, long>> parameters;
    std::vector<std::string> lhs;
    std::vector<std::string> rhs;
    bool passed = false;
    std::string detail; // first-mismatch description; empty when passed

    // One line: "PASS theorem n=5" / "FAIL sw n=3 m=2: <detail>".
    std::string summary() const;
};

} // namespace qgolden
