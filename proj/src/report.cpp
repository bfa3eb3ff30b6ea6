#include "qgolden/report.hpp"

namespace qgolden {

std::string VerificationReport::summary() const
{
    std::string line = passed ? "PASS " : "FAIL ";
    line += check;
    for (const auto& [name, value] : parameters)
        line += " " + name + "=" + std::to_string(value);
    if (!passed && !detail.empty())
        line += ": " + detail;
    return line;
}

} // namespace qgolden
