#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace jordan {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

/// Runs the ten end-to-end acceptance criteria in order. When `log` is set,
/// one PASS/FAIL line per criterion is written as each completes.
std::vector<CriterionResult> run_acceptance(std::ostream* log = nullptr);

std::string format_result_line(const CriterionResult& r);

}  // namespace jordan
