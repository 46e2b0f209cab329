// End-to-end acceptance criteria; one PASS/FAIL line per criterion.

#include <iostream>

#include "jordan/acceptance.hpp"

int main() {
    const auto results = jordan::run_acceptance(&std::cout);
    int failed = 0;
    for (const auto& r : results) failed += r.passed ? 0 : 1;
    std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
