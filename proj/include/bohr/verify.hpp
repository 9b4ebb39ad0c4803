#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bohr {

// One named check. `margin` is the slack by which the tested inequality or
// identity held: nonnegative means pass, and its size shows how far the
// computation sits from the failure boundary.
struct CheckResult {
    std::string suite;
    std::string name;
    std::string anchor; // the instance tested, e.g. "n=4 M=3 seed=1"
    double margin = 0.0;
    bool pass = false;
};

// Runs one of the suites "combinatorics", "wiener", "lower", "upper", or
// "all" (their concatenation). Unknown names throw std::invalid_argument.
std::vector<CheckResult> run_suite(const std::string& suite);

// Prints one line per check plus a summary; returns true when all passed.
bool print_report(std::ostream& os, const std::vector<CheckResult>& results);

} // namespace bohr
