#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gallai {

/// Named verification suites, in report order.
std::vector<std::string> acceptance_suite_names();

/// Runs one named suite, printing one "criterion <i> PASS|FAIL ..." line;
/// returns true on pass. Unknown names throw validation_error.
bool run_acceptance_suite(const std::string& name, std::ostream& out);

/// Runs every suite; returns the number of failures.
int run_all_acceptance_suites(std::ostream& out);

}  // namespace gallai
