#pragma once

#include <string>
#include <vector>

namespace wildclass {

// Runs one CLI invocation (argv without the program name) and returns the
// process exit code: 0 = yes / property holds / pattern absent,
// 1 = no / fails / pattern found, 2 = error. Output goes to the given
// streams so tests can capture it.
int cli_run(const std::vector<std::string>& args, std::string& out, std::string& err);

}  // namespace wildclass
