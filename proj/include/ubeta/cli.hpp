#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ubeta::cli {

// Dispatches one invocation. `args` excludes the program name. Exit codes:
// 0 success / all checks pass, 1 theorem mismatch (a counterexample JSON
// object goes to `err`), 2 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ubeta::cli
