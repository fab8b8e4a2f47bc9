#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fibindex {

// Full command-line front end, callable in process for tests.
// Exit codes: 0 success (and every verification passed), 1 a verification
// or oracle comparison failed, 2 usage, parse, or capability errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fibindex
