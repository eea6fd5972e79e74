#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace albertkit::cli {

// Runs one command line (without the program name). The JSON report goes to
// `out`, a readable summary and any usage message to `err`.
// Exit codes: 0 all assertions pass, 1 some assertion failed, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace albertkit::cli
