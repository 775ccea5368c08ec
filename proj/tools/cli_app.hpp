#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cbasis::cli {

enum Exit { ok = 0, malformed_input = 2, classification_failure = 3, verification_failure = 4 };

/// Runs one command. args excludes the program name. Documents are read
/// from files named on the command line, or from `in` when the path is "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cbasis::cli
