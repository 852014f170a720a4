#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace k3::cli {

// Exit codes: 0 computed verdict, 1 internal error, 2 domain or parse error, 3 undecided,
// unsupported or timed out.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Shell-like word splitting with single and double quotes, used for batch lines.
std::vector<std::string> split_words(const std::string& line);

}  // namespace k3::cli
