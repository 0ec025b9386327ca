#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kncross {

inline constexpr const char* kVersion = "0.1.0";

/// Runs one command line (without the program name). Exit status: 0 success,
/// 1 usage or input error, 2 verification failure or route disagreement.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kncross
