#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace alcove::cli {

/// Environment variable naming the default --type.
inline constexpr const char* kTypeEnv = "ALCOVE_TYPE";

/// Runs one command.  args excludes the program name.  Returns 0 on success,
/// 1 on a usage or input error, 2 when a verify sweep records a failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace alcove::cli
