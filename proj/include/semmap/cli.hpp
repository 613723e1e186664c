#pragma once

#include <string>
#include <vector>

namespace semmap {

// Exit codes: 0 success, 1 domain failure (validation error, non-isomorphic
// pair, inadmissible cycle, ...), 2 usage error.
struct CommandResult {
  int exit_code = 0;
  std::string out;
};

CommandResult run(const std::vector<std::string>& args);

}  // namespace semmap
