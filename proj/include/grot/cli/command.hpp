#pragma once

#include <string>
#include <vector>

namespace grot::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsageError = 2 };

struct CommandOutput {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

// argv[0] is the program name. Never throws; errors become exit code 2 with a
// message on `err`.
CommandOutput run_command(const std::vector<std::string>& argv);

}  // namespace grot::cli
