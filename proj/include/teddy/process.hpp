#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace teddy {

struct ProcessResult {
  int exit_code = -1;
  std::string output;  // captured stdout
};

/// Runs a command (argv, no shell) and captures stdout. stderr passes
/// through. When stdin_file is set, the child reads standard input from that
/// file. Throws IoError if the process cannot be spawned.
ProcessResult run_process(const std::vector<std::string>& argv,
                          const std::optional<std::filesystem::path>& stdin_file =
                              std::nullopt);

/// run_process that throws IoError on a nonzero exit code.
std::string run_process_checked(const std::vector<std::string>& argv,
                                const std::optional<std::filesystem::path>&
                                    stdin_file = std::nullopt);

}  // namespace teddy
