#include "teddy/process.hpp"

#include <fcntl.h>
#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cerrno>
#include <cstring>

#include "teddy/error.hpp"

namespace teddy {

ProcessResult run_process(const std::vector<std::string>& argv,
                          const std::optional<std::filesystem::path>& stdin_file) {
  if (argv.empty()) throw IoError("run_process: empty argv");

  int out_pipe[2];
  if (pipe(out_pipe) != 0)
    throw IoError(std::string("pipe failed: ") + std::strerror(errno));

  pid_t pid = fork();
  if (pid < 0) {
    close(out_pipe[0]);
    close(out_pipe[1]);
    throw IoError(std::string("fork failed: ") + std::strerror(errno));
  }

  if (pid == 0) {
    close(out_pipe[0]);
    dup2(out_pipe[1], STDOUT_FILENO);
    close(out_pipe[1]);
    if (stdin_file) {
      int fd = open(stdin_file->c_str(), O_RDONLY);
      if (fd < 0) _exit(127);
      dup2(fd, STDIN_FILENO);
      close(fd);
    } else {
      int devnull = open("/dev/null", O_RDONLY);
      if (devnull >= 0) {
        dup2(devnull, STDIN_FILENO);
        close(devnull);
      }
    }
    std::vector<char*> args;
    args.reserve(argv.size() + 1);
    for (const std::string& arg : argv) args.push_back(const_cast<char*>(arg.c_str()));
    args.push_back(nullptr);
    execvp(args[0], args.data());
    _exit(127);
  }

  close(out_pipe[1]);
  ProcessResult result;
  std::array<char, 65536> buffer;
  while (true) {
    ssize_t n = read(out_pipe[0], buffer.data(), buffer.size());
    if (n > 0) {
      result.output.append(buffer.data(), static_cast<size_t>(n));
      continue;
    }
    if (n < 0 && errno == EINTR) continue;
    break;
  }
  close(out_pipe[0]);

  int status = 0;
  pid_t waited;
  do {
    waited = waitpid(pid, &status, 0);
  } while (waited < 0 && errno == EINTR);
  if (waited < 0)
    throw IoError(std::string("waitpid failed: ") + std::strerror(errno));
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string run_process_checked(
    const std::vector<std::string>& argv,
    const std::optional<std::filesystem::path>& stdin_file) {
  ProcessResult result = run_process(argv, stdin_file);
  if (result.exit_code != 0) {
    std::string cmd;
    for (const std::string& arg : argv) {
      if (!cmd.empty()) cmd += ' ';
      cmd += arg;
    }
    throw IoError("command failed (exit " + std::to_string(result.exit_code) +
                  "): " + cmd);
  }
  return result.output;
}

}  // namespace teddy
