#include "teddy/git_repo.hpp"

#include <atomic>
#include <fstream>

#include <unistd.h>

#include "teddy/error.hpp"
#include "teddy/process.hpp"

namespace teddy {

namespace {

std::vector<std::string> split_on(const std::string& text, char sep) {
  std::vector<std::string> parts;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t next = text.find(sep, pos);
    if (next == std::string::npos) {
      parts.push_back(text.substr(pos));
      break;
    }
    parts.push_back(text.substr(pos, next - pos));
    pos = next + 1;
  }
  if (!parts.empty() && parts.back().empty()) parts.pop_back();
  return parts;
}

std::filesystem::path temp_request_file() {
  static std::atomic<unsigned long long> counter{0};
  return std::filesystem::temp_directory_path() /
         ("teddy-batch-" + std::to_string(getpid()) + "-" +
          std::to_string(counter.fetch_add(1)) + ".txt");
}

}  // namespace

GitRepo::GitRepo(std::filesystem::path root) : root_(std::move(root)) {
  ProcessResult check = run_process(
      {"git", "-C", root_.string(), "rev-parse", "--is-inside-work-tree"});
  if (check.exit_code != 0)
    throw Error("not a git repository: " + root_.string());
}

std::vector<std::string> GitRepo::first_parent_commits() const {
  ProcessResult result = run_process({"git", "-C", root_.string(), "rev-list",
                                      "--first-parent", "--reverse", "HEAD"});
  if (result.exit_code != 0)
    throw Error("git rev-list failed in " + root_.string() +
                " (repository may have no commits)");
  return split_on(result.output, '\n');
}

std::vector<std::string> GitRepo::list_files(const std::string& commit,
                                             const std::string& extension) const {
  std::string output =
      run_process_checked({"git", "-C", root_.string(), "ls-tree", "-r", "-z",
                           "--name-only", commit});
  std::vector<std::string> files;
  for (std::string& path : split_on(output, '\0'))
    if (path.ends_with(extension)) files.push_back(std::move(path));
  return files;
}

std::vector<TreeFile> GitRepo::read_files(
    const std::string& commit, const std::vector<std::string>& paths,
    std::vector<std::string>& unreadable) const {
  std::vector<TreeFile> out;
  if (paths.empty()) return out;

  std::filesystem::path request_path = temp_request_file();
  {
    std::ofstream request(request_path, std::ios::binary);
    if (!request) throw IoError("cannot write " + request_path.string());
    for (const std::string& path : paths)
      request << commit << ':' << path << '\n';
  }

  std::string output;
  try {
    output = run_process_checked(
        {"git", "-C", root_.string(), "cat-file", "--batch"}, request_path);
  } catch (...) {
    std::filesystem::remove(request_path);
    throw;
  }
  std::filesystem::remove(request_path);

  // Each record: "<oid> <type> <size>\n<contents>\n" or "<object> missing\n".
  size_t pos = 0;
  for (const std::string& path : paths) {
    size_t header_end = output.find('\n', pos);
    if (header_end == std::string::npos) {
      unreadable.push_back(path);
      continue;
    }
    std::string header = output.substr(pos, header_end - pos);
    pos = header_end + 1;
    if (header.ends_with(" missing") || header.ends_with(" ambiguous")) {
      unreadable.push_back(path);
      continue;
    }
    size_t last_space = header.rfind(' ');
    size_t size = 0;
    try {
      size = static_cast<size_t>(std::stoull(header.substr(last_space + 1)));
    } catch (...) {
      unreadable.push_back(path);
      continue;
    }
    if (pos + size > output.size()) {
      unreadable.push_back(path);
      break;
    }
    out.push_back({path, output.substr(pos, size)});
    pos += size + 1;  // skip the record's trailing newline
  }
  return out;
}

}  // namespace teddy
