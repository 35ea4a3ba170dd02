#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "teddy/process.hpp"
#include "teddy/snippet.hpp"

namespace teddy::test {

inline std::filesystem::path data_dir() { return TEDDY_DATA_DIR; }
inline std::filesystem::path catalog_dir() { return data_dir() / "catalog"; }
inline std::filesystem::path truth_manifest() {
  return data_dir() / "truth" / "truth.json";
}
inline std::filesystem::path fixture_dir() { return TEDDY_FIXTURE_DIR; }
inline std::string cli_path() { return TEDDY_CLI_PATH; }

/// Unique scratch directory, removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::mt19937_64 rng(std::random_device{}());
    path_ = std::filesystem::temp_directory_path() /
            ("teddy-test-" + std::to_string(rng()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

  std::filesystem::path write(const std::string& name,
                              const std::string& content) const {
    std::filesystem::path file = path_ / name;
    std::filesystem::create_directories(file.parent_path());
    std::ofstream out(file, std::ios::binary);
    out << content;
    return file;
  }

 private:
  std::filesystem::path path_;
};

inline Snippet make_snippet(const std::string& text,
                            const std::string& path = "query.py") {
  return Snippet{text, path, 1,
                 static_cast<int>(split_lines(text).size()),
                 SnippetOrigin::FileWindow};
}

inline ProcessResult run_cli(
    std::vector<std::string> args,
    const std::optional<std::filesystem::path>& stdin_file = std::nullopt) {
  args.insert(args.begin(), cli_path());
  return run_process(args, stdin_file);
}

inline void git(const std::filesystem::path& repo,
                const std::vector<std::string>& args) {
  std::vector<std::string> argv{"git", "-C", repo.string()};
  argv.insert(argv.end(), args.begin(), args.end());
  run_process_checked(argv);
}

/// Creates a git repo with deterministic author/committer identity.
inline void init_repo(const std::filesystem::path& repo) {
  std::filesystem::create_directories(repo);
  git(repo, {"init", "-q"});
  git(repo, {"config", "user.email", "tests@example.com"});
  git(repo, {"config", "user.name", "Test Runner"});
}

inline void commit_all(const std::filesystem::path& repo,
                       const std::string& message, int sequence) {
  git(repo, {"add", "-A"});
  std::string stamp =
      "2024-03-0" + std::to_string(1 + sequence) + "T00:00:00Z";
  git(repo, {"commit", "-q", "--no-gpg-sign", "--date", stamp, "-m", message});
}

}  // namespace teddy::test
