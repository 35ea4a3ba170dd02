#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace teddy {

struct TreeFile {
  std::string path;
  std::string text;
};

/// Read-only access to a local git repository through the git CLI.
class GitRepo {
 public:
  explicit GitRepo(std::filesystem::path root);

  /// Commit ids following the first parent only, oldest first. Throws Error
  /// when the path is not a git repository or has no commits.
  std::vector<std::string> first_parent_commits() const;

  /// Paths of files ending in `extension` in the commit's tree.
  std::vector<std::string> list_files(const std::string& commit,
                                      const std::string& extension) const;

  /// Reads the given blobs in one git cat-file batch. Unreadable blobs are
  /// returned in `unreadable` instead of failing the whole read.
  std::vector<TreeFile> read_files(const std::string& commit,
                                   const std::vector<std::string>& paths,
                                   std::vector<std::string>& unreadable) const;

  const std::filesystem::path& root() const { return root_; }

 private:
  std::filesystem::path root_;
};

}  // namespace teddy
