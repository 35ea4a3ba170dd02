#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "teddy/catalog.hpp"
#include "teddy/clone_index.hpp"
#include "teddy/git_repo.hpp"

namespace teddy {

/// One Py or NPy sighting at (commit, file, lines).
struct Occurrence {
  int commit_index = 0;  // 0-based, first-parent order
  std::string commit_id;
  std::string file_path;
  IdiomType idiom_type = IdiomType::VariableSwapping;
  Label label = Label::Py;
  int start_line = 1;
  int end_line = 1;
  double score = 0.0;
};

struct ScanWarning {
  std::string subject;  // file path or blob reference
  std::string reason;
};

/// Indexes the tree's extracted snippets and queries it with every catalog
/// entry (both labels). Each qualifying hit yields an occurrence at the
/// indexed snippet's location, labeled by the querying entry; overlapping
/// spans with the same (file, idiom type, label) are deduplicated to the best
/// score. Commit fields of the result are left empty.
std::vector<Occurrence> scan_tree(const std::vector<TreeFile>& files,
                                  const Catalog& catalog,
                                  const ThresholdConfig& config,
                                  std::vector<ScanWarning>* warnings = nullptr);

/// Walks every commit in first-parent chronological order and scans each
/// commit's .py files. `jobs` caps the number of worker threads; output bytes
/// are identical for any job count. Deterministic across reruns of an
/// unchanged repository.
std::vector<Occurrence> walk_history(const std::filesystem::path& repo_path,
                                     const Catalog& catalog,
                                     const ThresholdConfig& config,
                                     int jobs = 1,
                                     std::vector<ScanWarning>* warnings = nullptr);

}  // namespace teddy
