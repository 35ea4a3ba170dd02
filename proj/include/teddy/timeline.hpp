#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "teddy/history.hpp"

namespace teddy {

struct TimelinePaths {
  std::filesystem::path jsonl;
  std::filesystem::path html;
};

/// Serializes one occurrence as a single JSON object with fields in the order
/// {commit_index, commit_id, file_path, idiom_type, label, start_line,
/// end_line, score}.
std::string occurrence_json(const Occurrence& occurrence);

/// The timeline page: a self-contained HTML scatter plot with one
/// `<circle class="mark ...">` per occurrence (x = commit index, y = file
/// row; Py marks green, NPy marks red; hover text gives the idiom type and
/// line span). No external fetches. Only files with at least one occurrence
/// get a row.
std::string timeline_html(const std::vector<Occurrence>& dataset);

/// Writes occurrences.jsonl and timeline.html into out_dir (created if
/// needed). Files are written atomically (temp file + rename). Throws IoError
/// when out_dir is not writable.
TimelinePaths emit_timeline(const std::vector<Occurrence>& dataset,
                            const std::filesystem::path& out_dir);

}  // namespace teddy
