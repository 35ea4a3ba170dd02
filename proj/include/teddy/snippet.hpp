#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace teddy {

enum class SnippetOrigin { FileWindow, FunctionBlock, DiffHunk, Catalog };

/// A slice of Python source with exact file/line provenance. start_line and
/// end_line are 1-based and inclusive; source_text holds exactly
/// end_line - start_line + 1 lines, without a trailing line break.
struct Snippet {
  std::string source_text;
  std::string file_path;
  int start_line = 1;
  int end_line = 1;
  SnippetOrigin origin = SnippetOrigin::FileWindow;
};

/// Window width in logical (non-blank) lines for sliding-window extraction.
inline constexpr int kDefaultWindowLines = 8;

/// Slices a source file into candidate snippets: one block per function
/// definition (top-level or nested) plus sliding windows of `window_lines`
/// consecutive non-blank lines with stride 1 (a single clamped window when the
/// file is shorter). Identical spans are emitted once. Blank lines inside a
/// window are retained in source_text but not counted toward its width.
std::vector<Snippet> extract_from_source(std::string_view source,
                                         const std::string& path,
                                         int window_lines = kDefaultWindowLines);

/// Extracts one snippet per run of added lines from each hunk of each .py file
/// in a unified diff, with line numbers mapped to the post-image file.
/// Context and removed lines are excluded. Throws ParseError on a malformed
/// hunk header.
std::vector<Snippet> extract_from_diff(std::string_view diff);

/// Splits text into lines; a trailing newline does not create an extra line.
std::vector<std::string> split_lines(std::string_view text);

const char* snippet_origin_name(SnippetOrigin origin);

}  // namespace teddy
