#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "teddy/catalog.hpp"
#include "teddy/clone_index.hpp"

namespace teddy {

/// A non-Pythonic match in a patch, paired with the Pythonic counterpart to
/// suggest in its place.
struct Recommendation {
  std::string file_path;
  int start_line = 1;
  int end_line = 1;
  std::string matched_npy;
  std::string suggested_py;
  double score = 0.0;
  IdiomType idiom_type = IdiomType::VariableSwapping;
};

/// Matches the added lines of a unified diff against the NPy half of the
/// catalog. Per (file, idiom type), overlapping spans collapse to the
/// highest-scoring recommendation; output is sorted by (file, start line).
/// Diff parse errors propagate; an invalid catalog raises ValidationError.
std::vector<Recommendation> analyze_diff(std::string_view diff,
                                         const Catalog& catalog,
                                         const ThresholdConfig& config);

/// Renders recommendations as a Markdown review comment: one section per
/// recommendation with the file and line range, idiom type, the catalog
/// description of the NPy pattern, and the suggested Py snippet in a fenced
/// code block. Empty input produces an empty string.
std::string render_comment(const std::vector<Recommendation>& recs,
                           const Catalog& catalog);

}  // namespace teddy
