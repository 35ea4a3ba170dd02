#include "teddy/recommend.hpp"

#include <algorithm>
#include <map>

#include "teddy/error.hpp"
#include "teddy/snippet.hpp"

namespace teddy {

namespace {

void require_valid(const Catalog& catalog) {
  std::vector<Violation> violations = validate_catalog(catalog);
  if (violations.empty()) return;
  std::string message = "catalog failed validation:";
  for (const Violation& v : violations)
    message += "\n  [" + v.rule + "] " + v.entry_id + ": " + v.detail;
  throw ValidationError(message);
}

bool spans_overlap(int a_start, int a_end, int b_start, int b_end) {
  return a_start <= b_end && b_start <= a_end;
}

}  // namespace

std::vector<Recommendation> analyze_diff(std::string_view diff,
                                         const Catalog& catalog,
                                         const ThresholdConfig& config) {
  require_valid(catalog);

  std::vector<std::pair<std::string, Snippet>> npy_docs;
  for (const IdiomEntry* entry : catalog.entries_with_label(Label::NPy)) {
    Snippet snippet{entry->snippet, entry->id, 1,
                    static_cast<int>(split_lines(entry->snippet).size()),
                    SnippetOrigin::Catalog};
    npy_docs.emplace_back(entry->id, std::move(snippet));
  }
  CloneIndex index = CloneIndex::build(npy_docs, config);

  std::vector<Recommendation> raw;
  for (const Snippet& candidate : extract_from_diff(diff)) {
    std::vector<SearchHit> hits = index.search(candidate, config);
    if (hits.empty()) continue;
    const SearchHit& top = hits.front();
    const IdiomEntry& matched = catalog.entry(top.doc_id);
    raw.push_back({candidate.file_path, candidate.start_line,
                   candidate.end_line, matched.id, matched.counterpart_id,
                   top.aggregate, matched.idiom_type});
  }

  // Collapse overlapping spans per (file, idiom type) to the best hit.
  std::map<std::pair<std::string, IdiomType>, std::vector<Recommendation>> groups;
  for (Recommendation& rec : raw)
    groups[{rec.file_path, rec.idiom_type}].push_back(std::move(rec));

  auto better = [](const Recommendation& a, const Recommendation& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.end_line - a.start_line != b.end_line - b.start_line)
      return a.end_line - a.start_line < b.end_line - b.start_line;
    return std::tie(a.start_line, a.matched_npy) <
           std::tie(b.start_line, b.matched_npy);
  };

  std::vector<Recommendation> out;
  for (auto& [key, group] : groups) {
    std::sort(group.begin(), group.end(),
              [](const Recommendation& a, const Recommendation& b) {
                return std::tie(a.start_line, a.end_line) <
                       std::tie(b.start_line, b.end_line);
              });
    size_t i = 0;
    while (i < group.size()) {
      size_t best = i;
      int cluster_end = group[i].end_line;
      size_t j = i + 1;
      while (j < group.size() &&
             spans_overlap(group[j].start_line, group[j].end_line,
                           group[i].start_line, cluster_end)) {
        cluster_end = std::max(cluster_end, group[j].end_line);
        if (better(group[j], group[best])) best = j;
        ++j;
      }
      out.push_back(group[best]);
      i = j;
    }
  }

  std::sort(out.begin(), out.end(),
            [](const Recommendation& a, const Recommendation& b) {
              return std::tie(a.file_path, a.start_line, a.end_line) <
                     std::tie(b.file_path, b.start_line, b.end_line);
            });
  return out;
}

std::string render_comment(const std::vector<Recommendation>& recs,
                           const Catalog& catalog) {
  if (recs.empty()) return std::string();

  std::string out = "## Pythonic idiom suggestions\n";
  for (const Recommendation& rec : recs) {
    const IdiomEntry& npy = catalog.entry(rec.matched_npy);
    const IdiomEntry& py = catalog.entry(rec.suggested_py);
    if (py.id != npy.counterpart_id)
      throw Error("recommendation does not name the catalog counterpart");

    out += "\n### `" + rec.file_path + "` lines " +
           std::to_string(rec.start_line) + "-" + std::to_string(rec.end_line) +
           " (" + std::string(idiom_type_name(rec.idiom_type)) + ")\n\n";
    out += npy.description + "\n\n";
    out += "Consider this Pythonic form instead:\n\n";
    out += "```python\n";
    std::string snippet = normalized_snippet_text(py.snippet);
    out += snippet;
    out += "\n```\n";
  }
  return out;
}

}  // namespace teddy
