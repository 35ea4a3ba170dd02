#include "teddy/history.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <thread>

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

void sort_occurrences(std::vector<Occurrence>& occurrences) {
  std::sort(occurrences.begin(), occurrences.end(),
            [](const Occurrence& a, const Occurrence& b) {
              return std::tie(a.commit_index, a.file_path, a.start_line,
                              a.end_line, a.idiom_type, a.label) <
                     std::tie(b.commit_index, b.file_path, b.start_line,
                              b.end_line, b.idiom_type, b.label);
            });
}

}  // namespace

std::vector<Occurrence> scan_tree(const std::vector<TreeFile>& files,
                                  const Catalog& catalog,
                                  const ThresholdConfig& config,
                                  std::vector<ScanWarning>* warnings) {
  require_valid(catalog);

  std::vector<std::pair<std::string, Snippet>> docs;
  for (const TreeFile& file : files) {
    for (Snippet& snippet : extract_from_source(file.text, file.path)) {
      std::string id = snippet.file_path + "#" +
                       std::to_string(snippet.start_line) + "-" +
                       std::to_string(snippet.end_line);
      docs.emplace_back(std::move(id), std::move(snippet));
    }
  }
  CloneIndex index = CloneIndex::build(docs, config);
  if (warnings)
    for (const SkipReport& skip : index.skipped())
      warnings->push_back({skip.id, skip.reason});

  std::vector<Occurrence> raw;
  for (const IdiomEntry& entry : catalog.entries()) {
    Snippet query{entry.snippet, entry.id, 1,
                  static_cast<int>(split_lines(entry.snippet).size()),
                  SnippetOrigin::Catalog};
    for (const SearchHit& hit : index.search(query, config)) {
      const IndexedDoc* doc = index.find_doc(hit.doc_id);
      raw.push_back({0, std::string(), doc->snippet.file_path,
                     entry.idiom_type, entry.label, doc->snippet.start_line,
                     doc->snippet.end_line, hit.aggregate});
    }
  }

  // Deduplicate overlapping same-(file, type, label) spans to the best score.
  std::map<std::tuple<std::string, IdiomType, Label>, std::vector<Occurrence>>
      groups;
  for (Occurrence& occ : raw)
    groups[{occ.file_path, occ.idiom_type, occ.label}].push_back(std::move(occ));

  auto better = [](const Occurrence& a, const Occurrence& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.end_line - a.start_line != b.end_line - b.start_line)
      return a.end_line - a.start_line < b.end_line - b.start_line;
    return std::tie(a.start_line, a.end_line) < std::tie(b.start_line, b.end_line);
  };

  std::vector<Occurrence> out;
  for (auto& [key, group] : groups) {
    std::sort(group.begin(), group.end(),
              [](const Occurrence& a, const Occurrence& b) {
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

  sort_occurrences(out);
  return out;
}

std::vector<Occurrence> walk_history(const std::filesystem::path& repo_path,
                                     const Catalog& catalog,
                                     const ThresholdConfig& config, int jobs,
                                     std::vector<ScanWarning>* warnings) {
  require_valid(catalog);
  GitRepo repo(repo_path);
  std::vector<std::string> commits = repo.first_parent_commits();
  if (commits.empty())
    throw Error("repository has no commits: " + repo_path.string());

  std::vector<std::vector<Occurrence>> per_commit(commits.size());
  std::vector<std::vector<ScanWarning>> per_commit_warnings(commits.size());

  std::mutex next_mutex;
  size_t next = 0;
  std::exception_ptr first_error;
  auto worker = [&]() {
    while (true) {
      size_t k;
      {
        std::lock_guard<std::mutex> lock(next_mutex);
        if (first_error || next >= commits.size()) return;
        k = next++;
      }
      try {
        std::vector<std::string> paths = repo.list_files(commits[k], ".py");
        std::vector<std::string> unreadable;
        std::vector<TreeFile> files =
            repo.read_files(commits[k], paths, unreadable);
        for (const std::string& path : unreadable)
          per_commit_warnings[k].push_back(
              {commits[k] + ":" + path, "unreadable blob"});
        std::vector<Occurrence> found =
            scan_tree(files, catalog, config, &per_commit_warnings[k]);
        for (Occurrence& occ : found) {
          occ.commit_index = static_cast<int>(k);
          occ.commit_id = commits[k];
        }
        per_commit[k] = std::move(found);
      } catch (...) {
        std::lock_guard<std::mutex> lock(next_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  int thread_count = std::max(1, std::min<int>(jobs, static_cast<int>(commits.size())));
  if (thread_count == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < thread_count; ++t) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  std::vector<Occurrence> out;
  for (std::vector<Occurrence>& chunk : per_commit)
    out.insert(out.end(), std::make_move_iterator(chunk.begin()),
               std::make_move_iterator(chunk.end()));
  if (warnings)
    for (std::vector<ScanWarning>& chunk : per_commit_warnings)
      warnings->insert(warnings->end(), chunk.begin(), chunk.end());

  sort_occurrences(out);
  return out;
}

}  // namespace teddy
