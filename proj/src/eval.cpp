#include "teddy/eval.hpp"

#include <algorithm>
#include <cstdio>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "teddy/error.hpp"
#include "teddy/io_util.hpp"
#include "teddy/snippet.hpp"

namespace teddy {

GroundTruth load_truth(const std::filesystem::path& manifest) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_file(manifest));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("cannot parse " + manifest.string() + ": " + e.what());
  }

  GroundTruth truth;
  truth.base_dir = manifest.parent_path();
  try {
    for (const auto& item : doc.at("corpus")) {
      truth.corpus.push_back({item.at("id").get<std::string>(),
                              item.at("path").get<std::string>(),
                              item.at("group").get<std::string>()});
    }
    for (const auto& [query_id, items] : doc.at("relevance").items()) {
      std::set<std::string>& relevant = truth.relevance[query_id];
      for (const auto& id : items) relevant.insert(id.get<std::string>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(manifest.string() + ": bad manifest: " + e.what());
  }
  return truth;
}

std::vector<Violation> validate_truth(const GroundTruth& truth,
                                      const Catalog& catalog) {
  std::vector<Violation> violations;

  std::set<std::string> corpus_ids;
  for (const CorpusItem& item : truth.corpus) {
    if (!corpus_ids.insert(item.id).second)
      violations.push_back({item.id, "duplicate-corpus-id",
                            "corpus id appears more than once"});
    if (item.group != "Normal" && item.group != "Py" && item.group != "NPy")
      violations.push_back(
          {item.id, "unknown-group", "group '" + item.group + "' is not one of Normal/Py/NPy"});
  }

  for (const auto& [query_id, relevant] : truth.relevance) {
    if (!catalog.contains(query_id))
      violations.push_back({query_id, "unknown-query",
                            "relevance names a query that is not a catalog entry"});
    for (const std::string& item_id : relevant)
      if (!corpus_ids.count(item_id))
        violations.push_back({query_id, "unknown-corpus-item",
                              "relevant item '" + item_id + "' is not in the corpus"});
  }

  for (const IdiomEntry& entry : catalog.entries()) {
    auto it = truth.relevance.find(entry.id);
    if (it == truth.relevance.end() || it->second.empty())
      violations.push_back(
          {entry.id, "empty-relevant-set", "query with empty relevant set"});
  }

  return violations;
}

namespace {

void require_valid(const Catalog& catalog, const GroundTruth& truth) {
  std::vector<Violation> violations = validate_catalog(catalog);
  std::vector<Violation> truth_violations = validate_truth(truth, catalog);
  violations.insert(violations.end(), truth_violations.begin(),
                    truth_violations.end());
  if (violations.empty()) return;
  std::string message = "ground truth failed validation:";
  for (const Violation& v : violations)
    message += "\n  [" + v.rule + "] " + v.entry_id + ": " + v.detail;
  throw ValidationError(message);
}

}  // namespace

MetricsReport evaluate(const Catalog& catalog, const GroundTruth& truth,
                       const ThresholdConfig& config, int jobs) {
  require_valid(catalog, truth);

  // Snippet documents, tagged with the corpus item they came from.
  std::vector<std::pair<std::string, Snippet>> docs;
  std::map<std::string, std::string> item_of_doc;
  for (const CorpusItem& item : truth.corpus) {
    std::string text = read_file(truth.base_dir / item.path);
    for (Snippet& snippet : extract_from_source(text, item.path)) {
      std::string doc_id = item.id + "#" + std::to_string(snippet.start_line) +
                           "-" + std::to_string(snippet.end_line);
      item_of_doc.emplace(doc_id, item.id);
      docs.emplace_back(std::move(doc_id), std::move(snippet));
    }
  }
  CloneIndex index = CloneIndex::build(docs, config);

  const std::vector<IdiomEntry>& entries = catalog.entries();
  std::vector<QueryResult> results(entries.size());

  std::mutex next_mutex;
  size_t next = 0;
  auto worker = [&]() {
    while (true) {
      size_t k;
      {
        std::lock_guard<std::mutex> lock(next_mutex);
        if (next >= entries.size()) return;
        k = next++;
      }
      const IdiomEntry& entry = entries[k];
      Snippet query{entry.snippet, entry.id, 1,
                    static_cast<int>(split_lines(entry.snippet).size()),
                    SnippetOrigin::Catalog};
      QueryResult result;
      result.query_id = entry.id;
      result.relevant = truth.relevance.at(entry.id);
      std::set<std::string> seen;
      for (const SearchHit& hit : index.search(query, config)) {
        const std::string& item_id = item_of_doc.at(hit.doc_id);
        if (seen.insert(item_id).second) result.ranked.push_back(item_id);
      }
      results[k] = std::move(result);
    }
  };

  int thread_count =
      std::max(1, std::min<int>(jobs, static_cast<int>(entries.size())));
  if (thread_count == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < thread_count; ++t) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
  }

  return compute_metrics(std::move(results));
}

std::vector<NamedConfig> builtin_configs() {
  return {{"C1", config_c1()},
          {"C2", config_c2()},
          {"C3", config_c3()},
          {"C4", config_c4()}};
}

std::vector<SweepRow> sweep(const Catalog& catalog, const GroundTruth& truth,
                            const std::vector<NamedConfig>& configs, int jobs) {
  if (configs.empty())
    throw std::invalid_argument("sweep: no configurations given");
  std::vector<SweepRow> rows;
  for (const NamedConfig& named : configs)
    rows.push_back(
        {named.name, named.config, evaluate(catalog, truth, named.config, jobs)});
  return rows;
}

namespace {

std::string format_metric(double value) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%.3f", value);
  return buf;
}

}  // namespace

std::string render_sweep_table(const std::vector<SweepRow>& rows) {
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"name", "measure", "T0", "T1", "T2", "T3", "MAP", "QR",
                   "OR", "MRR"});
  for (const SweepRow& row : rows) {
    const ThresholdConfig& c = row.config;
    const MetricsReport& r = row.report;
    cells.push_back({row.name, std::string(measure_name(c.measure)),
                     std::to_string(c.thresholds[0]),
                     std::to_string(c.thresholds[1]),
                     std::to_string(c.thresholds[2]),
                     std::to_string(c.thresholds[3]),
                     format_metric(r.map_score),
                     r.qr ? format_metric(*r.qr) : "n/a",
                     format_metric(r.overall), format_metric(r.mrr)});
  }

  std::vector<size_t> widths(cells[0].size(), 0);
  for (const auto& row : cells)
    for (size_t i = 0; i < row.size(); ++i)
      widths[i] = std::max(widths[i], row[i].size());

  std::string out;
  for (const auto& row : cells) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out += "  ";
      out += row[i];
      out.append(widths[i] - row[i].size(), ' ');
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += '\n';
  }
  return out;
}

std::string sweep_to_json(const std::vector<SweepRow>& rows) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const SweepRow& row : rows) {
    nlohmann::ordered_json item;
    item["name"] = row.name;
    item["measure"] = measure_name(row.config.measure);
    item["thresholds"] = row.config.thresholds;
    item["ngram_n"] = row.config.ngram_n;
    item["top_k"] = row.config.top_k;
    item["map"] = row.report.map_score;
    if (row.report.qr)
      item["qr"] = *row.report.qr;
    else
      item["qr"] = nullptr;
    item["or"] = row.report.overall;
    item["mrr"] = row.report.mrr;
    item["n_queries"] = row.report.n_queries;
    item["n_returned"] = row.report.n_returned;
    doc.push_back(std::move(item));
  }
  return doc.dump(2);
}

}  // namespace teddy
