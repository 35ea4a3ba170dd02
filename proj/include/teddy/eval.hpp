#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "teddy/catalog.hpp"
#include "teddy/clone_index.hpp"
#include "teddy/metrics.hpp"

namespace teddy {

/// One labeled corpus file. group is one of Normal, Py, NPy.
struct CorpusItem {
  std::string id;
  std::string path;  // relative to the manifest's directory
  std::string group;
};

/// Labeled corpus plus the explicit per-query relevant sets.
struct GroundTruth {
  std::vector<CorpusItem> corpus;
  std::map<std::string, std::set<std::string>> relevance;
  std::filesystem::path base_dir;
};

/// Loads a ground-truth manifest:
///   {"corpus": [{"id", "path", "group"}, ...],
///    "relevance": {"<query id>": ["<item id>", ...], ...}}
GroundTruth load_truth(const std::filesystem::path& manifest);

/// Structural checks of a ground truth against a catalog: corpus ids unique,
/// groups valid, relevance keys are catalog entries, relevance values are
/// corpus items, and every catalog entry has a non-empty relevant set.
std::vector<Violation> validate_truth(const GroundTruth& truth,
                                      const Catalog& catalog);

/// Indexes the corpus files (window + function-block snippets), issues every
/// catalog entry as a query, and reduces ranked snippet hits to ranked corpus
/// item ids (best rank per file). Validation failures abort with the named
/// violations. Queries may run on up to `jobs` threads; per-query results are
/// ordered by query id, so the report is deterministic.
MetricsReport evaluate(const Catalog& catalog, const GroundTruth& truth,
                       const ThresholdConfig& config, int jobs = 1);

struct NamedConfig {
  std::string name;
  ThresholdConfig config;
};

/// C1 (TSR 0x4), C2 (NTR 0x4), C3 (TSR 40x4), C4 (NTR 40x4).
std::vector<NamedConfig> builtin_configs();

struct SweepRow {
  std::string name;
  ThresholdConfig config;
  MetricsReport report;
};

/// One evaluation per named config. Throws std::invalid_argument on an empty
/// config list.
std::vector<SweepRow> sweep(const Catalog& catalog, const GroundTruth& truth,
                            const std::vector<NamedConfig>& configs,
                            int jobs = 1);

/// Aligned text table with columns name, measure, T0..T3, MAP, QR, OR, MRR.
std::string render_sweep_table(const std::vector<SweepRow>& rows);

/// The same table as machine-readable JSON (an array of row objects).
std::string sweep_to_json(const std::vector<SweepRow>& rows);

}  // namespace teddy
