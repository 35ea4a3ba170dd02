#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "teddy/representation.hpp"
#include "teddy/snippet.hpp"

namespace teddy {

enum class Measure { Ntr, Tsr };

std::string_view measure_name(Measure measure);

/// Similarity measure plus the per-representation thresholds T0..T3 applied
/// conjunctively: a hit qualifies only when every level score meets its
/// threshold.
struct ThresholdConfig {
  Measure measure = Measure::Ntr;
  std::array<int, 4> thresholds{40, 40, 40, 40};
  int ngram_n = 4;
  int top_k = 10;

  bool all_thresholds_zero() const {
    return thresholds[0] == 0 && thresholds[1] == 0 && thresholds[2] == 0 &&
           thresholds[3] == 0;
  }
};

/// The built-in configurations exercised by the evaluation sweep.
ThresholdConfig config_c1();  // TSR,  0/0/0/0
ThresholdConfig config_c2();  // NTR,  0/0/0/0
ThresholdConfig config_c3();  // TSR, 40/40/40/40
ThresholdConfig config_c4();  // NTR, 40/40/40/40

/// Default for prevention (diff review): C4, the high-precision setting.
ThresholdConfig default_prevention_config();
/// Default for detection (history/tree scans): recall-leaning NTR 20x4.
ThresholdConfig default_detection_config();

struct SearchHit {
  std::string doc_id;
  std::array<int, 4> scores{};   // r0..r3, each in [0,100]
  double aggregate = 0.0;        // mean of the four scores
  bool qualifies = false;
};

struct SkipReport {
  std::string id;
  std::string reason;
};

struct IndexedDoc {
  std::string id;
  Snippet snippet;
  RepresentationSet reps;
  // Per level: sorted distinct interned n-gram ids and sorted distinct tokens.
  std::array<std::vector<int>, 4> gram_ids;
  std::array<std::vector<std::string>, 4> distinct_tokens;
  std::array<std::string, 4> distinct_joined;
};

/// Scores a query representation set against a candidate one at all four
/// levels with the configured measure. This is the plain reference path; the
/// index reproduces it with interned n-grams and memoization.
std::array<int, 4> score_levels(const RepresentationSet& query,
                                const RepresentationSet& candidate,
                                const ThresholdConfig& config);

/// Immutable token n-gram index over snippets. Searches look at every
/// document sharing at least one query n-gram at any level; with all-zero
/// thresholds every document is scored, so recall-1.0 configurations stay
/// exact. Safe for concurrent searches after construction.
class CloneIndex {
 public:
  static CloneIndex build(const std::vector<std::pair<std::string, Snippet>>& docs,
                          const ThresholdConfig& config);

  size_t size() const { return docs_.size(); }
  const std::vector<SkipReport>& skipped() const { return skipped_; }
  const std::vector<IndexedDoc>& docs() const { return docs_; }
  int ngram_n() const { return ngram_n_; }

  /// nullptr when the id was not indexed.
  const IndexedDoc* find_doc(const std::string& id) const;

  /// Qualifying hits sorted by aggregate descending, ties by doc id
  /// ascending, truncated to config.top_k. Lex errors in the query propagate;
  /// a query with no tokens after normalization returns no hits. Throws
  /// std::invalid_argument when config.ngram_n differs from the build-time n.
  std::vector<SearchHit> search(const Snippet& query,
                                const ThresholdConfig& config) const;

 private:
  std::vector<IndexedDoc> docs_;
  std::vector<SkipReport> skipped_;
  std::map<std::string, size_t> doc_by_id_;
  // Per level: interner from gram text to id, and postings gram id -> docs.
  std::array<std::map<std::string, int>, 4> gram_interner_;
  std::array<std::vector<std::vector<int>>, 4> postings_;
  int ngram_n_ = 4;
};

/// Strips trailing whitespace and line breaks; matching treats snippets as
/// equal up to trailing layout.
std::string normalized_snippet_text(std::string_view text);

}  // namespace teddy
