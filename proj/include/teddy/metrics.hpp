#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace teddy {

/// Retrieval outcome for one query: the ranked list of retrieved item ids
/// (duplicate-free) and the set of all relevant item ids A_i.
struct QueryResult {
  std::string query_id;
  std::vector<std::string> ranked;
  std::set<std::string> relevant;

  /// R_i — the relevant items that were actually retrieved.
  std::vector<std::string> retrieved_relevant() const;
};

/// Standard average precision: (1/|relevant|) * sum over ranks k holding a
/// relevant item of (relevant items in the top k) / k. Throws
/// std::invalid_argument when the relevant set is empty.
double average_precision(const std::vector<std::string>& ranked,
                         const std::set<std::string>& relevant);

/// 1/k for the first rank k holding a relevant item; 0 when none retrieved.
double reciprocal_rank(const std::vector<std::string>& ranked,
                       const std::set<std::string>& relevant);

/// QR = (1/|r|) * sum of |R_i|/|A_i| over queries with non-empty ranked
/// lists. Undefined (nullopt) when no query returned results.
std::optional<double> query_recall(const std::vector<QueryResult>& results);

/// OR = (1/|R|) * sum of |R_i|/|A_i| over all queries; empty-result queries
/// contribute zero. Throws std::invalid_argument on an empty result list.
double overall_recall(const std::vector<QueryResult>& results);

/// MAP/MRR/QR/OR over one query set. MAP and MRR average over the queries
/// that returned results (the only reading under which high precision can
/// coexist with near-zero overall recall); both are 0 when nothing returned.
struct MetricsReport {
  double map_score = 0.0;
  double mrr = 0.0;
  std::optional<double> qr;
  double overall = 0.0;
  int n_queries = 0;
  int n_returned = 0;
  std::vector<QueryResult> per_query;
};

/// Computes all four metrics. per_query is sorted by query id so downstream
/// output is deterministic regardless of input order.
MetricsReport compute_metrics(std::vector<QueryResult> results);

}  // namespace teddy
