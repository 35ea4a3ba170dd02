#include "teddy/metrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace teddy {

std::vector<std::string> QueryResult::retrieved_relevant() const {
  std::vector<std::string> out;
  for (const std::string& id : ranked)
    if (relevant.count(id)) out.push_back(id);
  return out;
}

double average_precision(const std::vector<std::string>& ranked,
                         const std::set<std::string>& relevant) {
  if (relevant.empty())
    throw std::invalid_argument("average_precision: empty relevant set");
  size_t hits = 0;
  double sum = 0.0;
  for (size_t k = 0; k < ranked.size(); ++k) {
    if (!relevant.count(ranked[k])) continue;
    ++hits;
    sum += static_cast<double>(hits) / static_cast<double>(k + 1);
  }
  return sum / static_cast<double>(relevant.size());
}

double reciprocal_rank(const std::vector<std::string>& ranked,
                       const std::set<std::string>& relevant) {
  for (size_t k = 0; k < ranked.size(); ++k)
    if (relevant.count(ranked[k])) return 1.0 / static_cast<double>(k + 1);
  return 0.0;
}

std::optional<double> query_recall(const std::vector<QueryResult>& results) {
  size_t returned = 0;
  double sum = 0.0;
  for (const QueryResult& result : results) {
    if (result.ranked.empty()) continue;
    ++returned;
    sum += static_cast<double>(result.retrieved_relevant().size()) /
           static_cast<double>(result.relevant.size());
  }
  if (returned == 0) return std::nullopt;
  return sum / static_cast<double>(returned);
}

double overall_recall(const std::vector<QueryResult>& results) {
  if (results.empty())
    throw std::invalid_argument("overall_recall: empty result list");
  double sum = 0.0;
  for (const QueryResult& result : results)
    sum += static_cast<double>(result.retrieved_relevant().size()) /
           static_cast<double>(result.relevant.size());
  return sum / static_cast<double>(results.size());
}

MetricsReport compute_metrics(std::vector<QueryResult> results) {
  std::sort(results.begin(), results.end(),
            [](const QueryResult& a, const QueryResult& b) {
              return a.query_id < b.query_id;
            });

  MetricsReport report;
  report.n_queries = static_cast<int>(results.size());
  double ap_sum = 0.0, rr_sum = 0.0;
  for (const QueryResult& result : results) {
    if (result.ranked.empty()) continue;
    ++report.n_returned;
    ap_sum += average_precision(result.ranked, result.relevant);
    rr_sum += reciprocal_rank(result.ranked, result.relevant);
  }
  if (report.n_returned > 0) {
    report.map_score = ap_sum / report.n_returned;
    report.mrr = rr_sum / report.n_returned;
  }
  report.qr = query_recall(results);
  report.overall = results.empty() ? 0.0 : overall_recall(results);
  report.per_query = std::move(results);
  return report;
}

}  // namespace teddy
