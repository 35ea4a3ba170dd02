#include "teddy/clone_index.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "teddy/error.hpp"
#include "teddy/similarity.hpp"
#include "teddy/token.hpp"

namespace teddy {

namespace {

constexpr char kGramSeparator = '\x1f';

std::vector<std::string> gram_strings(const std::vector<std::string>& tokens,
                                      int n) {
  std::vector<std::string> grams;
  size_t len = tokens.size();
  if (len == 0) return grams;
  size_t width = std::min<size_t>(static_cast<size_t>(n), len);
  for (size_t i = 0; i + width <= len; ++i) {
    std::string gram;
    for (size_t j = 0; j < width; ++j) {
      if (j) gram += kGramSeparator;
      gram += tokens[i + j];
    }
    grams.push_back(std::move(gram));
  }
  std::sort(grams.begin(), grams.end());
  grams.erase(std::unique(grams.begin(), grams.end()), grams.end());
  return grams;
}

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ' ';
    out += tokens[i];
  }
  return out;
}

size_t sorted_intersection_size(const std::vector<int>& a,
                                const std::vector<int>& b) {
  size_t count = 0, i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j])
      ++i;
    else if (a[i] > b[j])
      ++j;
    else
      ++count, ++i, ++j;
  }
  return count;
}

bool lexes_to_reps(const Snippet& snippet, RepresentationSet& reps,
                   std::string& reason) {
  std::string text = normalized_snippet_text(snippet.source_text);
  std::vector<Token> tokens;
  try {
    tokens = tokenize(text);
  } catch (const LexError& e) {
    reason = e.what();
    return false;
  }
  reps = representations(tokens);
  if (reps.r1.empty()) {
    reason = "no tokens after normalization";
    return false;
  }
  return true;
}

}  // namespace

std::string_view measure_name(Measure measure) {
  return measure == Measure::Ntr ? "NTR" : "TSR";
}

ThresholdConfig config_c1() { return {Measure::Tsr, {0, 0, 0, 0}, 4, 10}; }
ThresholdConfig config_c2() { return {Measure::Ntr, {0, 0, 0, 0}, 4, 10}; }
ThresholdConfig config_c3() { return {Measure::Tsr, {40, 40, 40, 40}, 4, 10}; }
ThresholdConfig config_c4() { return {Measure::Ntr, {40, 40, 40, 40}, 4, 10}; }

ThresholdConfig default_prevention_config() { return config_c4(); }
ThresholdConfig default_detection_config() {
  return {Measure::Ntr, {20, 20, 20, 20}, 4, 10};
}

std::string normalized_snippet_text(std::string_view text) {
  size_t end = text.find_last_not_of(" \t\r\n");
  if (end == std::string_view::npos) return std::string();
  return std::string(text.substr(0, end + 1));
}

std::array<int, 4> score_levels(const RepresentationSet& query,
                                const RepresentationSet& candidate,
                                const ThresholdConfig& config) {
  std::array<int, 4> scores{};
  for (int level = 0; level < kRepresentationLevels; ++level) {
    const auto& q = query.level(level);
    const auto& c = candidate.level(level);
    if (q.empty() || c.empty()) {
      scores[level] = 0;
      continue;
    }
    scores[level] = config.measure == Measure::Ntr
                        ? ngram_token_ratio(q, c, config.ngram_n)
                        : token_set_ratio(q, c);
  }
  return scores;
}

CloneIndex CloneIndex::build(
    const std::vector<std::pair<std::string, Snippet>>& docs,
    const ThresholdConfig& config) {
  CloneIndex index;
  index.ngram_n_ = config.ngram_n;

  for (const auto& [id, snippet] : docs) {
    RepresentationSet reps;
    std::string reason;
    if (!lexes_to_reps(snippet, reps, reason)) {
      index.skipped_.push_back({id, reason});
      continue;
    }

    IndexedDoc doc;
    doc.id = id;
    doc.snippet = snippet;
    doc.reps = std::move(reps);
    size_t doc_pos = index.docs_.size();

    for (int level = 0; level < kRepresentationLevels; ++level) {
      doc.distinct_tokens[level] = sorted_distinct(doc.reps.level(level));
      doc.distinct_joined[level] = join_tokens(doc.distinct_tokens[level]);

      auto& interner = index.gram_interner_[level];
      auto& postings = index.postings_[level];
      for (std::string& gram : gram_strings(doc.reps.level(level), config.ngram_n)) {
        auto [it, inserted] =
            interner.emplace(std::move(gram), static_cast<int>(interner.size()));
        if (inserted) postings.emplace_back();
        doc.gram_ids[level].push_back(it->second);
        postings[static_cast<size_t>(it->second)].push_back(
            static_cast<int>(doc_pos));
      }
      std::sort(doc.gram_ids[level].begin(), doc.gram_ids[level].end());
    }

    index.doc_by_id_.emplace(doc.id, doc_pos);
    index.docs_.push_back(std::move(doc));
  }
  return index;
}

const IndexedDoc* CloneIndex::find_doc(const std::string& id) const {
  auto it = doc_by_id_.find(id);
  return it == doc_by_id_.end() ? nullptr : &docs_[it->second];
}

std::vector<SearchHit> CloneIndex::search(const Snippet& query,
                                          const ThresholdConfig& config) const {
  if (config.ngram_n != ngram_n_)
    throw std::invalid_argument(
        "search config ngram_n does not match the index");
  if (docs_.empty()) return {};

  std::string text = normalized_snippet_text(query.source_text);
  std::vector<Token> tokens = tokenize(text);  // lex errors propagate
  RepresentationSet query_reps = representations(tokens);
  if (query_reps.r1.empty()) return {};

  // Distinct query grams per level: interned ids (known grams) plus the total
  // distinct count, which is the NTR denominator.
  std::array<std::vector<int>, 4> query_gram_ids;
  std::array<size_t, 4> query_gram_totals{};
  for (int level = 0; level < kRepresentationLevels; ++level) {
    std::vector<std::string> grams =
        gram_strings(query_reps.level(level), ngram_n_);
    query_gram_totals[level] = grams.size();
    for (const std::string& gram : grams) {
      auto it = gram_interner_[level].find(gram);
      if (it != gram_interner_[level].end())
        query_gram_ids[level].push_back(it->second);
    }
    std::sort(query_gram_ids[level].begin(), query_gram_ids[level].end());
  }

  // Candidate set: every doc sharing at least one query gram at any level,
  // or everything when all thresholds are zero.
  std::vector<char> is_candidate(docs_.size(), 0);
  if (config.all_thresholds_zero()) {
    std::fill(is_candidate.begin(), is_candidate.end(), 1);
  } else {
    for (int level = 0; level < kRepresentationLevels; ++level)
      for (int gram_id : query_gram_ids[level])
        for (int doc_pos : postings_[level][static_cast<size_t>(gram_id)])
          is_candidate[static_cast<size_t>(doc_pos)] = 1;
  }

  std::array<std::vector<std::string>, 4> query_distinct;
  std::array<std::unordered_map<std::string_view, int>, 4> tsr_cache;
  if (config.measure == Measure::Tsr) {
    for (int level = 0; level < kRepresentationLevels; ++level)
      query_distinct[level] = sorted_distinct(query_reps.level(level));
  }

  std::vector<SearchHit> hits;
  for (size_t pos = 0; pos < docs_.size(); ++pos) {
    if (!is_candidate[pos]) continue;
    const IndexedDoc& doc = docs_[pos];
    SearchHit hit;
    hit.doc_id = doc.id;
    bool qualifies = true;
    for (int level = 0; level < kRepresentationLevels; ++level) {
      int score = 0;
      if (config.measure == Measure::Ntr) {
        size_t shared =
            sorted_intersection_size(query_gram_ids[level], doc.gram_ids[level]);
        score = round_ratio_100(static_cast<long long>(shared),
                                static_cast<long long>(query_gram_totals[level]));
      } else {
        auto [it, inserted] =
            tsr_cache[level].try_emplace(doc.distinct_joined[level], 0);
        if (inserted)
          it->second = token_set_ratio_on_sorted(query_distinct[level],
                                                 doc.distinct_tokens[level]);
        score = it->second;
      }
      hit.scores[level] = score;
      if (score < config.thresholds[static_cast<size_t>(level)])
        qualifies = false;
    }
    if (!qualifies) continue;
    hit.qualifies = true;
    hit.aggregate =
        (hit.scores[0] + hit.scores[1] + hit.scores[2] + hit.scores[3]) / 4.0;
    hits.push_back(std::move(hit));
  }

  std::sort(hits.begin(), hits.end(), [](const SearchHit& a, const SearchHit& b) {
    if (a.aggregate != b.aggregate) return a.aggregate > b.aggregate;
    return a.doc_id < b.doc_id;
  });
  if (hits.size() > static_cast<size_t>(config.top_k))
    hits.resize(static_cast<size_t>(config.top_k));
  return hits;
}

}  // namespace teddy
