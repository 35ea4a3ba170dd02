#include "teddy/similarity.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace teddy {

namespace {

constexpr char kGramSeparator = '\x1f';

std::set<std::string> ngram_set(std::span<const std::string> tokens, int n) {
  std::set<std::string> grams;
  size_t len = tokens.size();
  size_t width = std::min<size_t>(static_cast<size_t>(n), len);
  for (size_t i = 0; i + width <= len; ++i) {
    std::string gram;
    for (size_t j = 0; j < width; ++j) {
      if (j) gram += kGramSeparator;
      gram += tokens[i + j];
    }
    grams.insert(std::move(gram));
  }
  return grams;
}

struct Match {
  size_t a;
  size_t b;
  size_t size;
};

// difflib-style longest match within a[alo,ahi) x b[blo,bhi): the longest
// common substring, ties broken by smallest start in a, then in b.
Match find_longest_match(std::string_view a,
                         const std::unordered_map<char, std::vector<size_t>>& b2j,
                         size_t alo, size_t ahi, size_t blo, size_t bhi) {
  Match best{alo, blo, 0};
  std::unordered_map<size_t, size_t> j2len;
  std::unordered_map<size_t, size_t> new_j2len;
  for (size_t i = alo; i < ahi; ++i) {
    new_j2len.clear();
    auto it = b2j.find(a[i]);
    if (it != b2j.end()) {
      for (size_t j : it->second) {
        if (j < blo) continue;
        if (j >= bhi) break;
        size_t k = 1;
        if (j > blo) {
          auto prev = j2len.find(j - 1);
          if (prev != j2len.end()) k = prev->second + 1;
        }
        new_j2len[j] = k;
        if (k > best.size) {
          best = {i - k + 1, j - k + 1, k};
        }
      }
    }
    std::swap(j2len, new_j2len);
  }
  return best;
}

}  // namespace

int round_ratio_100(long long num, long long den) {
  return static_cast<int>((200 * num + den) / (2 * den));
}

int ngram_token_ratio(std::span<const std::string> query,
                      std::span<const std::string> candidate, int n) {
  if (query.empty() || candidate.empty())
    throw std::invalid_argument("ngram_token_ratio: empty token sequence");
  if (n < 1) throw std::invalid_argument("ngram_token_ratio: n must be >= 1");
  std::set<std::string> g = ngram_set(query, n);
  std::set<std::string> h = ngram_set(candidate, n);
  size_t shared = 0;
  for (const std::string& gram : g)
    if (h.count(gram)) ++shared;
  return round_ratio_100(static_cast<long long>(shared),
                         static_cast<long long>(g.size()));
}

size_t ratcliff_matching_total(std::string_view a, std::string_view b) {
  std::unordered_map<char, std::vector<size_t>> b2j;
  for (size_t j = 0; j < b.size(); ++j) b2j[b[j]].push_back(j);

  size_t total = 0;
  std::vector<std::array<size_t, 4>> queue{{0, a.size(), 0, b.size()}};
  while (!queue.empty()) {
    auto [alo, ahi, blo, bhi] = queue.back();
    queue.pop_back();
    Match m = find_longest_match(a, b2j, alo, ahi, blo, bhi);
    if (m.size == 0) continue;
    total += m.size;
    if (alo < m.a && blo < m.b) queue.push_back({alo, m.a, blo, m.b});
    if (m.a + m.size < ahi && m.b + m.size < bhi)
      queue.push_back({m.a + m.size, ahi, m.b + m.size, bhi});
  }
  return total;
}

int ratcliff_ratio(std::string_view a, std::string_view b) {
  size_t lensum = a.size() + b.size();
  if (lensum == 0) return 100;
  size_t m = ratcliff_matching_total(a, b);
  return round_ratio_100(static_cast<long long>(2 * m),
                         static_cast<long long>(lensum));
}

std::vector<std::string> sorted_distinct(std::span<const std::string> tokens) {
  std::vector<std::string> out(tokens.begin(), tokens.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

std::string join_spaced(const std::vector<std::string>& head,
                        const std::vector<std::string>& tail) {
  std::string out;
  bool first = true;
  for (const auto* part : {&head, &tail}) {
    for (const std::string& tok : *part) {
      if (!first) out += ' ';
      out += tok;
      first = false;
    }
  }
  return out;
}

}  // namespace

int token_set_ratio_on_sorted(const std::vector<std::string>& query_sorted,
                              const std::vector<std::string>& cand_sorted) {
  std::vector<std::string> common, query_only, cand_only;
  std::set_intersection(query_sorted.begin(), query_sorted.end(),
                        cand_sorted.begin(), cand_sorted.end(),
                        std::back_inserter(common));
  std::set_difference(query_sorted.begin(), query_sorted.end(),
                      cand_sorted.begin(), cand_sorted.end(),
                      std::back_inserter(query_only));
  std::set_difference(cand_sorted.begin(), cand_sorted.end(),
                      query_sorted.begin(), query_sorted.end(),
                      std::back_inserter(cand_only));

  // When one distinct-token set contains the other, R(I, that side) is an
  // identical-string comparison.
  if (!common.empty() && (query_only.empty() || cand_only.empty())) return 100;

  std::string intersect = join_spaced(common, {});
  std::string a = join_spaced(common, query_only);
  std::string b = join_spaced(common, cand_only);
  return std::max({ratcliff_ratio(intersect, a), ratcliff_ratio(intersect, b),
                   ratcliff_ratio(a, b)});
}

int token_set_ratio(std::span<const std::string> query,
                    std::span<const std::string> candidate) {
  if (query.empty() || candidate.empty())
    throw std::invalid_argument("token_set_ratio: empty token sequence");
  return token_set_ratio_on_sorted(sorted_distinct(query),
                                   sorted_distinct(candidate));
}

}  // namespace teddy
