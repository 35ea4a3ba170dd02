#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "teddy/catalog.hpp"
#include "teddy/clone_index.hpp"
#include "teddy/error.hpp"
#include "teddy/representation.hpp"
#include "teddy/token.hpp"
#include "test_util.hpp"

using namespace teddy;
using namespace teddy::test;

namespace {

std::vector<std::pair<std::string, Snippet>> catalog_docs(const Catalog& catalog) {
  std::vector<std::pair<std::string, Snippet>> docs;
  for (const IdiomEntry& e : catalog.entries())
    docs.emplace_back(e.id, make_snippet(e.snippet, e.id));
  return docs;
}

const Catalog& bundled() {
  static Catalog catalog = Catalog::load(catalog_dir());
  return catalog;
}

// Token-level identifier renaming, reconstructed into lexable source.
std::string rename_identifiers(const std::string& source,
                               const std::string& prefix) {
  std::map<std::string, std::string> renames;
  std::string out;
  for (const Token& tok : tokenize(source)) {
    std::string text = tok.text;
    if (tok.kind == TokenKind::Identifier) {
      auto [it, inserted] =
          renames.emplace(text, prefix + std::to_string(renames.size()));
      text = it->second;
    }
    if (tok.kind == TokenKind::Newline) {
      out += '\n';
    } else {
      if (!out.empty() && out.back() != '\n') out += ' ';
      out += text;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("build_index holds one document per lexable snippet") {
  ThresholdConfig config;
  CloneIndex index = CloneIndex::build(catalog_docs(bundled()), config);
  CHECK(index.size() == bundled().entries().size());
  CHECK(index.skipped().empty());
}

TEST_CASE("an empty snippet list yields an empty index and empty searches") {
  ThresholdConfig config;
  CloneIndex index = CloneIndex::build({}, config);
  CHECK(index.size() == 0);
  CHECK(index.search(make_snippet("a = 1"), config).empty());
}

TEST_CASE("unlexable snippets are skipped with a reason") {
  ThresholdConfig config;
  CloneIndex index = CloneIndex::build(
      {{"good", make_snippet("x = 1\n")},
       {"bad", make_snippet("s = 'unterminated\n")}},
      config);
  CHECK(index.size() == 1);
  REQUIRE(index.skipped().size() == 1);
  CHECK(index.skipped()[0].id == "bad");
  CHECK(index.skipped()[0].reason.find("unterminated") != std::string::npos);
}

TEST_CASE("a verbatim copy of an indexed entry ranks first with perfect scores") {
  CloneIndex index = CloneIndex::build(catalog_docs(bundled()), config_c4());
  const IdiomEntry& swap = bundled().entry("swap-npy-0");
  auto hits = index.search(make_snippet(swap.snippet), config_c4());
  REQUIRE(!hits.empty());
  CHECK(hits.front().doc_id == "swap-npy-0");
  CHECK(hits.front().scores == std::array<int, 4>{100, 100, 100, 100});
  CHECK(hits.front().aggregate == 100.0);
  CHECK(hits.front().qualifies);
}

TEST_CASE("with all-zero thresholds every indexed document qualifies") {
  ThresholdConfig config = config_c2();
  config.top_k = 1000;
  CloneIndex index = CloneIndex::build(catalog_docs(bundled()), config);
  auto hits = index.search(make_snippet("import os\n"), config);
  CHECK(hits.size() == bundled().entries().size());
  for (const SearchHit& hit : hits) CHECK(hit.qualifies);
}

TEST_CASE("an identifier-renamed swap still finds the swap entry first") {
  // Independent check first: brute-force score the renamed query against
  // every catalog entry through the plain reference scorer.
  std::string renamed =
      rename_identifiers(bundled().entry("swap-npy-0").snippet, "q");
  ThresholdConfig config = config_c2();  // NTR, thresholds 0
  config.top_k = 1000;

  RepresentationSet query_reps =
      representations(tokenize(normalized_snippet_text(renamed)));
  std::string best_id;
  double best_aggregate = -1.0;
  for (const IdiomEntry& e : bundled().entries()) {
    RepresentationSet doc_reps =
        representations(tokenize(normalized_snippet_text(e.snippet)));
    auto scores = score_levels(query_reps, doc_reps, config);
    double aggregate = (scores[0] + scores[1] + scores[2] + scores[3]) / 4.0;
    if (aggregate > best_aggregate ||
        (aggregate == best_aggregate && e.id < best_id)) {
      best_aggregate = aggregate;
      best_id = e.id;
    }
  }
  const IdiomEntry& expected = bundled().entry(best_id);
  CHECK(expected.idiom_type == IdiomType::VariableSwapping);
  CHECK(expected.label == Label::NPy);

  CloneIndex index = CloneIndex::build(catalog_docs(bundled()), config);
  auto hits = index.search(make_snippet(renamed), config);
  REQUIRE(!hits.empty());
  CHECK(hits.front().doc_id == best_id);
  CHECK(hits.front().scores[2] == 100);  // Type-2: r2 unaffected by renames
  CHECK(hits.front().scores[3] == 100);
}

TEST_CASE("index search agrees with the reference scorer") {
  std::mt19937 rng(77001);
  for (Measure measure : {Measure::Ntr, Measure::Tsr}) {
    ThresholdConfig config;
    config.measure = measure;
    config.thresholds = {0, 0, 0, 0};
    config.top_k = 1000;
    CloneIndex index = CloneIndex::build(catalog_docs(bundled()), config);
    for (int round = 0; round < 10; ++round) {
      const IdiomEntry& entry =
          bundled().entries()[rng() % bundled().entries().size()];
      std::string query_text = rename_identifiers(entry.snippet, "w");
      RepresentationSet query_reps =
          representations(tokenize(normalized_snippet_text(query_text)));
      auto hits = index.search(make_snippet(query_text), config);
      REQUIRE(hits.size() == index.size());
      for (const SearchHit& hit : hits) {
        const IndexedDoc* doc = index.find_doc(hit.doc_id);
        REQUIRE(doc != nullptr);
        CHECK(hit.scores == score_levels(query_reps, doc->reps, config));
      }
    }
  }
}

TEST_CASE("self-match scores 100 at every level for every entry") {
  for (Measure measure : {Measure::Ntr, Measure::Tsr}) {
    ThresholdConfig config;
    config.measure = measure;
    for (const IdiomEntry& e : bundled().entries()) {
      RepresentationSet reps =
          representations(tokenize(normalized_snippet_text(e.snippet)));
      auto scores = score_levels(reps, reps, config);
      CHECK(scores == std::array<int, 4>{100, 100, 100, 100});
    }
  }
}

TEST_CASE("threshold monotonicity: stricter configs qualify a subset") {
  std::mt19937 rng(90210);
  CloneIndex index = CloneIndex::build(catalog_docs(bundled()), config_c2());
  for (int round = 0; round < 40; ++round) {
    const IdiomEntry& entry =
        bundled().entries()[rng() % bundled().entries().size()];
    std::string query_text =
        round % 2 ? rename_identifiers(entry.snippet, "m") : entry.snippet;

    ThresholdConfig loose;
    loose.measure = round % 3 ? Measure::Ntr : Measure::Tsr;
    loose.top_k = 1000;
    ThresholdConfig strict = loose;
    for (int i = 0; i < 4; ++i) {
      loose.thresholds[static_cast<size_t>(i)] = static_cast<int>(rng() % 60);
      strict.thresholds[static_cast<size_t>(i)] =
          loose.thresholds[static_cast<size_t>(i)] + static_cast<int>(rng() % 40);
    }

    std::set<std::string> loose_ids, strict_ids;
    for (const SearchHit& hit : index.search(make_snippet(query_text), loose))
      loose_ids.insert(hit.doc_id);
    for (const SearchHit& hit : index.search(make_snippet(query_text), strict))
      strict_ids.insert(hit.doc_id);
    for (const std::string& id : strict_ids) CHECK(loose_ids.count(id) == 1);
  }
}

TEST_CASE("hits are ordered by aggregate, ties by id, and truncated to top_k") {
  ThresholdConfig config = config_c2();
  config.top_k = 5;
  CloneIndex index = CloneIndex::build(catalog_docs(bundled()), config);
  auto hits = index.search(make_snippet(bundled().entry("tuple-py-0").snippet),
                           config);
  CHECK(hits.size() == 5);
  for (size_t i = 1; i < hits.size(); ++i) {
    bool ordered = hits[i - 1].aggregate > hits[i].aggregate ||
                   (hits[i - 1].aggregate == hits[i].aggregate &&
                    hits[i - 1].doc_id < hits[i].doc_id);
    CHECK(ordered);
  }
}

TEST_CASE("search rejects a mismatched n-gram size") {
  CloneIndex index = CloneIndex::build(catalog_docs(bundled()), config_c4());
  ThresholdConfig other = config_c4();
  other.ngram_n = 3;
  CHECK_THROWS_AS(index.search(make_snippet("a = 1"), other),
                  std::invalid_argument);
}

TEST_CASE("lex errors in the query propagate") {
  CloneIndex index = CloneIndex::build(catalog_docs(bundled()), config_c4());
  CHECK_THROWS_AS(index.search(make_snippet("s = 'oops"), config_c4()), LexError);
}

TEST_CASE("queries with no tokens return nothing") {
  CloneIndex index = CloneIndex::build(catalog_docs(bundled()), config_c4());
  CHECK(index.search(make_snippet(""), config_c4()).empty());
  CHECK(index.search(make_snippet("# only a comment\n"), config_c4()).empty());
}
