#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "teddy/catalog.hpp"
#include "teddy/clone_index.hpp"
#include "teddy/error.hpp"
#include "teddy/eval.hpp"
#include "teddy/history.hpp"
#include "teddy/io_util.hpp"
#include "teddy/recommend.hpp"
#include "teddy/timeline.hpp"

namespace {

using namespace teddy;

constexpr int kExitOk = 0;
constexpr int kExitFindings = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

struct ConfigFlags {
  std::string config_name;
  std::string config_file;
  std::string measure;
  std::vector<int> thresholds;
  std::optional<int> t0, t1, t2, t3;
  std::optional<int> ngram_n;
  std::optional<int> top_k;
};

void add_config_flags(CLI::App* cmd, ConfigFlags& flags) {
  cmd->add_option("--config", flags.config_name,
                  "Named configuration (built-in C1-C4 or from --config-file)");
  cmd->add_option("--config-file", flags.config_file,
                  "JSON file with named threshold configurations");
  cmd->add_option("--measure", flags.measure, "Similarity measure: ntr or tsr");
  cmd->add_option("--thresholds", flags.thresholds,
                  "Four thresholds T0 T1 T2 T3 in [0,100]")
      ->expected(4);
  cmd->add_option("--t0", flags.t0, "Threshold for representation r0");
  cmd->add_option("--t1", flags.t1, "Threshold for representation r1");
  cmd->add_option("--t2", flags.t2, "Threshold for representation r2");
  cmd->add_option("--t3", flags.t3, "Threshold for representation r3");
  cmd->add_option("--ngram", flags.ngram_n, "Token n-gram size (default 4)");
  cmd->add_option("--top-k", flags.top_k, "Hits to keep per query (default 10)");
}

std::map<std::string, ThresholdConfig> load_config_file(
    const std::filesystem::path& path) {
  std::map<std::string, ThresholdConfig> configs;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_file(path));
    for (const auto& [name, body] : doc.at("configs").items()) {
      ThresholdConfig config;
      std::string measure = body.value("measure", "NTR");
      if (measure == "NTR" || measure == "ntr")
        config.measure = Measure::Ntr;
      else if (measure == "TSR" || measure == "tsr")
        config.measure = Measure::Tsr;
      else
        throw ParseError("unknown measure '" + measure + "' in " + name);
      if (body.contains("thresholds")) {
        const auto& t = body.at("thresholds");
        for (size_t i = 0; i < 4; ++i) config.thresholds[i] = t.at(i).get<int>();
      }
      config.ngram_n = body.value("ngram_n", config.ngram_n);
      config.top_k = body.value("top_k", config.top_k);
      configs.emplace(name, config);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("cannot parse config file " + path.string() + ": " +
                     e.what());
  }
  return configs;
}

ThresholdConfig resolve_config(const ConfigFlags& flags,
                               const ThresholdConfig& mode_default) {
  ThresholdConfig config = mode_default;

  if (!flags.config_name.empty()) {
    bool found = false;
    for (const NamedConfig& named : builtin_configs()) {
      if (named.name == flags.config_name) {
        config = named.config;
        found = true;
        break;
      }
    }
    if (!found && !flags.config_file.empty()) {
      auto file_configs = load_config_file(flags.config_file);
      auto it = file_configs.find(flags.config_name);
      if (it != file_configs.end()) {
        config = it->second;
        found = true;
      }
    }
    if (!found)
      throw ParseError("unknown configuration '" + flags.config_name + "'");
  }

  if (!flags.measure.empty()) {
    if (flags.measure == "ntr" || flags.measure == "NTR")
      config.measure = Measure::Ntr;
    else if (flags.measure == "tsr" || flags.measure == "TSR")
      config.measure = Measure::Tsr;
    else
      throw ParseError("unknown measure '" + flags.measure + "'");
  }
  if (!flags.thresholds.empty())
    for (size_t i = 0; i < 4; ++i) config.thresholds[i] = flags.thresholds[i];
  if (flags.t0) config.thresholds[0] = *flags.t0;
  if (flags.t1) config.thresholds[1] = *flags.t1;
  if (flags.t2) config.thresholds[2] = *flags.t2;
  if (flags.t3) config.thresholds[3] = *flags.t3;
  if (flags.ngram_n) config.ngram_n = *flags.ngram_n;
  if (flags.top_k) config.top_k = *flags.top_k;

  for (int t : config.thresholds)
    if (t < 0 || t > 100)
      throw ParseError("thresholds must lie in [0,100]");
  if (config.ngram_n < 1) throw ParseError("--ngram must be >= 1");
  if (config.top_k < 1) throw ParseError("--top-k must be >= 1");
  return config;
}

std::string resolve_catalog_path(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("TEDDY_CATALOG"); env && *env)
    return env;
  throw ParseError("no catalog given: pass --catalog or set TEDDY_CATALOG");
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::fputs(content.c_str(), stdout);
  else
    write_file_atomic(out_path, content);
}

std::string read_stdin() {
  std::ostringstream buf;
  buf << std::cin.rdbuf();
  return buf.str();
}

nlohmann::ordered_json recommendation_json(const Recommendation& rec,
                                           const Catalog& catalog) {
  nlohmann::ordered_json item;
  item["file_path"] = rec.file_path;
  item["start_line"] = rec.start_line;
  item["end_line"] = rec.end_line;
  item["idiom_type"] = idiom_type_name(rec.idiom_type);
  item["matched_npy"] = rec.matched_npy;
  item["suggested_py"] = rec.suggested_py;
  item["suggested_snippet"] = normalized_snippet_text(
      catalog.entry(rec.suggested_py).snippet);
  item["score"] = rec.score;
  return item;
}

int run_check_diff(const std::string& catalog_path, const std::string& diff_path,
                   const std::string& out_path, const std::string& format,
                   const ThresholdConfig& config) {
  Catalog catalog = Catalog::load(catalog_path);
  std::string diff = diff_path.empty() ? read_stdin() : read_file(diff_path);
  std::vector<Recommendation> recs = analyze_diff(diff, catalog, config);

  if (format == "json") {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const Recommendation& rec : recs)
      doc.push_back(recommendation_json(rec, catalog));
    write_output(out_path, doc.dump(2) + "\n");
  } else {
    write_output(out_path, render_comment(recs, catalog));
  }
  return recs.empty() ? kExitOk : kExitFindings;
}

int run_scan(const std::string& catalog_path, const std::string& scan_path,
             const std::string& out_path, const std::string& format,
             const ThresholdConfig& config, bool verbose) {
  Catalog catalog = Catalog::load(catalog_path);

  std::vector<TreeFile> files;
  std::filesystem::path base(scan_path);
  if (std::filesystem::is_regular_file(base)) {
    files.push_back({base.string(), read_file(base)});
  } else {
    std::vector<std::string> paths;
    for (const auto& entry :
         std::filesystem::recursive_directory_iterator(base))
      if (entry.is_regular_file() && entry.path().extension() == ".py")
        paths.push_back(entry.path().string());
    std::sort(paths.begin(), paths.end());
    for (const std::string& p : paths) files.push_back({p, read_file(p)});
  }

  std::vector<ScanWarning> warnings;
  std::vector<Occurrence> occurrences =
      scan_tree(files, catalog, config, &warnings);
  if (verbose)
    for (const ScanWarning& w : warnings)
      std::fprintf(stderr, "warning: %s: %s\n", w.subject.c_str(),
                   w.reason.c_str());

  std::string out;
  if (format == "json") {
    for (const Occurrence& occ : occurrences) {
      nlohmann::ordered_json record;
      record["file_path"] = occ.file_path;
      record["idiom_type"] = idiom_type_name(occ.idiom_type);
      record["label"] = label_name(occ.label);
      record["start_line"] = occ.start_line;
      record["end_line"] = occ.end_line;
      record["score"] = occ.score;
      out += record.dump();
      out += '\n';
    }
  } else {
    for (const Occurrence& occ : occurrences) {
      out += occ.file_path + ":" + std::to_string(occ.start_line) + "-" +
             std::to_string(occ.end_line) + "  " +
             std::string(label_name(occ.label)) + "  " +
             std::string(idiom_type_name(occ.idiom_type)) + "  score " +
             std::to_string(occ.score).substr(0, std::to_string(occ.score).find('.') + 3) +
             "\n";
    }
  }
  write_output(out_path, out);
  return kExitOk;
}

int run_history(const std::string& catalog_path, const std::string& repo_path,
                const std::string& out_dir, const ThresholdConfig& config,
                int jobs, bool verbose) {
  Catalog catalog = Catalog::load(catalog_path);
  std::vector<ScanWarning> warnings;
  std::vector<Occurrence> dataset =
      walk_history(repo_path, catalog, config, jobs, &warnings);
  if (verbose)
    for (const ScanWarning& w : warnings)
      std::fprintf(stderr, "warning: %s: %s\n", w.subject.c_str(),
                   w.reason.c_str());
  TimelinePaths paths = emit_timeline(dataset, out_dir);
  std::printf("wrote %zu occurrences to %s\n", dataset.size(),
              paths.jsonl.string().c_str());
  std::printf("wrote timeline to %s\n", paths.html.string().c_str());
  return kExitOk;
}

int run_eval(const std::string& catalog_path, const std::string& truth_path,
             const std::string& sweep_names, const ConfigFlags& flags,
             const std::string& out_path, const std::string& format, int jobs) {
  Catalog catalog = Catalog::load(catalog_path);
  GroundTruth truth = load_truth(truth_path);

  std::vector<NamedConfig> configs;
  if (!sweep_names.empty()) {
    std::map<std::string, ThresholdConfig> named;
    for (const NamedConfig& builtin : builtin_configs())
      named.emplace(builtin.name, builtin.config);
    if (!flags.config_file.empty())
      for (auto& [name, config] : load_config_file(flags.config_file))
        named.emplace(name, config);

    if (sweep_names == "builtin") {
      configs = builtin_configs();
    } else if (sweep_names == "all") {
      for (const auto& [name, config] : named) configs.push_back({name, config});
    } else {
      std::stringstream stream(sweep_names);
      std::string name;
      while (std::getline(stream, name, ',')) {
        auto it = named.find(name);
        if (it == named.end())
          throw ParseError("unknown configuration '" + name + "' in --sweep");
        configs.push_back({it->first, it->second});
      }
    }
  } else {
    ThresholdConfig config = resolve_config(flags, config_c4());
    std::string name = flags.config_name.empty() ? "custom" : flags.config_name;
    configs.push_back({name, config});
  }

  std::vector<SweepRow> rows = sweep(catalog, truth, configs, jobs);
  std::string out =
      format == "json" ? sweep_to_json(rows) + "\n" : render_sweep_table(rows);
  write_output(out_path, out);
  return kExitOk;
}

int run_catalog_validate(const std::string& catalog_path) {
  std::filesystem::path manifest =
      std::filesystem::path(catalog_path) / "catalog.json";
  if (!std::filesystem::exists(manifest))
    throw Error("manifest not found: " + manifest.string());

  // Load without the load-time validation gate so violations are reported
  // rather than thrown.
  try {
    Catalog catalog = Catalog::load(catalog_path);
    std::printf("catalog OK: %zu entries\n", catalog.entries().size());
    return kExitOk;
  } catch (const ValidationError& e) {
    std::printf("%s\n", e.what());
    return kExitRuntime;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pythonic-idiom analysis: clone-search based detection and "
               "recommendation of idiomatic Python"};
  app.require_subcommand(1);

  std::string catalog_path, diff_path, out_path, scan_path = ".", repo_path;
  std::string truth_path, sweep_names, format;
  bool verbose = false;
  int jobs = 1;

  ConfigFlags check_flags, scan_flags, history_flags, eval_flags;

  CLI::App* check = app.add_subcommand(
      "check-diff", "Review a unified diff and suggest Pythonic idioms");
  check->add_option("--catalog", catalog_path, "Catalog directory");
  check->add_option("--diff", diff_path, "Diff file (default: stdin)");
  check->add_option("--out", out_path, "Output file (default: stdout)");
  check->add_option("--format", format, "markdown (default) or json");
  add_config_flags(check, check_flags);

  CLI::App* scan = app.add_subcommand(
      "scan", "Scan a working tree for Py/NPy occurrences");
  scan->add_option("--catalog", catalog_path, "Catalog directory");
  scan->add_option("--path", scan_path, "File or directory to scan");
  scan->add_option("--out", out_path, "Output file (default: stdout)");
  scan->add_option("--format", format, "table (default) or json");
  scan->add_flag("-v,--verbose", verbose, "Print skip warnings");
  add_config_flags(scan, scan_flags);

  CLI::App* history = app.add_subcommand(
      "history", "Walk a git history and emit the idiom timeline");
  history->add_option("--catalog", catalog_path, "Catalog directory");
  history->add_option("--repo", repo_path, "Path to a local git clone")
      ->required();
  history->add_option("--out", out_path, "Output directory")->required();
  history->add_option("--jobs", jobs, "Worker threads (default 1)");
  history->add_flag("-v,--verbose", verbose, "Print skip warnings");
  add_config_flags(history, history_flags);

  CLI::App* eval_cmd = app.add_subcommand(
      "eval", "Evaluate retrieval accuracy against a ground-truth manifest");
  eval_cmd->add_option("--catalog", catalog_path, "Catalog directory");
  eval_cmd->add_option("--truth", truth_path, "Ground-truth manifest")
      ->required();
  eval_cmd->add_option("--sweep", sweep_names,
                       "builtin, all, or comma-separated config names");
  eval_cmd->add_option("--out", out_path, "Output file (default: stdout)");
  eval_cmd->add_option("--format", format, "table (default) or json");
  eval_cmd->add_option("--jobs", jobs, "Worker threads (default 1)");
  add_config_flags(eval_cmd, eval_flags);

  CLI::App* validate = app.add_subcommand(
      "catalog-validate", "Check catalog invariants and report violations");
  validate->add_option("--catalog", catalog_path, "Catalog directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (check->parsed()) {
      return run_check_diff(resolve_catalog_path(catalog_path), diff_path,
                            out_path, format,
                            resolve_config(check_flags, default_prevention_config()));
    }
    if (scan->parsed()) {
      return run_scan(resolve_catalog_path(catalog_path), scan_path, out_path,
                      format, resolve_config(scan_flags, default_detection_config()),
                      verbose);
    }
    if (history->parsed()) {
      return run_history(resolve_catalog_path(catalog_path), repo_path, out_path,
                         resolve_config(history_flags, default_detection_config()),
                         jobs, verbose);
    }
    if (eval_cmd->parsed()) {
      return run_eval(resolve_catalog_path(catalog_path), truth_path,
                      sweep_names, eval_flags, out_path, format, jobs);
    }
    if (validate->parsed()) {
      return run_catalog_validate(resolve_catalog_path(catalog_path));
    }
  } catch (const ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitRuntime;
  }
  return kExitUsage;
}
