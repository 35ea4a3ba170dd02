#include "teddy/timeline.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

#include "teddy/error.hpp"
#include "teddy/io_util.hpp"

namespace teddy {

namespace {

std::string escape_html(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&#39;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string occurrence_json(const Occurrence& occurrence) {
  nlohmann::ordered_json record;
  record["commit_index"] = occurrence.commit_index;
  record["commit_id"] = occurrence.commit_id;
  record["file_path"] = occurrence.file_path;
  record["idiom_type"] = idiom_type_name(occurrence.idiom_type);
  record["label"] = label_name(occurrence.label);
  record["start_line"] = occurrence.start_line;
  record["end_line"] = occurrence.end_line;
  record["score"] = occurrence.score;
  return record.dump();
}

std::string timeline_html(const std::vector<Occurrence>& dataset) {
  std::set<std::string> file_set;
  int max_commit = 0;
  for (const Occurrence& occ : dataset) {
    file_set.insert(occ.file_path);
    max_commit = std::max(max_commit, occ.commit_index);
  }
  std::vector<std::string> files(file_set.begin(), file_set.end());

  size_t label_chars = 8;
  for (const std::string& f : files) label_chars = std::max(label_chars, f.size());

  const int x_step = 28;
  const int row_height = 24;
  const int left = static_cast<int>(label_chars) * 8 + 24;
  const int top = 24;
  const int plot_width = (max_commit + 1) * x_step + x_step;
  const int plot_height = std::max<int>(1, static_cast<int>(files.size())) * row_height;
  const int width = left + plot_width + 24;
  const int height = top + plot_height + 56;

  std::map<std::string, int> row_of;
  for (size_t i = 0; i < files.size(); ++i)
    row_of[files[i]] = static_cast<int>(i);

  auto x_of = [&](int commit_index) {
    return left + x_step / 2 + commit_index * x_step;
  };
  auto y_of = [&](int row) { return top + row_height / 2 + row * row_height; };

  std::string svg;
  // Row guides and file labels.
  for (size_t i = 0; i < files.size(); ++i) {
    int y = y_of(static_cast<int>(i));
    svg += "<line class=\"grid\" x1=\"" + std::to_string(left) + "\" y1=\"" +
           std::to_string(y) + "\" x2=\"" + std::to_string(left + plot_width) +
           "\" y2=\"" + std::to_string(y) + "\"/>\n";
    svg += "<text class=\"ylabel\" x=\"" + std::to_string(left - 8) + "\" y=\"" +
           std::to_string(y + 4) + "\">" + escape_html(files[i]) + "</text>\n";
  }
  // X axis with one tick per commit index.
  int axis_y = top + plot_height + 8;
  svg += "<line class=\"axis\" x1=\"" + std::to_string(left) + "\" y1=\"" +
         std::to_string(axis_y) + "\" x2=\"" + std::to_string(left + plot_width) +
         "\" y2=\"" + std::to_string(axis_y) + "\"/>\n";
  int tick_stride = std::max(1, (max_commit + 1) / 40);
  for (int c = 0; c <= max_commit; c += tick_stride) {
    svg += "<text class=\"xlabel\" x=\"" + std::to_string(x_of(c)) + "\" y=\"" +
           std::to_string(axis_y + 16) + "\">" + std::to_string(c) + "</text>\n";
  }

  for (const Occurrence& occ : dataset) {
    std::string cls = occ.label == Label::Py ? "mark py" : "mark npy";
    std::string tip = std::string(idiom_type_name(occ.idiom_type)) + " " +
                      std::string(label_name(occ.label)) + " (" +
                      std::to_string(occ.start_line) + ", " +
                      std::to_string(occ.end_line) + ") — commit " +
                      std::to_string(occ.commit_index);
    svg += "<circle class=\"" + cls + "\" cx=\"" +
           std::to_string(x_of(occ.commit_index)) + "\" cy=\"" +
           std::to_string(y_of(row_of[occ.file_path])) +
           "\" r=\"6\"><title>" + escape_html(tip) + "</title></circle>\n";
  }

  std::string html;
  html += "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n";
  html += "<title>Idiom usage timeline</title>\n<style>\n";
  html += "body { font: 14px/1.4 sans-serif; margin: 16px; color: #222; }\n";
  html += "svg { background: #fff; }\n";
  html += ".grid { stroke: #e4e4e4; stroke-width: 1; }\n";
  html += ".axis { stroke: #888; stroke-width: 1; }\n";
  html += ".ylabel { font: 12px monospace; text-anchor: end; fill: #333; }\n";
  html += ".xlabel { font: 12px sans-serif; text-anchor: middle; fill: #555; }\n";
  html += ".mark.py { fill: #2e8b57; }\n";
  html += ".mark.npy { fill: #c0392b; }\n";
  html += ".mark { stroke: #fff; stroke-width: 1; }\n";
  html += ".legend span { margin-right: 16px; }\n";
  html += ".dot { display: inline-block; width: 10px; height: 10px; border-radius: 5px; margin-right: 4px; }\n";
  html += "</style>\n</head>\n<body>\n";
  html += "<h1>Idiom usage timeline</h1>\n";
  html += "<p class=\"legend\"><span><i class=\"dot\" style=\"background:#2e8b57\"></i>Pythonic idiom (Py)</span>";
  html += "<span><i class=\"dot\" style=\"background:#c0392b\"></i>non-Pythonic code (NPy)</span>";
  html += "<span>x: commit index — y: file — hover a mark for details</span></p>\n";
  html += "<svg width=\"" + std::to_string(width) + "\" height=\"" +
          std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) +
          " " + std::to_string(height) + "\">\n";
  html += svg;
  html += "</svg>\n</body>\n</html>\n";
  return html;
}

TimelinePaths emit_timeline(const std::vector<Occurrence>& dataset,
                            const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create " + out_dir.string() + ": " + ec.message());

  std::string jsonl;
  for (const Occurrence& occ : dataset) {
    jsonl += occurrence_json(occ);
    jsonl += '\n';
  }

  TimelinePaths paths{out_dir / "occurrences.jsonl", out_dir / "timeline.html"};
  write_file_atomic(paths.jsonl, jsonl);
  write_file_atomic(paths.html, timeline_html(dataset));
  return paths;
}

}  // namespace teddy
