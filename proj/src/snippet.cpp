#include "teddy/snippet.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "teddy/error.hpp"

namespace teddy {

namespace {

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t\r\f\v") == std::string_view::npos;
}

size_t indent_width(std::string_view line) {
  size_t w = 0;
  for (char c : line) {
    if (c == ' ')
      w += 1;
    else if (c == '\t')
      w += 8;
    else
      break;
  }
  return w;
}

std::string_view stripped(std::string_view line) {
  size_t begin = line.find_first_not_of(" \t");
  if (begin == std::string_view::npos) return {};
  size_t end = line.find_last_not_of(" \t\r");
  return line.substr(begin, end - begin + 1);
}

bool starts_function(std::string_view line) {
  std::string_view body = stripped(line);
  return body.starts_with("def ") || body.starts_with("async def ");
}

std::string join_range(const std::vector<std::string>& lines, int start_line,
                       int end_line) {
  std::string text;
  for (int i = start_line; i <= end_line; ++i) {
    if (i > start_line) text += '\n';
    text += lines[static_cast<size_t>(i - 1)];
  }
  return text;
}

}  // namespace

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      lines.emplace_back(text.substr(pos));
      return lines;
    }
    std::string_view line = text.substr(pos, nl - pos);
    if (line.ends_with('\r')) line.remove_suffix(1);
    lines.emplace_back(line);
    pos = nl + 1;
  }
  return lines;
}

std::vector<Snippet> extract_from_source(std::string_view source,
                                         const std::string& path,
                                         int window_lines) {
  std::vector<std::string> lines = split_lines(source);
  std::vector<Snippet> out;
  std::set<std::pair<int, int>> seen;

  auto emit = [&](int start, int end, SnippetOrigin origin) {
    if (!seen.insert({start, end}).second) return;
    out.push_back({join_range(lines, start, end), path, start, end, origin});
  };

  // Function blocks: from each def line to the last non-blank line indented
  // deeper than it.
  for (size_t i = 0; i < lines.size(); ++i) {
    if (is_blank(lines[i]) || !starts_function(lines[i])) continue;
    size_t def_indent = indent_width(lines[i]);
    size_t last = i;
    for (size_t j = i + 1; j < lines.size(); ++j) {
      if (is_blank(lines[j])) continue;
      if (indent_width(lines[j]) <= def_indent) break;
      last = j;
    }
    emit(static_cast<int>(i) + 1, static_cast<int>(last) + 1,
         SnippetOrigin::FunctionBlock);
  }

  // Sliding windows over non-blank lines.
  std::vector<int> nonblank;
  for (size_t i = 0; i < lines.size(); ++i)
    if (!is_blank(lines[i])) nonblank.push_back(static_cast<int>(i) + 1);

  if (!nonblank.empty()) {
    size_t w = static_cast<size_t>(window_lines);
    if (nonblank.size() <= w) {
      emit(nonblank.front(), nonblank.back(), SnippetOrigin::FileWindow);
    } else {
      for (size_t i = 0; i + w <= nonblank.size(); ++i)
        emit(nonblank[i], nonblank[i + w - 1], SnippetOrigin::FileWindow);
    }
  }

  std::sort(out.begin(), out.end(), [](const Snippet& a, const Snippet& b) {
    return std::tie(a.start_line, a.end_line) < std::tie(b.start_line, b.end_line);
  });
  return out;
}

namespace {

struct HunkHeader {
  long old_count = 0;
  long new_start = 0;
  long new_count = 0;
};

// "@@ -a[,b] +c[,d] @@ ..." — counts default to 1 when omitted.
HunkHeader parse_hunk_header(const std::string& line) {
  auto fail = [&]() -> HunkHeader {
    throw ParseError("malformed hunk header: " + line);
  };
  const char* p = line.data();
  const char* end = p + line.size();
  auto expect = [&](std::string_view lit) {
    if (static_cast<size_t>(end - p) < lit.size() ||
        std::string_view(p, lit.size()) != lit)
      fail();
    p += lit.size();
  };
  auto number = [&]() -> long {
    long value = 0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc() || next == p) fail();
    p = next;
    return value;
  };
  HunkHeader h;
  expect("@@ -");
  number();
  h.old_count = (p < end && *p == ',') ? (++p, number()) : 1;
  expect(" +");
  h.new_start = number();
  h.new_count = (p < end && *p == ',') ? (++p, number()) : 1;
  expect(" @@");
  return h;
}

std::string strip_diff_path(std::string_view raw) {
  // "+++ b/src/app.py\t2024-01-01" -> "src/app.py"
  size_t tab = raw.find('\t');
  if (tab != std::string_view::npos) raw = raw.substr(0, tab);
  while (!raw.empty() && raw.back() == ' ') raw.remove_suffix(1);
  if (raw.starts_with("a/") || raw.starts_with("b/")) raw = raw.substr(2);
  return std::string(raw);
}

}  // namespace

std::vector<Snippet> extract_from_diff(std::string_view diff) {
  std::vector<std::string> lines = split_lines(diff);
  std::vector<Snippet> out;

  std::string new_path;
  size_t i = 0;
  while (i < lines.size()) {
    const std::string& line = lines[i];
    if (line.starts_with("+++ ")) {
      std::string_view target = std::string_view(line).substr(4);
      new_path = target == "/dev/null" ? "" : strip_diff_path(target);
      ++i;
      continue;
    }
    if (!line.starts_with("@@")) {
      ++i;
      continue;
    }

    HunkHeader hunk = parse_hunk_header(line);
    ++i;
    bool track = !new_path.empty() && new_path.ends_with(".py");
    long old_left = hunk.old_count;
    long new_left = hunk.new_count;
    long new_line = hunk.new_start;
    std::vector<std::string> run;
    long run_start = 0;

    auto flush = [&]() {
      if (run.empty()) return;
      if (track) {
        std::string text;
        for (size_t k = 0; k < run.size(); ++k) {
          if (k) text += '\n';
          text += run[k];
        }
        out.push_back({std::move(text), new_path, static_cast<int>(run_start),
                       static_cast<int>(run_start + static_cast<long>(run.size()) - 1),
                       SnippetOrigin::DiffHunk});
      }
      run.clear();
    };

    while (i < lines.size() && (old_left > 0 || new_left > 0)) {
      const std::string& body = lines[i];
      if (body.starts_with('\\')) {  // "\ No newline at end of file"
        ++i;
        continue;
      }
      char tag = body.empty() ? ' ' : body[0];
      if (tag == '+') {
        if (run.empty()) run_start = new_line;
        run.push_back(body.empty() ? std::string() : body.substr(1));
        ++new_line;
        --new_left;
      } else if (tag == '-') {
        flush();
        --old_left;
      } else if (tag == ' ') {
        flush();
        ++new_line;
        --new_left;
        --old_left;
      } else {
        break;  // next file header or malformed trailer; hunk ends here
      }
      ++i;
    }
    flush();
  }
  return out;
}

const char* snippet_origin_name(SnippetOrigin origin) {
  switch (origin) {
    case SnippetOrigin::FileWindow: return "file-window";
    case SnippetOrigin::FunctionBlock: return "function-block";
    case SnippetOrigin::DiffHunk: return "diff-hunk";
    case SnippetOrigin::Catalog: return "catalog";
  }
  return "unknown";
}

}  // namespace teddy
