#include "teddy/catalog.hpp"

#include <array>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "teddy/error.hpp"
#include "teddy/token.hpp"

namespace teddy {

namespace {

struct TypeName {
  IdiomType type;
  std::string_view name;
};

constexpr std::array<TypeName, 10> kTypeNames = {{
    {IdiomType::DictionaryComprehension, "dictionary-comprehension"},
    {IdiomType::Enumerate, "enumerate"},
    {IdiomType::FileReadingStatement, "file-reading-statement"},
    {IdiomType::ListComprehension, "list-comprehension"},
    {IdiomType::IfStatement, "if-statement"},
    {IdiomType::StringFormatting, "string-formatting"},
    {IdiomType::Set, "set"},
    {IdiomType::Tuple, "tuple"},
    {IdiomType::VariableSwapping, "variable-swapping"},
    {IdiomType::CodeFormatting, "code-formatting"},
}};

std::string read_file_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

std::string_view idiom_type_name(IdiomType type) {
  for (const auto& entry : kTypeNames)
    if (entry.type == type) return entry.name;
  return "unknown";
}

std::optional<IdiomType> idiom_type_from_name(std::string_view name) {
  for (const auto& entry : kTypeNames)
    if (entry.name == name) return entry.type;
  return std::nullopt;
}

std::string_view label_name(Label label) {
  return label == Label::Py ? "Py" : "NPy";
}

std::optional<Label> label_from_name(std::string_view name) {
  if (name == "Py") return Label::Py;
  if (name == "NPy") return Label::NPy;
  return std::nullopt;
}

Catalog::Catalog(std::vector<IdiomEntry> entries,
                 std::filesystem::path source_path)
    : entries_(std::move(entries)), source_path_(std::move(source_path)) {
  for (size_t i = 0; i < entries_.size(); ++i)
    by_id_.emplace(entries_[i].id, i);  // first occurrence wins on duplicates
}

bool Catalog::contains(const std::string& id) const {
  return by_id_.count(id) != 0;
}

const IdiomEntry& Catalog::entry(const std::string& id) const {
  auto it = by_id_.find(id);
  if (it == by_id_.end())
    throw NotFoundError("no catalog entry with id '" + id + "'");
  return entries_[it->second];
}

const IdiomEntry& Catalog::counterpart(const std::string& id) const {
  return entry(entry(id).counterpart_id);
}

std::vector<const IdiomEntry*> Catalog::entries_with_label(Label label) const {
  std::vector<const IdiomEntry*> out;
  for (const IdiomEntry& e : entries_)
    if (e.label == label) out.push_back(&e);
  return out;
}

Catalog Catalog::load(const std::filesystem::path& directory) {
  std::filesystem::path manifest = directory / "catalog.json";
  if (!std::filesystem::exists(manifest))
    throw Error("manifest not found: " + manifest.string());

  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_file_or_throw(manifest));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("cannot parse " + manifest.string() + ": " + e.what());
  }
  if (!doc.is_array())
    throw ParseError(manifest.string() + ": expected a top-level array");

  std::vector<IdiomEntry> entries;
  for (const auto& item : doc) {
    IdiomEntry entry;
    try {
      entry.id = item.at("id").get<std::string>();
      auto type = idiom_type_from_name(item.at("idiom_type").get<std::string>());
      if (!type)
        throw ParseError("entry '" + entry.id + "': unknown idiom_type '" +
                         item.at("idiom_type").get<std::string>() + "'");
      entry.idiom_type = *type;
      auto label = label_from_name(item.at("label").get<std::string>());
      if (!label)
        throw ParseError("entry '" + entry.id + "': unknown label '" +
                         item.at("label").get<std::string>() + "'");
      entry.label = *label;
      entry.counterpart_id = item.at("counterpart_id").get<std::string>();
      entry.description = item.at("description").get<std::string>();
      entry.provenance =
          item.at("provenance").get<std::string>() == "augmented"
              ? Provenance::Augmented
              : Provenance::Original;
      std::filesystem::path snippet_file =
          directory / item.at("snippet_file").get<std::string>();
      entry.snippet = read_file_or_throw(snippet_file);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(manifest.string() + ": bad entry: " + e.what());
    }
    entries.push_back(std::move(entry));
  }

  Catalog catalog(std::move(entries), directory);
  std::vector<Violation> violations = validate_catalog(catalog);
  if (!violations.empty()) {
    std::string message = "catalog validation failed:";
    for (const Violation& v : violations)
      message += "\n  [" + v.rule + "] " + v.entry_id + ": " + v.detail;
    throw ValidationError(message);
  }
  return catalog;
}

std::vector<Violation> validate_catalog(const Catalog& catalog) {
  std::vector<Violation> violations;
  const auto& entries = catalog.entries();

  std::set<std::string> ids;
  for (const IdiomEntry& e : entries) {
    if (!ids.insert(e.id).second)
      violations.push_back({e.id, "duplicate-id", "id appears more than once"});
  }

  for (const IdiomEntry& e : entries) {
    if (!catalog.contains(e.counterpart_id)) {
      violations.push_back({e.id, "dangling-counterpart",
                            "counterpart_id '" + e.counterpart_id +
                                "' does not exist"});
    } else {
      const IdiomEntry& other = catalog.entry(e.counterpart_id);
      if (other.label == e.label)
        violations.push_back({e.id, "counterpart-label",
                              "counterpart '" + other.id + "' has the same label"});
      if (other.idiom_type != e.idiom_type)
        violations.push_back({e.id, "counterpart-type",
                              "counterpart '" + other.id +
                                  "' has a different idiom type"});
    }

    if (e.snippet.empty()) {
      violations.push_back({e.id, "empty-snippet", "snippet text is empty"});
    } else {
      try {
        tokenize(e.snippet);
      } catch (const LexError& lex) {
        violations.push_back({e.id, "unlexable-snippet", lex.what()});
      }
    }
  }

  // Pairing completeness: every type present needs both labels.
  std::map<IdiomType, std::pair<bool, bool>> seen;  // (has Py, has NPy)
  for (const IdiomEntry& e : entries) {
    auto& flags = seen[e.idiom_type];
    (e.label == Label::Py ? flags.first : flags.second) = true;
  }
  for (const auto& [type, flags] : seen) {
    if (!flags.first || !flags.second)
      violations.push_back({std::string(idiom_type_name(type)), "unpaired-type",
                            std::string("type has no ") +
                                (flags.first ? "NPy" : "Py") + " entry"});
  }

  return violations;
}

}  // namespace teddy
