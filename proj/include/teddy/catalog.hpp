#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace teddy {

/// The ten idiom categories covered by the catalog.
enum class IdiomType {
  DictionaryComprehension,
  Enumerate,
  FileReadingStatement,
  ListComprehension,
  IfStatement,
  StringFormatting,
  Set,
  Tuple,
  VariableSwapping,
  CodeFormatting,
};

enum class Label { Py, NPy };
enum class Provenance { Original, Augmented };

std::string_view idiom_type_name(IdiomType type);
std::optional<IdiomType> idiom_type_from_name(std::string_view name);
std::string_view label_name(Label label);
std::optional<Label> label_from_name(std::string_view name);

/// One catalog snippet: a Pythonic idiom (Py) or its non-Pythonic
/// counterpart (NPy), paired with the opposite-label entry of the same type.
struct IdiomEntry {
  std::string id;
  IdiomType idiom_type = IdiomType::VariableSwapping;
  Label label = Label::Py;
  std::string counterpart_id;
  std::string description;
  std::string snippet;
  Provenance provenance = Provenance::Original;
};

struct Violation {
  std::string entry_id;
  std::string rule;
  std::string detail;
};

/// The paired Py/NPy snippet database. Immutable after construction; safe for
/// concurrent reads.
class Catalog {
 public:
  Catalog() = default;
  Catalog(std::vector<IdiomEntry> entries, std::filesystem::path source_path);

  /// Loads catalog.json plus the snippet files it references and validates
  /// the result. Throws Error("manifest not found") when the manifest is
  /// missing, ParseError on bad JSON, and ValidationError (naming the
  /// offending entries) when validation fails.
  static Catalog load(const std::filesystem::path& directory);

  const std::vector<IdiomEntry>& entries() const { return entries_; }
  const std::filesystem::path& source_path() const { return source_path_; }

  bool contains(const std::string& id) const;
  /// Throws NotFoundError for an unknown id.
  const IdiomEntry& entry(const std::string& id) const;
  /// The opposite-label entry named by counterpart_id. Throws NotFoundError
  /// when either id does not resolve.
  const IdiomEntry& counterpart(const std::string& id) const;

  std::vector<const IdiomEntry*> entries_with_label(Label label) const;

 private:
  std::vector<IdiomEntry> entries_;
  std::map<std::string, size_t> by_id_;
  std::filesystem::path source_path_;
};

/// Checks every entry and catalog invariant; returns one violation per broken
/// rule (empty means valid). Rules: duplicate-id, dangling-counterpart,
/// counterpart-label, counterpart-type, empty-snippet, unlexable-snippet,
/// unpaired-type.
std::vector<Violation> validate_catalog(const Catalog& catalog);

}  // namespace teddy
