#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace teddy {

/// Reads a whole file. Throws IoError when the file cannot be opened.
std::string read_file(const std::filesystem::path& path);

/// Writes content to a temporary sibling file and renames it into place, so
/// interrupted runs never leave truncated artifacts. Throws IoError on
/// failure.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content);

}  // namespace teddy
