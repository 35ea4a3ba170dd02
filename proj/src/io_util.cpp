#include "teddy/io_util.hpp"

#include <unistd.h>

#include <atomic>
#include <fstream>
#include <sstream>

#include "teddy/error.hpp"

namespace teddy {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content) {
  static std::atomic<unsigned long long> counter{0};
  std::filesystem::path temp =
      path.parent_path() /
      (path.filename().string() + ".tmp" + std::to_string(getpid()) + "-" +
       std::to_string(counter.fetch_add(1)));
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + temp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
      std::filesystem::remove(temp);
      throw IoError("short write to " + temp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(temp, path, ec);
  if (ec) {
    std::filesystem::remove(temp);
    throw IoError("cannot rename " + temp.string() + " to " + path.string() +
                  ": " + ec.message());
  }
}

}  // namespace teddy
