#include "cli/output.hpp"

#include <fstream>
#include <system_error>

#include "spreadbench/error.hpp"

namespace spreadbench::cli {

void write_file_atomically(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path temp = path;
  temp += ".partial";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(temp.string() + ": cannot open for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.close();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(temp, ignored);
      throw Error(temp.string() + ": write failed");
    }
  }
  std::filesystem::rename(temp, path);
}

OutputSet::OutputSet(std::filesystem::path directory) : directory_(std::move(directory)) {
  std::filesystem::create_directories(directory_);
}

OutputSet::~OutputSet() {
  if (committed_) return;
  for (const auto& file : files_) {
    std::error_code ignored;
    std::filesystem::remove(file, ignored);
  }
}

std::filesystem::path OutputSet::write(const std::string& file_name, const std::string& contents) {
  const auto path = directory_ / file_name;
  write_file_atomically(path, contents);
  files_.push_back(path);
  return path;
}

}  // namespace spreadbench::cli
