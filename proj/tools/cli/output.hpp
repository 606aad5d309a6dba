#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace spreadbench::cli {

/// Files written by one command. Each file is written to a temporary name
/// and renamed into place; unless commit() is called, the destructor deletes
/// every file this set produced, so a failed command leaves no partial output.
class OutputSet {
 public:
  explicit OutputSet(std::filesystem::path directory);
  ~OutputSet();

  OutputSet(const OutputSet&) = delete;
  OutputSet& operator=(const OutputSet&) = delete;

  std::filesystem::path write(const std::string& file_name, const std::string& contents);
  void commit() noexcept { committed_ = true; }

  const std::vector<std::filesystem::path>& files() const noexcept { return files_; }
  const std::filesystem::path& directory() const noexcept { return directory_; }

 private:
  std::filesystem::path directory_;
  std::vector<std::filesystem::path> files_;
  bool committed_ = false;
};

/// Writes `contents` to `path` via a temporary file and rename.
void write_file_atomically(const std::filesystem::path& path, const std::string& contents);

}  // namespace spreadbench::cli
