#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "config.hpp"

namespace cli {

std::string sha256_hex(const std::string& data);
/// "%.17g" formatting, with nan/inf spelled the same way on every platform.
std::string num(double v);

/// Streams CSV rows with a fixed header.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);
  void row(const std::vector<std::string>& cells);
  const std::string& text() const { return text_; }

 private:
  size_t width_;
  std::string text_;
};

/// Writes artifacts below the output directory and keeps a manifest of
/// relative path -> digest. The manifest is merged with any manifest that
/// already exists there, so separate subcommands accumulate into one file.
/// write() and record() may be called from several threads.
class ArtifactStore {
 public:
  ArtifactStore(const RunConfig& config, std::filesystem::path root);
  const std::filesystem::path& root() const { return root_; }

  std::filesystem::path write(const std::string& relative, const std::string& content);
  /// Registers a file produced elsewhere (e.g. by the library) under root.
  void record(const std::string& relative);
  void write_manifest() const;

 private:
  std::string config_hash_;
  std::vector<uint64_t> seeds_;
  std::filesystem::path root_;
  std::map<std::string, std::pair<std::string, uint64_t>> artifacts_;
  mutable std::mutex mu_;
};

std::string read_file(const std::filesystem::path& p);

}  // namespace cli
