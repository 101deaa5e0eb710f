#include "output.hpp"

#include <openssl/evp.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "api.hpp"
#include "json.hpp"

namespace cli {

namespace fs = std::filesystem;

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Failure(SOENET_INTERNAL_ERROR, "SHA-256 digest failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xF];
  }
  return out;
}

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

CsvWriter::CsvWriter(std::vector<std::string> header) : width_(header.size()) { row(header); }

void CsvWriter::row(const std::vector<std::string>& cells) {
  if (cells.size() != width_) throw Failure(SOENET_INTERNAL_ERROR, "CSV row width mismatch");
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) text_ += ',';
    text_ += cells[i];
  }
  text_ += '\n';
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Failure(SOENET_IO_ERROR, "cannot read '" + p.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ArtifactStore::ArtifactStore(const RunConfig& config, fs::path root)
    : seeds_(config.seeds), root_(std::move(root)) {
  auto canonical = config.to_json();
  canonical.erase("output");  // where results land does not change what they are
  config_hash_ = sha256_hex(canonical.dump());
  std::error_code ec;
  fs::create_directories(root_, ec);
  if (ec) throw Failure(SOENET_IO_ERROR, "cannot create output directory '" + root_.string() + "': " + ec.message());
  const fs::path manifest = root_ / "manifest.json";
  if (fs::exists(manifest)) {
    try {
      const auto j = nlohmann::json::parse(read_file(manifest));
      if (j.value("config_sha256", "") == config_hash_)
        for (const auto& a : j.at("artifacts"))
          artifacts_[a.at("path").get<std::string>()] = {a.at("sha256").get<std::string>(),
                                                         a.at("bytes").get<uint64_t>()};
    } catch (const nlohmann::json::exception&) {
      // A corrupt manifest is rebuilt from scratch.
    }
  }
}

fs::path ArtifactStore::write(const std::string& relative, const std::string& content) {
  const fs::path p = root_ / relative;
  std::error_code ec;
  fs::create_directories(p.parent_path(), ec);
  std::ofstream out(p, std::ios::binary);
  if (!out) throw Failure(SOENET_IO_ERROR, "cannot write '" + p.string() + "'");
  out << content;
  out.close();
  if (!out) throw Failure(SOENET_IO_ERROR, "write failed for '" + p.string() + "'");
  const auto digest = sha256_hex(content);
  std::lock_guard lock(mu_);
  artifacts_[relative] = {digest, content.size()};
  return p;
}

void ArtifactStore::record(const std::string& relative) {
  const std::string content = read_file(root_ / relative);
  const auto digest = sha256_hex(content);
  std::lock_guard lock(mu_);
  artifacts_[relative] = {digest, content.size()};
}

void ArtifactStore::write_manifest() const {
  std::lock_guard lock(mu_);
  nlohmann::ordered_json j;
  j["tool_version"] = soenet_version();
  j["config_sha256"] = config_hash_;
  j["seeds"] = seeds_;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [path, entry] : artifacts_)
    arr.push_back({{"path", path}, {"sha256", entry.first}, {"bytes", entry.second}});
  j["artifacts"] = arr;
  const fs::path p = root_ / "manifest.json";
  std::ofstream out(p, std::ios::binary);
  if (!out) throw Failure(SOENET_IO_ERROR, "cannot write '" + p.string() + "'");
  out << j.dump(2) << '\n';
}

}  // namespace cli
