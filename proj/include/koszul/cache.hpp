#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace koszul {

struct RunConfig {
  int degree = 8;  // truncation degree D
  int n_lo = 2, n_hi = 6;
  int i_lo = 0, i_hi = 4;
  std::string format = "text";  // json | text | latex-table
  std::string cache_dir;        // empty disables caching
  int jobs = 1;
};
// Reads the documented JSON config; unknown keys are a ParseError
RunConfig load_config(const std::string& path);
// KOSZUL_CACHE_DIR overrides cache_dir when set
void apply_env(RunConfig& cfg);

std::string sha256_hex(const std::string& data);

// Content-addressed result cache. Entries are keyed by (input hash, subcommand, D, extra)
// and carry a checksum of the payload; a bad entry is dropped and recomputed.
class Cache {
 public:
  explicit Cache(std::filesystem::path dir);
  static std::string key(const std::string& input, const std::string& subcommand, int degree,
                         const std::string& extra = "");
  std::optional<std::string> get(const std::string& key) const;
  // Publishes through a temporary file and rename, so readers never see partial entries
  void put(const std::string& key, const std::string& payload) const;
  std::filesystem::path path_for(const std::string& key) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace koszul
