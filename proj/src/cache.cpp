#include "koszul/cache.hpp"

#include <openssl/evp.h>

#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <random>
#include <sstream>

#include "koszul/errors.hpp"

namespace koszul {

namespace fs = std::filesystem;

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr))
    throw Error("CacheError", "sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int k = 0; k < len; ++k) {
    out += hex[md[k] >> 4];
    out += hex[md[k] & 15];
  }
  return out;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open config file");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": byte " + std::to_string(e.byte), e.what());
  }
  if (!j.is_object()) throw ParseError(path + ": $", "expected an object");
  RunConfig c;
  auto int_field = [&](const std::string& k, int& dst) {
    if (!j[k].is_number_integer()) throw ParseError(path + ": $." + k, "expected an integer");
    dst = j[k].get<int>();
  };
  auto range_field = [&](const std::string& k, int& lo, int& hi) {
    const auto& v = j[k];
    if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
      throw ParseError(path + ": $." + k, "expected [lo, hi]");
    lo = v[0].get<int>();
    hi = v[1].get<int>();
  };
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& k = it.key();
    if (k == "degree") int_field(k, c.degree);
    else if (k == "jobs") int_field(k, c.jobs);
    else if (k == "n_range") range_field(k, c.n_lo, c.n_hi);
    else if (k == "i_range") range_field(k, c.i_lo, c.i_hi);
    else if (k == "format" || k == "cache_dir") {
      if (!it->is_string()) throw ParseError(path + ": $." + k, "expected a string");
      (k == "format" ? c.format : c.cache_dir) = it->get<std::string>();
    } else
      throw ParseError(path + ": $." + k, "unknown key");
  }
  if (c.degree < 0) throw ParseError(path + ": $.degree", "D must be nonnegative");
  if (c.format != "json" && c.format != "text" && c.format != "latex-table")
    throw ParseError(path + ": $.format", "expected json, text or latex-table");
  return c;
}

void apply_env(RunConfig& cfg) {
  if (const char* d = std::getenv("KOSZUL_CACHE_DIR")) cfg.cache_dir = d;
}

Cache::Cache(fs::path dir) : dir_(std::move(dir)) { fs::create_directories(dir_); }

std::string Cache::key(const std::string& input, const std::string& subcommand, int degree, const std::string& extra) {
  return sha256_hex(sha256_hex(input) + '\n' + subcommand + '\n' + std::to_string(degree) + '\n' + extra);
}

fs::path Cache::path_for(const std::string& key) const { return dir_ / (key + ".json"); }

std::optional<std::string> Cache::get(const std::string& key) const {
  fs::path p = path_for(key);
  std::ifstream in(p);
  if (!in) return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    auto j = nlohmann::json::parse(ss.str());
    if (j.at("key") == key) {
      std::string payload = j.at("payload").get<std::string>();
      if (j.at("sha256") == sha256_hex(payload)) return payload;
    }
  } catch (const nlohmann::json::exception&) {
  }
  std::error_code ec;
  fs::remove(p, ec);
  return std::nullopt;
}

void Cache::put(const std::string& key, const std::string& payload) const {
  nlohmann::json j;
  j["key"] = key;
  j["sha256"] = sha256_hex(payload);
  j["payload"] = payload;
  std::random_device rd;
  fs::path tmp = dir_ / (key + ".tmp." + std::to_string(rd()));
  {
    std::ofstream out(tmp, std::ios::binary);
    out << j.dump();
    if (!out) throw Error("CacheError", "cannot write " + tmp.string());
  }
  fs::rename(tmp, path_for(key));
}

}  // namespace koszul
