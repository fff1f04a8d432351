#include "slicefloer/cache.hpp"

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "slicefloer/errors.hpp"
#include "slicefloer/sha256.hpp"

namespace slicefloer {

ResultCache::ResultCache(std::string directory) : directory_(std::move(directory)) {
  if (!directory_.empty()) std::filesystem::create_directories(directory_);
}

ResultCache ResultCache::from_environment() {
  const char* dir = std::getenv("SLICEFLOER_CACHE");
  return ResultCache(dir ? dir : "");
}

std::string ResultCache::entry_path(const std::string& key_hex) const {
  return directory_ + "/" + key_hex + ".json";
}

std::optional<nlohmann::ordered_json> ResultCache::lookup(const std::string& key_hex) {
  if (!enabled()) return std::nullopt;
  std::ifstream in(entry_path(key_hex));
  if (!in) return std::nullopt;
  nlohmann::ordered_json entry = nlohmann::ordered_json::parse(in, nullptr, false);
  if (!entry.is_discarded() && entry.contains("input_hash") &&
      entry["input_hash"] == key_hex && entry.contains("payload") &&
      entry.contains("payload_digest") &&
      entry["payload_digest"] == sha256_hex(entry["payload"].dump())) {
    return entry["payload"];
  }
  // Corrupt or stale entry: drop it and let the caller recompute.
  std::remove(entry_path(key_hex).c_str());
  return std::nullopt;
}

void ResultCache::store(const std::string& key_hex, const nlohmann::ordered_json& payload) {
  if (!enabled()) return;
  nlohmann::ordered_json entry;
  entry["input_hash"] = key_hex;
  entry["payload_digest"] = sha256_hex(payload.dump());
  entry["payload"] = payload;
  std::string tmp = entry_path(key_hex) + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp);
    if (!out) throw UserError("cache: cannot write " + tmp);
    out << entry.dump();
  }
  std::filesystem::rename(tmp, entry_path(key_hex));
}

}  // namespace slicefloer
