#pragma once

#include <optional>
#include <string>

#include <json.hpp>

namespace slicefloer {

// Content-addressed result store: one JSON file per input digest under the
// directory named by SLICEFLOER_CACHE. Entries carry their own payload
// digest; a mismatch (corruption) invalidates the entry instead of serving
// it. Unset/empty directory disables the cache.
class ResultCache {
 public:
  explicit ResultCache(std::string directory);
  static ResultCache from_environment();

  bool enabled() const { return !directory_.empty(); }
  std::optional<nlohmann::ordered_json> lookup(const std::string& key_hex);
  void store(const std::string& key_hex, const nlohmann::ordered_json& payload);

 private:
  std::string entry_path(const std::string& key_hex) const;
  std::string directory_;
};

}  // namespace slicefloer
