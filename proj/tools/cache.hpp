#pragma once

#include <verlinde/json_io.hpp>

#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <string>

namespace verlinde::cli {

// JSON files under a directory, one per canonical key. Each file stores the
// key and a checksum of the payload; anything that fails to parse or verify
// is treated as a miss and overwritten.
class ResultCache {
 public:
  ResultCache(std::filesystem::path dir, std::ostream& warnings);

  Json get_or_compute(const std::string& key, const std::function<Json()>& compute);
  std::filesystem::path path_for(const std::string& key) const;

 private:
  std::optional<Json> load(const std::string& key);
  void store(const std::string& key, const Json& payload);
  std::filesystem::path dir_;
  std::ostream& warn_;
};

std::string checksum(const std::string& text);

}  // namespace verlinde::cli
