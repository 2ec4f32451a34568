#include "cache.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

namespace verlinde::cli {

std::string checksum(const std::string& text) {
  // FNV-1a, 64 bit
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

ResultCache::ResultCache(std::filesystem::path dir, std::ostream& warnings) : dir_(std::move(dir)), warn_(warnings) {
  std::filesystem::create_directories(dir_);
}

std::filesystem::path ResultCache::path_for(const std::string& key) const {
  std::string name;
  for (char c : key) name += std::isalnum(static_cast<unsigned char>(c)) || c == '-' ? c : '_';
  return dir_ / (name + ".json");
}

std::optional<Json> ResultCache::load(const std::string& key) {
  const auto path = path_for(key);
  if (!std::filesystem::exists(path)) return std::nullopt;
  std::ifstream in(path);
  const Json stored = Json::parse(in, nullptr, false);
  std::string why;
  if (stored.is_discarded() || !stored.is_object()) why = "not valid JSON";
  else if (!stored.contains("key") || stored["key"] != key) why = "key mismatch";
  else if (!stored.contains("payload") || !stored.contains("checksum")) why = "missing fields";
  else if (stored["checksum"] != checksum(stored["payload"].dump())) why = "checksum mismatch";
  if (!why.empty()) {
    warn_ << "warning: ignoring corrupt cache entry " << path.string() << " (" << why << ")\n";
    return std::nullopt;
  }
  return stored["payload"];
}

void ResultCache::store(const std::string& key, const Json& payload) {
  const Json stored{{"key", key}, {"checksum", checksum(payload.dump())}, {"payload", payload}};
  const auto path = path_for(key);
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream out(tmp);
    out << stored.dump() << "\n";
  }
  std::filesystem::rename(tmp, path);
}

Json ResultCache::get_or_compute(const std::string& key, const std::function<Json()>& compute) {
  if (auto hit = load(key)) return *hit;
  Json fresh = compute();
  store(key, fresh);
  return fresh;
}

}  // namespace verlinde::cli
