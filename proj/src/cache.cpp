#include "arcmld/cache.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "arcmld/errors.hpp"
#include "arcmld/version.hpp"

namespace arcmld {

uint64_t fnv1a64(std::string_view data) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(uint64_t value) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[value & 0xf];
    value >>= 4;
  }
  return out;
}

MeasurementCache::MeasurementCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  if (!dir_.empty()) std::filesystem::create_directories(dir_);
}

std::string MeasurementCache::full_key(uint64_t scenario_hash, const std::string& candidate_key) {
  return std::string(kEngineVersion) + "|" + hex64(scenario_hash) + "|" + candidate_key;
}

std::filesystem::path MeasurementCache::entry_path(const std::string& full_key, int level) const {
  return dir_ / (hex64(fnv1a64(full_key + "|level=" + std::to_string(level))) + ".rec");
}

std::optional<LevelMeasurement> MeasurementCache::lookup(const std::string& full_key,
                                                         int level) const {
  if (!enabled()) return std::nullopt;
  std::filesystem::path path = entry_path(full_key, level);
  std::ifstream in(path);
  if (!in) return std::nullopt;

  std::string header, line;
  std::map<std::string, std::string> fields;
  if (!std::getline(in, header) || header != "arcmld-cache 1") {
    std::cerr << "arcmld: warning: discarding corrupt cache entry " << path.string() << "\n";
    std::error_code ec;
    std::filesystem::remove(path, ec);
    return std::nullopt;
  }
  while (std::getline(in, line)) {
    size_t colon = line.find(':');
    if (colon == std::string::npos) continue;
    fields[line.substr(0, colon)] = line.substr(colon + 2 > line.size() ? colon + 1 : colon + 2);
  }
  try {
    if (fields.at("version") != kEngineVersion) return std::nullopt;
    if (fields.at("key") != full_key) return std::nullopt;  // hash collision guard
    if (std::stoi(fields.at("level")) != level) return std::nullopt;
    LevelMeasurement m;
    m.level = level;
    if (fields.at("empty") == "0") {
      m.image_dim = std::stoll(fields.at("dim"));
      m.codim = std::stoll(fields.at("codim"));
    }
    return m;
  } catch (const std::exception&) {
    std::cerr << "arcmld: warning: discarding corrupt cache entry " << path.string() << "\n";
    std::error_code ec;
    std::filesystem::remove(path, ec);
    return std::nullopt;
  }
}

void MeasurementCache::store(const std::string& full_key, int level,
                             const LevelMeasurement& m) const {
  if (!enabled()) return;
  std::filesystem::path path = entry_path(full_key, level);
  std::filesystem::path tmp = path;
  tmp += ".tmp" + std::to_string(static_cast<unsigned long>(fnv1a64(full_key)) % 100000);
  {
    std::ofstream out(tmp);
    out << "arcmld-cache 1\n";
    out << "version: " << kEngineVersion << "\n";
    out << "key: " << full_key << "\n";
    out << "level: " << level << "\n";
    out << "empty: " << (m.image_dim.has_value() ? "0" : "1") << "\n";
    if (m.image_dim.has_value()) {
      out << "dim: " << *m.image_dim << "\n";
      out << "codim: " << *m.codim << "\n";
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace arcmld
