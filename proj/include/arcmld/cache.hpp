#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "arcmld/jets.hpp"

namespace arcmld {

uint64_t fnv1a64(std::string_view data);
std::string hex64(uint64_t value);

// Content-addressed store of per-(candidate, level) cylinder measurements.
// Keys embed the engine version and the scenario content hash, so version
// bumps and edited scenarios recompute from scratch. Entries are plain text,
// written atomically (temp file + rename); anything that fails validation is
// discarded with a warning.
class MeasurementCache {
 public:
  MeasurementCache() = default;  // disabled
  explicit MeasurementCache(std::filesystem::path dir);

  bool enabled() const { return !dir_.empty(); }
  const std::filesystem::path& dir() const { return dir_; }

  std::optional<LevelMeasurement> lookup(const std::string& full_key, int level) const;
  void store(const std::string& full_key, int level, const LevelMeasurement& m) const;

  // Key stem for a scenario run: version | scenario hash | candidate key.
  static std::string full_key(uint64_t scenario_hash, const std::string& candidate_key);

 private:
  std::filesystem::path entry_path(const std::string& full_key, int level) const;
  std::filesystem::path dir_;
};

}  // namespace arcmld
