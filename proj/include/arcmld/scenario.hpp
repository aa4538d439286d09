#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "arcmld/mld.hpp"

namespace arcmld {

// Parsed scenario file: versioned line-oriented text. See README for the
// grammar; polynomials use the shared ASCII syntax, the group line uses
// {d: 3, generators: [[1,1]]}.
struct Scenario {
  std::string name;
  int n = 0;
  std::vector<std::string> var_names;
  GroupSpec group;
  std::vector<Poly> equations;  // plain model equations
  std::vector<Poly> cuts;       // equations designated "cut" for pia mode
  std::vector<IdealFactor> factors;
  std::optional<int> w_max, b_max, window;
  std::optional<ContactKind> mode;
  std::optional<std::string> format;

  uint64_t content_hash = 0;
  std::string source;  // file path or "<inline>"

  // Builds the engine input. With `cuts_as_equations` the cut lines join the
  // plain equations (mld mode); pia mode instead requires cuts only.
  HyperquotientSpec to_spec(bool cuts_as_equations) const;
  HyperquotientSpec to_pia_spec() const;
  SearchBounds merge_bounds(const SearchBounds& defaults) const;
};

Scenario parse_scenario_text(const std::string& text, const std::string& source_name);
Scenario load_scenario(const std::filesystem::path& path);

}  // namespace arcmld
