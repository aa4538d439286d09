#include "arcmld/scenario.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "arcmld/cache.hpp"
#include "arcmld/errors.hpp"

namespace arcmld {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// Quotes bare identifiers used as object keys so the relaxed group syntax
// {d: 3, generators: [[1,1]]} parses as JSON.
std::string quote_bare_keys(const std::string& text) {
  std::string out;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        ++j;
      }
      size_t k = j;
      while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
      if (k < text.size() && text[k] == ':') {
        out += '"' + text.substr(i, j - i) + '"';
      } else {
        out += text.substr(i, j - i);
      }
      i = j;
    } else {
      out += c;
      ++i;
    }
  }
  return out;
}

std::vector<std::string> split_top_level(const std::string& s, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty()) parts.push_back(trim(cur));
  return parts;
}

[[noreturn]] void bad_line(int lineno, const std::string& what) {
  throw ArcError(ErrorCode::ParseError,
                 "scenario line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

Scenario parse_scenario_text(const std::string& text, const std::string& source_name) {
  Scenario scn;
  scn.source = source_name;
  scn.content_hash = fnv1a64(text);

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool header_seen = false;
  std::vector<std::pair<int, std::string>> deferred_polys;  // equations/cuts/ideals wait for vars
  std::vector<std::pair<int, std::string>> deferred_cuts;
  std::vector<std::tuple<int, std::string>> deferred_ideals;

  while (std::getline(in, line)) {
    ++lineno;
    std::string stripped = trim(line);
    size_t hash_pos = stripped.find('#');
    if (hash_pos != std::string::npos) stripped = trim(stripped.substr(0, hash_pos));
    if (stripped.empty()) continue;

    if (!header_seen) {
      if (stripped != "arcmld-scenario 1") {
        bad_line(lineno, "expected header 'arcmld-scenario 1'");
      }
      header_seen = true;
      continue;
    }

    size_t colon = stripped.find(':');
    if (colon == std::string::npos) bad_line(lineno, "expected 'key: value'");
    std::string key = trim(stripped.substr(0, colon));
    std::string value = trim(stripped.substr(colon + 1));

    if (key == "name") {
      scn.name = value;
    } else if (key == "vars") {
      for (auto& v : split_top_level(value, ',')) {
        if (v.empty()) bad_line(lineno, "empty variable name");
        if (v == "t") bad_line(lineno, "'t' is reserved for the deformation variable");
        scn.var_names.push_back(v);
      }
      scn.n = static_cast<int>(scn.var_names.size());
    } else if (key == "group") {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(quote_bare_keys(value));
      } catch (const nlohmann::json::exception& e) {
        bad_line(lineno, std::string("group syntax: ") + e.what());
      }
      if (!j.contains("d") || !j["d"].is_number_integer() || j["d"].get<int>() < 1) {
        bad_line(lineno, "group needs a positive integer d");
      }
      scn.group.d = j["d"].get<int>();
      if (j.contains("generators")) {
        for (const auto& gen : j["generators"]) {
          std::vector<int> w;
          for (const auto& x : gen) w.push_back(x.get<int>());
          scn.group.generators.push_back(std::move(w));
        }
      }
    } else if (key == "equation") {
      deferred_polys.emplace_back(lineno, value);
    } else if (key == "cut") {
      deferred_cuts.emplace_back(lineno, value);
    } else if (key == "ideal") {
      deferred_ideals.emplace_back(lineno, value);
    } else if (key == "wmax") {
      scn.w_max = std::stoi(value);
    } else if (key == "bmax") {
      scn.b_max = std::stoi(value);
    } else if (key == "window") {
      scn.window = std::stoi(value);
    } else if (key == "mode") {
      if (value == "atleast") scn.mode = ContactKind::AtLeast;
      else if (value == "exact") scn.mode = ContactKind::Exact;
      else bad_line(lineno, "mode must be 'atleast' or 'exact'");
    } else if (key == "format") {
      if (value != "human" && value != "record") bad_line(lineno, "format must be human|record");
      scn.format = value;
    } else {
      bad_line(lineno, "unknown key '" + key + "'");
    }
  }
  if (!header_seen) {
    throw ArcError(ErrorCode::ParseError, "scenario is missing the version header");
  }
  if (scn.var_names.empty()) {
    throw ArcError(ErrorCode::ParseError, "scenario declares no variables");
  }
  if (scn.name.empty()) scn.name = "unnamed";

  std::vector<std::string> amb_names = scn.var_names;
  amb_names.push_back("t");
  VarSetPtr ambient = make_varset(amb_names);

  for (const auto& [ln, s] : deferred_polys) {
    scn.equations.push_back(parse_poly(s, ambient));
  }
  for (const auto& [ln, s] : deferred_cuts) {
    scn.cuts.push_back(parse_poly(s, ambient));
  }
  for (const auto& [ln, s] : deferred_ideals) {
    // name = (g1, g2, ...) ^ delta   (delta optional, default 1)
    size_t eq = s.find('=');
    if (eq == std::string::npos) bad_line(ln, "ideal syntax: name = (gens) ^ delta");
    IdealFactor fac;
    fac.name = trim(s.substr(0, eq));
    if (fac.name.empty()) bad_line(ln, "ideal needs a name");
    std::string rest = trim(s.substr(eq + 1));
    size_t open = rest.find('(');
    size_t close = rest.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open) {
      bad_line(ln, "ideal generators must be parenthesized");
    }
    fac.ideal = Ideal(ambient);
    for (const auto& g : split_top_level(rest.substr(open + 1, close - open - 1), ',')) {
      fac.ideal.gens.push_back(parse_poly(g, ambient));
    }
    if (fac.ideal.gens.empty()) bad_line(ln, "ideal needs at least one generator");
    std::string tail = trim(rest.substr(close + 1));
    if (tail.empty()) {
      fac.delta = Rat(1);
    } else if (tail[0] == '^') {
      fac.delta = rat_from_string(trim(tail.substr(1)));
      if (fac.delta <= 0) bad_line(ln, "ideal exponent must be positive");
    } else {
      bad_line(ln, "unexpected trailing text after ideal");
    }
    for (const auto& other : scn.factors) {
      if (other.name == fac.name) bad_line(ln, "duplicate ideal name '" + fac.name + "'");
    }
    scn.factors.push_back(std::move(fac));
  }
  return scn;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ArcError(ErrorCode::ParseError, "cannot open scenario file " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario_text(buf.str(), path.string());
}

HyperquotientSpec Scenario::to_spec(bool cuts_as_equations) const {
  std::vector<Poly> eqs = equations;
  if (cuts_as_equations) {
    for (const auto& c : cuts) eqs.push_back(c);
  }
  return make_hyperquotient(n, var_names, group, std::move(eqs), factors);
}

HyperquotientSpec Scenario::to_pia_spec() const {
  if (cuts.empty()) {
    throw ArcError(ErrorCode::ParseError, "pia mode needs at least one 'cut:' line");
  }
  if (!equations.empty()) {
    throw ArcError(ErrorCode::ParseError,
                   "pia mode expects the ambient to be a pure quotient (no 'equation:' lines)");
  }
  return make_hyperquotient(n, var_names, group, cuts, factors);
}

SearchBounds Scenario::merge_bounds(const SearchBounds& defaults) const {
  SearchBounds b = defaults;
  if (w_max) b.w_max = *w_max;
  if (b_max) b.b_max = *b_max;
  if (window) b.window = *window;
  return b;
}

}  // namespace arcmld
