#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "arcmld/cache.hpp"
#include "arcmld/errors.hpp"
#include "arcmld/jets.hpp"
#include "arcmld/mld.hpp"
#include "arcmld/report.hpp"
#include "arcmld/scenario.hpp"
#include "arcmld/version.hpp"
#include "selftest.hpp"

namespace {

using namespace arcmld;

struct CommonOpts {
  std::string scenario_path;
  std::string cache_dir;
  std::string out_dir = ".";
  std::string format;  // empty: scenario default, then "human"
  int jobs = 1;
  int w_max = -1;
  int b_max = -1;
  int window = -1;
  std::string mode;
};

std::string effective_format(const CommonOpts& opts, const Scenario& scn) {
  if (!opts.format.empty()) return opts.format;
  if (scn.format) return *scn.format;
  return "human";
}

SearchBounds effective_bounds(const CommonOpts& opts, const Scenario& scn) {
  SearchBounds b = scn.merge_bounds(SearchBounds{});
  if (opts.w_max >= 0) b.w_max = opts.w_max;
  if (opts.b_max >= 0) b.b_max = opts.b_max;
  if (opts.window >= 0) b.window = opts.window;
  return b;
}

ContactKind effective_mode(const CommonOpts& opts, const Scenario& scn) {
  if (!opts.mode.empty()) {
    if (opts.mode == "exact") return ContactKind::Exact;
    if (opts.mode == "atleast") return ContactKind::AtLeast;
    throw ArcError(ErrorCode::ParseError, "--contact must be atleast|exact");
  }
  return scn.mode.value_or(ContactKind::AtLeast);
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::create_directories(path.parent_path().empty() ? "." : path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ArcError(ErrorCode::ParseError, "cannot write " + path.string());
  out << content;
}

EngineHooks make_hooks(const MeasurementCache& cache, uint64_t scenario_hash) {
  EngineHooks hooks;
  if (!cache.enabled()) return hooks;
  hooks.lookup = [&cache, scenario_hash](const std::string& row_key, int level) {
    return cache.lookup(MeasurementCache::full_key(scenario_hash, row_key), level);
  };
  hooks.store = [&cache, scenario_hash](const std::string& row_key, int level,
                                        const LevelMeasurement& m) {
    cache.store(MeasurementCache::full_key(scenario_hash, row_key), level, m);
  };
  return hooks;
}

int cmd_jet(const CommonOpts& opts, int level) {
  Scenario scn = load_scenario(opts.scenario_path);
  std::vector<Poly> eqs = scn.equations;
  for (const auto& c : scn.cuts) eqs.push_back(c);
  if (eqs.empty()) {
    std::cout << "no equations in scenario\n";
    return 0;
  }
  VarSetPtr base = make_varset(scn.var_names);
  JetRing ring = make_jet_ring(base, level);
  Ideal amb(eqs.front().vars(), eqs);
  Ideal jets = jet_ideal(amb, ring);
  for (const auto& g : jets.gens) std::cout << g.to_string() << "\n";
  return 0;
}

int cmd_contact(const CommonOpts& opts, int level, int gamma_index, int b1,
                const std::string& w_text) {
  Scenario scn = load_scenario(opts.scenario_path);
  HyperquotientSpec spec = scn.to_spec(true);
  spec.validate();
  std::vector<GroupElement> gammas = enumerate_group(spec.group, spec.N);
  if (gamma_index < 0 || gamma_index >= static_cast<int>(gammas.size())) {
    throw ArcError(ErrorCode::ParseError, "gamma index out of range");
  }
  std::vector<int> w(spec.factors.size(), 0);
  if (!w_text.empty()) {
    std::istringstream in(w_text);
    std::string tok;
    size_t i = 0;
    while (std::getline(in, tok, ',')) {
      if (i >= w.size()) throw ArcError(ErrorCode::ParseError, "too many w components");
      w[i++] = std::stoi(tok);
    }
  }
  TwistedModel model = build_twisted_model(spec, gammas[gamma_index]);
  CylinderSpec cyl = cylinder_family(spec, model, w, b1, effective_mode(opts, scn));
  ContactConditions cc = contact_conditions(cyl, level);
  std::cout << "clauses: " << cyl.to_json() << "\n";
  std::cout << "closed ideal (" << cc.closed.gens.size() << " generators):\n";
  for (const auto& g : cc.closed.gens) std::cout << "  " << g.to_string() << "\n";
  for (size_t i = 0; i < cc.exclusion_extras.size(); ++i) {
    std::cout << "exclusion " << (i + 1) << " adds:\n";
    for (const auto& g : cc.exclusion_extras[i].gens) std::cout << "  " << g.to_string() << "\n";
  }
  return 0;
}

int cmd_mld(const CommonOpts& opts) {
  Scenario scn = load_scenario(opts.scenario_path);
  HyperquotientSpec spec = scn.to_spec(true);
  MeasurementCache cache(opts.cache_dir);
  EngineHooks hooks = make_hooks(cache, scn.content_hash);
  MldReport report = mld_hyperquotient(spec, effective_bounds(opts, scn),
                                       effective_mode(opts, scn),
                                       cache.enabled() ? &hooks : nullptr, opts.jobs);
  report.scenario = scn.name;
  report.input_hash = scn.content_hash;

  std::string fmt = effective_format(opts, scn);
  std::string body = fmt == "record" ? format_report_record(report)
                                     : format_report_human(report);
  std::cout << body;
  std::filesystem::path out(opts.out_dir);
  write_file(out / (scn.name + (fmt == "record" ? ".report.rec" : ".report.txt")), body);
  write_file(out / (scn.name + ".log"), format_run_log("mld", report));
  return 0;
}

int cmd_toric(const CommonOpts& opts) {
  Scenario scn = load_scenario(opts.scenario_path);
  HyperquotientSpec spec = scn.to_spec(true);
  spec.validate();
  ToricResult r = toric_mld_for_spec(spec);
  std::cout << "toric mld: " << rat_to_string(r.value) << "\n";
  std::cout << "attained at v = (";
  for (size_t i = 0; i < r.attained.size(); ++i) {
    if (i) std::cout << ", ";
    std::cout << rat_to_string(r.attained[i]);
  }
  std::cout << ")\n" << r.note << "\n";
  return 0;
}

int cmd_pia(const CommonOpts& opts) {
  Scenario scn = load_scenario(opts.scenario_path);
  HyperquotientSpec spec = scn.to_pia_spec();
  MeasurementCache cache(opts.cache_dir);
  EngineHooks hooks = make_hooks(cache, scn.content_hash);
  PiaReport report = pia_check(spec, effective_bounds(opts, scn), effective_mode(opts, scn),
                               cache.enabled() ? &hooks : nullptr, opts.jobs);
  report.lhs.scenario = scn.name + ".lhs";
  report.lhs.input_hash = scn.content_hash;
  report.rhs.scenario = scn.name + ".rhs";
  report.rhs.input_hash = scn.content_hash;

  std::string fmt = effective_format(opts, scn);
  std::string body = fmt == "record" ? format_pia_record(report) : format_pia_human(report);
  std::cout << body;
  std::filesystem::path out(opts.out_dir);
  write_file(out / (scn.name + (fmt == "record" ? ".pia.rec" : ".pia.txt")), body);
  write_file(out / (scn.name + ".log"), format_run_log("pia-check.lhs", report.lhs) +
                                            format_run_log("pia-check.rhs", report.rhs));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"arcmld: minimal log discrepancies of quotient and hyperquotient "
               "singularities via jet schemes"};
  app.set_version_flag("--version", std::string(arcmld::kEngineVersion));
  CommonOpts opts;
  const char* env_cache = std::getenv("ARCMLD_CACHE_DIR");
  if (env_cache) opts.cache_dir = env_cache;

  app.add_option("--cache-dir", opts.cache_dir,
                 "measurement cache directory (env ARCMLD_CACHE_DIR)");
  app.add_option("--out", opts.out_dir, "directory for report and log artifacts");
  app.add_option("--format", opts.format, "human|record")
      ->check(CLI::IsMember({"human", "record", ""}));
  app.add_option("--jobs", opts.jobs, "parallel candidate evaluations")->check(CLI::Range(1, 256));
  app.add_option("--wmax", opts.w_max, "override W_max");
  app.add_option("--bmax", opts.b_max, "override B_max");
  app.add_option("--window", opts.window, "override the negativity window K");
  app.add_option("--contact", opts.mode, "contact clause mode for ideal factors")
      ->check(CLI::IsMember({"atleast", "exact", ""}));

  int level = 1;
  int gamma_index = 0;
  int b1 = 0;
  std::string w_text;

  CLI::App* jet = app.add_subcommand("jet", "print jet-ideal generators of the equations");
  jet->add_option("scenario", opts.scenario_path)->required();
  jet->add_option("--level", level, "jet level")->required();

  CLI::App* contact = app.add_subcommand("contact", "print closed/exclusion ideals of a cylinder");
  contact->add_option("scenario", opts.scenario_path)->required();
  contact->add_option("--level", level, "jet level")->required();
  contact->add_option("--gamma-index", gamma_index, "group element index");
  contact->add_option("--b1", b1, "Fitting contact order");
  contact->add_option("--w", w_text, "comma-separated contact orders per ideal factor");

  CLI::App* mld = app.add_subcommand("mld", "run the mld engine and write a report");
  mld->add_option("scenario", opts.scenario_path)->required();

  CLI::App* toric = app.add_subcommand("toric", "run the toric brute-force oracle");
  toric->add_option("scenario", opts.scenario_path)->required();

  CLI::App* pia = app.add_subcommand("pia-check", "compare both sides of the PIA equality");
  pia->add_option("scenario", opts.scenario_path)->required();

  CLI::App* selftest = app.add_subcommand("selftest", "run the built-in example suite");

  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (jet->parsed()) return cmd_jet(opts, level);
    if (contact->parsed()) return cmd_contact(opts, level, gamma_index, b1, w_text);
    if (mld->parsed()) return cmd_mld(opts);
    if (toric->parsed()) return cmd_toric(opts);
    if (pia->parsed()) return cmd_pia(opts);
    if (selftest->parsed()) return arcmld::run_selftest() == 0 ? 0 : 1;
  } catch (const arcmld::ArcError& e) {
    std::cerr << "ARCMLD-ERROR " << e.what() << "\n";
    return e.code() == arcmld::ErrorCode::ParseError ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "ARCMLD-ERROR Internal: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
