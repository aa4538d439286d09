#include "arcmld/mld.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "arcmld/errors.hpp"
#include "arcmld/version.hpp"

namespace arcmld {

std::string candidate_key(const GroupElement& gamma, int b1, const std::vector<int>& w,
                          ContactKind mode) {
  std::ostringstream key;
  key << "g=" << gamma.to_string() << ";d=" << gamma.d << ";b1=" << b1 << ";w=(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) key << ",";
    key << w[i];
  }
  key << ");mode=" << (mode == ContactKind::AtLeast ? "atleast" : "exact");
  return key.str();
}

namespace {

void parallel_rows(size_t count, int jobs, const std::function<void(size_t)>& body) {
  if (jobs <= 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  int n_threads = std::min<int>(jobs, static_cast<int>(count));
  threads.reserve(n_threads);
  for (int i = 0; i < n_threads; ++i) threads.emplace_back(worker);
  for (auto& th : threads) th.join();
  if (error) std::rethrow_exception(error);
}

std::vector<std::vector<int>> w_grid(size_t factors, int w_max) {
  std::vector<std::vector<int>> grid;
  std::vector<int> w(factors, 0);
  while (true) {
    grid.push_back(w);
    size_t i = factors;
    while (i > 0 && w[i - 1] == w_max) {
      w[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
    ++w[i - 1];
  }
  if (factors == 0) grid.assign(1, {});
  return grid;
}

void detect_negativity(MldReport& report, const SearchBounds& bounds, size_t n_factors) {
  if (n_factors == 0 || bounds.window < 1) return;
  // Group rows into w_j-lines: same (gamma, b1, w with coordinate j removed).
  for (size_t j = 0; j < n_factors && !report.negativity_evidence; ++j) {
    std::map<std::string, std::vector<std::pair<int, const CandidateRow*>>> lines;
    for (const auto& row : report.rows) {
      std::ostringstream key;
      key << row.gamma_index << "|" << row.b1 << "|";
      for (size_t k = 0; k < row.w.size(); ++k) {
        if (k != j) key << row.w[k] << ",";
      }
      lines[key.str()].emplace_back(row.w[j], &row);
    }
    for (auto& [key, line] : lines) {
      std::sort(line.begin(), line.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      int streak = 0;
      for (size_t k = 1; k < line.size(); ++k) {
        const auto& prev = line[k - 1].second->value;
        const auto& cur = line[k].second->value;
        if (prev.has_value() && cur.has_value() && *cur < *prev) {
          if (++streak >= bounds.window) {
            report.negativity_evidence = true;
            break;
          }
        } else {
          streak = 0;
        }
      }
      if (report.negativity_evidence) break;
    }
  }
}

}  // namespace

MldReport mld_hyperquotient(const HyperquotientSpec& spec, const SearchBounds& bounds,
                            ContactKind contact_mode, const EngineHooks* hooks, int jobs) {
  if (bounds.w_max < 0 || bounds.b_max < 0 || bounds.window < 1) {
    throw ArcError(ErrorCode::ParseError, "search bounds must be positive");
  }
  spec.validate();

  MldReport report;
  report.engine_version = kEngineVersion;
  report.bounds = bounds;
  report.contact_mode = contact_mode;
  if (!spec.equations.empty()) {
    report.assumptions.push_back(
        "equations assumed to cut a normal klt complete intersection; "
        "dimension proxy checked (codim equals the number of equations)");
  }
  if (!spec.group.generators.empty()) {
    report.assumptions.push_back(
        "group action free in codimension one (pseudo-reflection check passed)");
  }

  std::vector<GroupElement> gammas = enumerate_group(spec.group, spec.N);
  std::vector<TwistedModel> models;
  models.reserve(gammas.size());
  for (const auto& g : gammas) models.push_back(build_twisted_model(spec, g));

  std::vector<std::vector<int>> grid = w_grid(spec.factors.size(), bounds.w_max);

  // Candidate rows in lexicographic (gamma index, b1, w) order.
  for (size_t gi = 0; gi < gammas.size(); ++gi) {
    for (int b1 = 0; b1 <= bounds.b_max; ++b1) {
      for (const auto& w : grid) {
        CandidateRow row;
        row.gamma_index = static_cast<int>(gi);
        row.gamma = gammas[gi];
        row.b1 = b1;
        row.w = w;
        report.rows.push_back(std::move(row));
      }
    }
  }

  const int n = spec.fiber_dim();
  parallel_rows(report.rows.size(), jobs, [&](size_t i) {
    CandidateRow& row = report.rows[i];
    CylinderSpec cyl =
        cylinder_family(spec, models[row.gamma_index], row.w, row.b1, contact_mode);
    int q = std::max(1, row.b1);
    for (int wj : row.w) q = std::max(q, wj);
    std::vector<int> schedule = default_schedule(q);
    std::string key = candidate_key(row.gamma, row.b1, row.w, contact_mode);
    auto measure = [&](int m) -> LevelMeasurement {
      if (hooks && hooks->lookup) {
        if (auto hit = hooks->lookup(key, m)) return *hit;
      }
      LevelMeasurement meas = measure_cylinder_level(cyl, n, m);
      if (hooks && hooks->store) hooks->store(key, m, meas);
      return meas;
    };
    row.cert = cylinder_codim_with(measure, true, n, schedule);
    if (row.cert.stabilized && row.cert.codim.has_value()) {
      Rat value(*row.cert.codim);
      value += age_prime(row.gamma);
      value -= Rat(row.b1);
      for (size_t j = 0; j < row.w.size(); ++j) value -= spec.factors[j].delta * Rat(row.w[j]);
      row.value = value;
    }
  });

  for (size_t i = 0; i < report.rows.size(); ++i) {
    const CandidateRow& row = report.rows[i];
    if (!row.cert.stabilized) report.fully_stabilized = false;
    if (row.value.has_value() &&
        (!report.value.has_value() || *row.value < *report.value)) {
      report.value = row.value;
      report.attained = i;
    }
  }

  detect_negativity(report, bounds, spec.factors.size());

  // Oracle comparison for c = 0 monomial scenarios.
  if (spec.equations.empty()) {
    try {
      ToricResult oracle = toric_mld_for_spec(spec);
      report.oracle_value = oracle.value;
      report.oracle_note = oracle.note;
      if (report.value.has_value()) {
        report.oracle_agrees = (*report.value == oracle.value);
      }
    } catch (const ArcError& e) {
      if (e.code() != ErrorCode::NonMonomial) throw;
    }
  }
  return report;
}

MldReport mld_smooth_ambient(int n, std::vector<std::string> var_names,
                             std::vector<IdealFactor> factors, const SearchBounds& bounds,
                             ContactKind contact_mode, const EngineHooks* hooks, int jobs) {
  GroupSpec trivial;
  trivial.d = 1;
  HyperquotientSpec spec =
      make_hyperquotient(n, std::move(var_names), trivial, {}, std::move(factors));
  return mld_hyperquotient(spec, bounds, contact_mode, hooks, jobs);
}

PiaReport pia_check(const HyperquotientSpec& spec_with_cuts, const SearchBounds& bounds,
                    ContactKind contact_mode, const EngineHooks* hooks, int jobs) {
  const auto& cuts = spec_with_cuts.equations;
  if (cuts.empty()) {
    throw ArcError(ErrorCode::ParseError, "pia check needs at least one cut equation");
  }
  Exps origin(spec_with_cuts.ambient->size(), 0);
  for (const auto& h : cuts) {
    auto it = h.terms().find(origin);
    if (it != h.terms().end()) {
      throw ArcError(ErrorCode::NotInMaximalIdeal,
                     "cut " + h.to_string() + " does not vanish at the origin");
    }
    if (!check_invariant(h, spec_with_cuts.group)) {
      throw ArcError(ErrorCode::FractionalExponent,
                     "cut " + h.to_string() + " is not invariant");
    }
  }

  // LHS: ambient quotient with the R-ideal (h_1)^1 ... (h_c)^1 * prod a_j^dj.
  HyperquotientSpec lhs = spec_with_cuts;
  lhs.equations.clear();
  std::vector<IdealFactor> lhs_factors;
  for (size_t i = 0; i < cuts.size(); ++i) {
    IdealFactor f;
    f.name = "cut" + std::to_string(i + 1);
    f.ideal = Ideal(spec_with_cuts.ambient, {cuts[i]});
    f.delta = Rat(1);
    lhs_factors.push_back(std::move(f));
  }
  for (const auto& f : spec_with_cuts.factors) lhs_factors.push_back(f);
  lhs.factors = std::move(lhs_factors);

  PiaReport out;
  out.lhs = mld_hyperquotient(lhs, bounds, contact_mode, hooks, jobs);
  out.rhs = mld_hyperquotient(spec_with_cuts, bounds, contact_mode, hooks, jobs);

  bool values_ok = out.lhs.value.has_value() && out.rhs.value.has_value() &&
                   *out.lhs.value == *out.rhs.value;
  out.pass = values_ok && out.lhs.fully_stabilized && out.rhs.fully_stabilized;
  std::ostringstream detail;
  detail << "lhs=" << (out.lhs.value ? rat_to_string(*out.lhs.value) : "none")
         << " rhs=" << (out.rhs.value ? rat_to_string(*out.rhs.value) : "none")
         << " stabilized=" << (out.lhs.fully_stabilized && out.rhs.fully_stabilized ? "yes" : "no");
  out.detail = detail.str();
  return out;
}

}  // namespace arcmld
