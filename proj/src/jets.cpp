#include "arcmld/jets.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "arcmld/errors.hpp"

namespace arcmld {

JetRing make_jet_ring(const VarSetPtr& base, int level, bool inputs_have_t) {
  if (base->index_of("t") >= 0) {
    throw ArcError(ErrorCode::Internal, "jet ring base must not contain t");
  }
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(base->size()) * (level + 1));
  for (int l = 0; l <= level; ++l) {
    for (int j = 0; j < base->size(); ++j) {
      names.push_back(base->name(j) + "_" + std::to_string(l));
    }
  }
  JetRing ring;
  ring.base = base;
  ring.inputs_have_t = inputs_have_t;
  ring.level = level;
  ring.vars = make_varset(std::move(names));
  return ring;
}

namespace {

// Truncated power series with polynomial coefficients, length level+1.
using Series = std::vector<Poly>;

Series series_zero(const JetRing& ring) {
  return Series(ring.level + 1, Poly::zero(ring.vars));
}

Series series_mul(const Series& a, const Series& b, const JetRing& ring) {
  Series r = series_zero(ring);
  for (int i = 0; i <= ring.level; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= ring.level; ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] = r[i + j] + a[i] * b[j];
    }
  }
  return r;
}

}  // namespace

std::vector<Poly> jet_expand(const Poly& f, const JetRing& ring) {
  const VarSetPtr& fv = f.vars();
  const int t_index = fv->index_of("t");
  // map f's variables into the jet base
  std::vector<int> base_of(fv->size(), -1);
  for (int i = 0; i < fv->size(); ++i) {
    if (i == t_index) continue;
    base_of[i] = ring.base->index_of(fv->name(i));
    if (base_of[i] < 0) {
      throw ArcError(ErrorCode::Internal,
                     "variable " + fv->name(i) + " not in jet ring base");
    }
  }

  // per-variable arc series and cached powers
  std::map<std::pair<int, int>, Series> powers;
  auto arc_power = [&](auto&& self, int base_var, int exp) -> const Series& {
    auto key = std::make_pair(base_var, exp);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    Series s;
    if (exp == 1) {
      s = series_zero(ring);
      for (int l = 0; l <= ring.level; ++l) s[l] = ring.jet_var(base_var, l);
    } else {
      s = series_mul(self(self, base_var, exp - 1), self(self, base_var, 1), ring);
    }
    return powers.emplace(std::move(key), std::move(s)).first->second;
  };

  Series acc = series_zero(ring);
  for (const auto& [e, c] : f.terms()) {
    int64_t t_exp = t_index >= 0 ? e[t_index] : 0;
    if (t_exp > ring.level) continue;
    Series term = series_zero(ring);
    term[static_cast<size_t>(t_exp)] = Poly::constant(ring.vars, c);
    for (int i = 0; i < fv->size(); ++i) {
      if (i == t_index || e[i] == 0) continue;
      term = series_mul(term, arc_power(arc_power, base_of[i], e[i]), ring);
    }
    for (int l = 0; l <= ring.level; ++l) acc[l] = acc[l] + term[l];
  }
  return acc;
}

Ideal jet_ideal(const Ideal& ideal, const JetRing& ring) {
  Ideal out(ring.vars);
  for (const auto& g : ideal.gens) {
    for (const auto& coeff : jet_expand(g, ring)) {
      if (!coeff.is_zero()) out.gens.push_back(coeff);
    }
  }
  return out;
}

int CylinderSpec::min_level() const {
  int q = 0;
  for (const auto& cl : clauses) {
    q = std::max(q, cl.kind == ContactKind::Exact ? cl.order : cl.order - 1);
  }
  return q;
}

int CylinderSpec::fitting_order() const {
  for (const auto& cl : clauses) {
    if (cl.kind == ContactKind::Exact && !fitting_name.empty() && cl.ideal == fitting_name) {
      return cl.order;
    }
  }
  return 0;
}

std::string CylinderSpec::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& cl : clauses) {
    arr.push_back({{"ideal", cl.ideal},
                   {"kind", cl.kind == ContactKind::AtLeast ? "atleast" : "exact"},
                   {"order", cl.order}});
  }
  return arr.dump();
}

CylinderSpec CylinderSpec::from_json(const std::string& text, const VarSetPtr& ambient,
                                     const std::map<std::string, Ideal>& registry) {
  CylinderSpec spec;
  spec.ambient = ambient;
  spec.registry = registry;
  nlohmann::json arr;
  try {
    arr = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ArcError(ErrorCode::ParseError, std::string("cylinder spec json: ") + e.what());
  }
  if (!arr.is_array()) {
    throw ArcError(ErrorCode::ParseError, "cylinder spec json: expected array of clauses");
  }
  for (const auto& item : arr) {
    ContactClause cl;
    cl.ideal = item.at("ideal").get<std::string>();
    std::string kind = item.at("kind").get<std::string>();
    if (kind == "atleast") {
      cl.kind = ContactKind::AtLeast;
    } else if (kind == "exact") {
      cl.kind = ContactKind::Exact;
    } else {
      throw ArcError(ErrorCode::ParseError, "cylinder spec json: bad kind '" + kind + "'");
    }
    cl.order = item.at("order").get<int>();
    if (cl.order < 0) {
      throw ArcError(ErrorCode::ParseError, "cylinder spec json: negative order");
    }
    if (!spec.registry.count(cl.ideal)) {
      throw ArcError(ErrorCode::ParseError,
                     "cylinder spec json: unregistered ideal '" + cl.ideal + "'");
    }
    spec.clauses.push_back(std::move(cl));
  }
  return spec;
}

Ideal ContactConditions::exclusion(size_t i) const {
  Ideal e = closed;
  for (const auto& g : exclusion_extras.at(i).gens) e.gens.push_back(g);
  return e;
}

namespace {

VarSetPtr strip_t(const VarSetPtr& ambient) {
  std::vector<std::string> names;
  for (const auto& n : ambient->names()) {
    if (n != "t") names.push_back(n);
  }
  return make_varset(std::move(names));
}

}  // namespace

ContactConditions contact_conditions(const CylinderSpec& spec, int m) {
  if (m < spec.min_level()) {
    throw ArcError(ErrorCode::LevelTooSmall,
                   "level " + std::to_string(m) + " cannot express contact orders up to " +
                       std::to_string(spec.min_level()));
  }
  JetRing ring = make_jet_ring(strip_t(spec.ambient), m);
  ContactConditions out{ring, Ideal(ring.vars), {}};

  // Model equations constrain the full jet prefix.
  for (const auto& f : spec.equations) {
    for (const auto& coeff : jet_expand(f, ring)) {
      if (!coeff.is_zero()) out.closed.gens.push_back(coeff);
    }
  }

  for (const auto& cl : spec.clauses) {
    auto it = spec.registry.find(cl.ideal);
    if (it == spec.registry.end()) {
      throw ArcError(ErrorCode::Internal, "unregistered ideal '" + cl.ideal + "'");
    }
    Ideal extra(ring.vars);
    for (const auto& g : it->second.gens) {
      std::vector<Poly> coeffs = jet_expand(g, ring);
      for (int l = 0; l < cl.order; ++l) {
        if (!coeffs[l].is_zero()) out.closed.gens.push_back(coeffs[l]);
      }
      if (cl.kind == ContactKind::Exact) {
        extra.gens.push_back(coeffs[cl.order]);  // zero generators matter here
      }
    }
    if (cl.kind == ContactKind::Exact) out.exclusion_extras.push_back(std::move(extra));
  }
  return out;
}

std::vector<int> default_schedule(int q) {
  q = std::max(q, 1);
  return {q + 2, q + 3, 2 * q + 4};
}

std::string CodimCertificate::codim_string() const {
  if (!codim.has_value()) return "inf";
  return std::to_string(*codim);
}

LevelMeasurement measure_cylinder_level(const CylinderSpec& spec, int fiber_dim, int m) {
  const int e = spec.fitting_order();
  const int n_base = strip_t(spec.ambient)->size();
  ContactConditions cond = contact_conditions(spec, m + e);
  LevelMeasurement meas;
  meas.level = m;

  if (cond.closed.has_unit_generator()) return meas;  // empty

  // Exclusions turn into localizations: the locally closed set is the union
  // over generator choices of V(closed) cap D(g_1) cap ... and its dimension
  // is the maximum over those charts. Each chart gets one inverse variable;
  // the top e levels are projected away along with the inverses.
  std::vector<std::vector<Poly>> extras;
  for (const auto& ex : cond.exclusion_extras) {
    std::vector<Poly> nonzero;
    bool vacuous = false;
    for (const auto& g : ex.gens) {
      if (g.is_zero()) continue;
      if (g.is_unit_constant()) vacuous = true;
      nonzero.push_back(g);
    }
    if (nonzero.empty()) return meas;  // every generator vanishes identically
    if (!vacuous) extras.push_back(std::move(nonzero));
  }

  std::vector<std::string> ext_names = cond.ring.vars->names();
  for (size_t i = 0; i < extras.size(); ++i) {
    ext_names.push_back("@inv" + std::to_string(i));
  }
  VarSetPtr ext = make_varset(std::move(ext_names));
  const int n_jet_vars = cond.ring.vars->size();
  std::vector<bool> top(ext->size(), false);
  int64_t n_top = 0;
  for (int i = 0; i < n_jet_vars; ++i) {
    if (cond.ring.level_of(i) > m) {
      top[i] = true;
      ++n_top;
    }
  }

  std::vector<Poly> base_gens;
  bool top_appears = false;
  for (const auto& g : cond.closed.gens) {
    if (g.is_zero()) continue;
    base_gens.push_back(g.lift(ext));
    for (const auto& [exp, c] : base_gens.back().terms()) {
      for (int i = 0; i < n_jet_vars && !top_appears; ++i) {
        if (top[i] && exp[i] > 0) top_appears = true;
      }
    }
  }
  for (const auto& ex : extras) {
    for (const auto& g : ex) {
      for (const auto& [exp, c] : g.terms()) {
        for (int i = 0; i < cond.ring.vars->size() && !top_appears; ++i) {
          if (top[i] && exp[i] > 0) top_appears = true;
        }
      }
    }
  }

  std::optional<int64_t> best;
  std::vector<size_t> choice(extras.size(), 0);
  while (true) {
    std::vector<Poly> gens = base_gens;
    for (size_t i = 0; i < extras.size(); ++i) {
      Poly inv = Poly::variable(ext, n_jet_vars + static_cast<int>(i));
      gens.push_back(Poly::constant(ext, 1) - inv * extras[i][choice[i]].lift(ext));
    }
    std::optional<int64_t> dim;
    if (!top_appears) {
      // The top e levels are free coordinates of the chart: a plain
      // degrevlex basis suffices and the projection just drops them. The
      // inverse variables are graph coordinates and add no dimension.
      TermOrder ord = TermOrder::degrevlex(ext->size());
      std::vector<Poly> gb = groebner_basis(gens, ord);
      auto full = dim_from_basis(gb, ext, ord);
      if (full.has_value()) dim = *full - n_top;
    } else {
      // Some generator reaches into the projected levels: eliminate them
      // together with the inverse variables.
      std::vector<bool> elim = top;
      int64_t dropped = n_top;
      for (int i = n_jet_vars; i < ext->size(); ++i) {
        elim[i] = true;
        ++dropped;
      }
      TermOrder low_order = TermOrder::elimination(ext->size(), elim);
      std::vector<Poly> kept = eliminate(gens, ext, elim);
      auto low = dim_from_basis(kept, ext, low_order);
      if (low.has_value()) dim = *low - dropped;
    }
    if (dim.has_value() && (!best || *dim > *best)) best = dim;

    size_t i = 0;
    while (i < extras.size() && ++choice[i] == extras[i].size()) {
      choice[i] = 0;
      ++i;
    }
    if (i == extras.size() || extras.empty()) break;
  }

  if (best.has_value()) {
    meas.image_dim = best;
    meas.codim = static_cast<int64_t>(m + 1) * fiber_dim - *best;
  }
  return meas;
}

CodimCertificate cylinder_codim_with(const std::function<LevelMeasurement(int)>& measure,
                                     bool certified, int fiber_dim,
                                     const std::vector<int>& schedule) {
  if (schedule.size() < 2) {
    throw ArcError(ErrorCode::Internal, "schedule needs at least two levels");
  }
  CodimCertificate cert;
  cert.fiber_dim = fiber_dim;
  cert.certified = certified;

  for (int m : schedule) {
    LevelMeasurement meas = measure(m);
    cert.levels.push_back(meas);
    if (!meas.image_dim.has_value()) {
      // Conditions only tighten with the level: empty stays empty.
      cert.codim = std::nullopt;
      cert.stabilized = true;
      return cert;
    }
    size_t k = cert.levels.size();
    if (k >= 2 && cert.levels[k - 1].codim == cert.levels[k - 2].codim) {
      cert.codim = cert.levels[k - 1].codim;
      cert.stabilized = true;
      return cert;
    }
  }
  cert.codim = cert.levels.back().codim;
  cert.stabilized = false;  // NotStabilized warning, not a failure
  return cert;
}

CodimCertificate cylinder_codim(const CylinderSpec& spec, int fiber_dim,
                                const std::vector<int>& schedule) {
  bool certified = !spec.fitting_name.empty() &&
                   std::any_of(spec.clauses.begin(), spec.clauses.end(), [&](const auto& cl) {
                     return cl.kind == ContactKind::Exact && cl.ideal == spec.fitting_name;
                   });
  return cylinder_codim_with(
      [&](int m) { return measure_cylinder_level(spec, fiber_dim, m); }, certified, fiber_dim,
      schedule);
}

}  // namespace arcmld
