#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arcmld/groebner.hpp"
#include "arcmld/poly.hpp"

namespace arcmld {

// Level-m jet ring over a base of N ambient variables: one polynomial
// variable per (base variable, level) pair, named like "x_3". The deformation
// variable "t" of the inputs is the series parameter itself and gets no jet
// coordinates.
struct JetRing {
  VarSetPtr base;      // ambient variables, t excluded
  bool inputs_have_t;  // whether expansion inputs may mention t
  int level = 0;
  VarSetPtr vars;      // jet variables, level-major: x_0, y_0, x_1, ...

  int jet_index(int var, int lvl) const { return lvl * base->size() + var; }
  Poly jet_var(int var, int lvl) const { return Poly::variable(vars, jet_index(var, lvl)); }
  int level_of(int jet_var_index) const { return jet_var_index / base->size(); }
};

// `base` must not contain "t".
JetRing make_jet_ring(const VarSetPtr& base, int level, bool inputs_have_t = true);

// Substitutes x_j -> sum_l x_j^(l) t^l into f and returns the coefficients of
// t^0 .. t^m. f lives in the ambient variables, optionally with t.
std::vector<Poly> jet_expand(const Poly& f, const JetRing& ring);

// All t-coefficients 0..m of all generators, identically-zero ones dropped.
Ideal jet_ideal(const Ideal& ideal, const JetRing& ring);

enum class ContactKind { AtLeast, Exact };

struct ContactClause {
  std::string ideal;
  ContactKind kind = ContactKind::AtLeast;
  int order = 0;
};

// Symbolic cylinder: boolean combination of contact conditions on registered
// ambient ideals, optionally constrained to the jets of a model's defining
// equations. The clause on `fitting_name` (when present and Exact) drives the
// certified-codimension projection.
struct CylinderSpec {
  VarSetPtr ambient;  // ambient ring, possibly including "t"
  std::vector<ContactClause> clauses;
  std::map<std::string, Ideal> registry;
  std::vector<Poly> equations;
  std::string fitting_name;

  // Smallest jet level expressing every clause.
  int min_level() const;
  // Order of the Exact clause on the Fitting ideal, 0 when absent.
  int fitting_order() const;

  std::string to_json() const;
  static CylinderSpec from_json(const std::string& text, const VarSetPtr& ambient,
                                const std::map<std::string, Ideal>& registry);
};

struct ContactConditions {
  JetRing ring;
  Ideal closed;                          // A: all vanishing conditions
  std::vector<Ideal> exclusion_extras;   // per Exact clause, the order-e coefficients
  // Full exclusion ideal E_i = closed + extras[i], as in the contract.
  Ideal exclusion(size_t i) const;
};

// Realizes the spec at level m. Throws LevelTooSmall when m cannot express a
// requested order.
ContactConditions contact_conditions(const CylinderSpec& spec, int m);

struct LevelMeasurement {
  int level = 0;
  // Dimension of the level-m image of the cylinder; nullopt when empty.
  std::optional<int64_t> image_dim;
  std::optional<int64_t> codim;  // (m+1) n - image_dim; nullopt when empty
};

struct CodimCertificate {
  // Final codimension; nullopt encodes +infinity (empty cylinder).
  std::optional<int64_t> codim;
  std::vector<LevelMeasurement> levels;
  bool stabilized = false;
  bool certified = false;  // Exact Fitting clause present
  int fiber_dim = 0;

  bool is_infinite() const { return stabilized && !codim.has_value(); }
  std::string codim_string() const;
};

// Default level schedule for a spec whose maximal referenced order is q.
std::vector<int> default_schedule(int q);

// Measures the level-m image of the cylinder: realizes all conditions at
// level m+e (e = Fitting contact order), saturates away the exclusions,
// projects out the top e levels, and takes the Krull dimension.
LevelMeasurement measure_cylinder_level(const CylinderSpec& spec, int fiber_dim, int m);

// Certificate assembly over a schedule with an injectable measurement source
// (the CLI threads its cache through here). Stops early once two consecutive
// schedule levels agree or a level comes back empty.
CodimCertificate cylinder_codim_with(const std::function<LevelMeasurement(int)>& measure,
                                     bool certified, int fiber_dim,
                                     const std::vector<int>& schedule);

// Measures codim(C) = (m+1) n - dim psi_m(C) along the schedule.
CodimCertificate cylinder_codim(const CylinderSpec& spec, int fiber_dim,
                                const std::vector<int>& schedule);

}  // namespace arcmld
