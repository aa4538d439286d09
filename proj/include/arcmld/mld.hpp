#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "arcmld/singularity.hpp"
#include "arcmld/toric.hpp"

namespace arcmld {

struct SearchBounds {
  int w_max = 6;   // per ideal factor
  int b_max = 4;   // for b1
  int window = 3;  // K: consecutive decreases flagging non-lc evidence
};

struct CandidateRow {
  int gamma_index = 0;
  GroupElement gamma;
  int b1 = 0;
  std::vector<int> w;
  CodimCertificate cert;
  // codim + age'(gamma) - b1 - sum_j delta_j w_j; present iff the certificate
  // stabilized with finite codim.
  std::optional<Rat> value;
};

struct MldReport {
  std::string scenario;
  std::string engine_version;
  uint64_t input_hash = 0;
  SearchBounds bounds;
  ContactKind contact_mode = ContactKind::AtLeast;
  std::vector<CandidateRow> rows;  // ordered by (gamma index, b1, w)
  std::optional<Rat> value;        // certified upper bound; nullopt = no finite row
  std::optional<size_t> attained;  // index into rows
  bool fully_stabilized = true;    // no row ended unstabilized
  bool negativity_evidence = false;
  std::optional<Rat> oracle_value;
  std::optional<bool> oracle_agrees;
  std::string oracle_note;
  std::vector<std::string> assumptions;
};

// Cache hooks injected by the CLI; keys identify a candidate row, levels a
// single measurement.
struct EngineHooks {
  std::function<std::optional<LevelMeasurement>(const std::string& row_key, int level)> lookup;
  std::function<void(const std::string& row_key, int level, const LevelMeasurement&)> store;
};

// Truncated evaluation of the twisted-model infimum: enumerates gamma in G,
// b1 <= b_max and w <= w_max componentwise, measures each cylinder and
// returns the minimum over stabilized finite rows as a certified upper bound.
MldReport mld_hyperquotient(const HyperquotientSpec& spec, const SearchBounds& bounds,
                            ContactKind contact_mode = ContactKind::AtLeast,
                            const EngineHooks* hooks = nullptr, int jobs = 1);

// Smooth ambient space: the trivial group with c = 0.
MldReport mld_smooth_ambient(int n, std::vector<std::string> var_names,
                             std::vector<IdealFactor> factors, const SearchBounds& bounds,
                             ContactKind contact_mode = ContactKind::AtLeast,
                             const EngineHooks* hooks = nullptr, int jobs = 1);

struct PiaReport {
  MldReport lhs;  // ambient pair (h_1...h_c) a^delta with c = 0 equations
  MldReport rhs;  // the cut model with equations h_1..h_c
  bool pass = false;
  std::string detail;
};

// Precise inversion of adjunction check: the spec's equations act as the cut
// h_1..h_c. Each h must vanish at the origin (NotInMaximalIdeal otherwise).
PiaReport pia_check(const HyperquotientSpec& spec_with_cuts, const SearchBounds& bounds,
                    ContactKind contact_mode = ContactKind::AtLeast,
                    const EngineHooks* hooks = nullptr, int jobs = 1);

// Stable identifier for a candidate row, used as the cache key stem.
std::string candidate_key(const GroupElement& gamma, int b1, const std::vector<int>& w,
                          ContactKind mode);

}  // namespace arcmld
