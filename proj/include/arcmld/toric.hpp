#pragma once

#include <string>
#include <vector>

#include "arcmld/quotient.hpp"
#include "arcmld/singularity.hpp"

namespace arcmld {

struct ToricResult {
  Rat value;
  std::vector<Rat> attained;  // minimizing lattice point, coordinates v_i
  int box = 0;                // coordinate ceiling used
  bool box_audit_ok = false;  // doubling the box did not change the minimum
  std::string note;
};

// Independent brute-force oracle for c = 0 monomial scenarios: minimum of
// sum_i v_i - sum_j delta_j ord_v(a_j) over lattice points
// v in Z^N + sum Z (weights/d) with 0 < v_i <= box. ord_v of a monomial ideal
// is the minimum of <v, a> over its generators' exponent vectors. The box
// defaults to N+1; the audit re-runs the search with twice the ceiling.
ToricResult toric_mld(const GroupSpec& group, int n_vars,
                      const std::vector<std::pair<std::vector<Exps>, Rat>>& monomial_factors,
                      int box = 0);

// Extracts exponent vectors from a monomial ideal; raises NonMonomial when a
// generator has more than one term. Exponents are over the x-variables only.
std::vector<Exps> monomial_exponents(const Ideal& ideal, int n_vars);

// Convenience: oracle applied to a c = 0 spec with monomial factors.
// Raises NonMonomial when it does not apply.
ToricResult toric_mld_for_spec(const HyperquotientSpec& spec, int box = 0);

}  // namespace arcmld
