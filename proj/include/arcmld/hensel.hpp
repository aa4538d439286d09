#pragma once

#include <vector>

#include "arcmld/poly.hpp"

namespace arcmld {

struct HenselResult {
  // One t-polynomial of degree <= m+1 per coordinate, agreeing with the input
  // jet modulo t^(m+1).
  std::vector<Poly> lifted;
  // Measured t-order of the S-column minor at the input jet.
  int minor_order = 0;
  // t-order of min_i F_i(lifted); -1 stands for an exact solution.
  int residual_order = -1;
};

// One Hensel/Newton step for a square system selected by `scols`:
// given F_1..F_r in the ambient variables (optionally with t) and a rational
// level-m jet (t-polynomials of degree <= m), produces a level-(m+1) jet
// solving F_i = 0 mod t^(m+oo+2), where oo is the measured t-order of the
// S-minor of the Jacobian at the jet. Requires oo <= m and
// F_i(jet) = 0 mod t^(m+oo+1); when no r x r minor meets that bound the call
// fails with MinorOrderTooHigh. The parameter e records the caller's expected
// minor order and only feeds diagnostics.
HenselResult hensel_lift(const std::vector<Poly>& system, const std::vector<Poly>& jet,
                         int m, int e, const std::vector<int>& scols);

// t-order of a univariate polynomial in t; -1 for the zero polynomial
// (order infinity).
int t_order(const Poly& p);

}  // namespace arcmld
