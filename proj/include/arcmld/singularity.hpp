#pragma once

#include <string>
#include <vector>

#include "arcmld/jets.hpp"
#include "arcmld/quotient.hpp"

namespace arcmld {

// One factor of the R-ideal: a named ideal with a positive rational exponent.
struct IdealFactor {
  std::string name;
  Ideal ideal;  // generators in the ambient ring (x-vars plus t)
  Rat delta;
};

// The hyperquotient input: N ambient coordinates acted on by a diagonal
// abelian group, a complete intersection f_1..f_c of invariants (possibly
// empty), an R-ideal, and the invariant maximal ideal of the origin.
struct HyperquotientSpec {
  int N = 0;
  GroupSpec group;
  VarSetPtr ambient;  // x_1..x_N, t (t last)
  std::vector<Poly> equations;
  std::vector<IdealFactor> factors;
  Ideal maximal_ideal;  // invariant generators of m_x, t-free

  int codim() const { return static_cast<int>(equations.size()); }
  int fiber_dim() const { return N - codim(); }

  // Invariance of equations and factor generators, c <= N, positive deltas,
  // pseudo-reflection-free group, and the regular-sequence dimension proxy
  // (codim of (f_1..f_c) equals c). Throws on violation.
  void validate() const;
};

// Builds the ambient ring x-vars + t and the invariant maximal ideal.
HyperquotientSpec make_hyperquotient(int N, std::vector<std::string> var_names,
                                     GroupSpec group, std::vector<Poly> equations,
                                     std::vector<IdealFactor> factors);

struct TwistedModel {
  GroupElement gamma;
  std::vector<Poly> equations;       // F_i = twist(f_i, gamma)
  Ideal fitting;                     // J_gamma
  std::vector<Ideal> factor_twists;  // one per R-ideal factor
  Ideal maximal_twist;
};

// c x c minors of (dF_i/dx_j) plus the equations themselves; the derivative
// never touches t. For c = 0 this is the unit ideal (empty minor convention).
Ideal fitting_jacobian(const std::vector<Poly>& equations, const VarSetPtr& ambient);

TwistedModel build_twisted_model(const HyperquotientSpec& spec, const GroupElement& gamma);

// Cylinder C_{w, gamma, b1}: per-factor contact of order w_j (kind chosen by
// the engine mode), Cont^{>=1} of the twisted maximal ideal, Cont^{b1} of the
// Fitting ideal, over the jets of the twisted equations.
CylinderSpec cylinder_family(const HyperquotientSpec& spec, const TwistedModel& model,
                             const std::vector<int>& w, int b1,
                             ContactKind factor_kind = ContactKind::AtLeast);

}  // namespace arcmld
