#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "arcmld/poly.hpp"

namespace arcmld {

enum class MonomialOrder { Lex, DegRevLex };

// Term order with an optional elimination block: variables flagged in
// `elim` dominate all others (block degrevlex within both groups), which is
// what saturation and image computations need.
class TermOrder {
 public:
  static TermOrder lex(int nvars);
  static TermOrder degrevlex(int nvars);
  static TermOrder elimination(int nvars, std::vector<bool> elim);
  static TermOrder of(MonomialOrder o, int nvars);

  // Strict "a comes before b" in descending-leading-term conventions:
  // true when a is larger than b.
  bool greater(const Exps& a, const Exps& b) const;

 private:
  enum class Kind { Lex, DegRevLex, Block } kind_ = Kind::DegRevLex;
  int nvars_ = 0;
  std::vector<bool> elim_;
};

// Reduced, monic Groebner basis. The unit ideal comes back as {1}, the zero
// ideal as an empty generator list.
std::vector<Poly> groebner_basis(const std::vector<Poly>& gens, const TermOrder& order);

Ideal groebner(const Ideal& ideal, MonomialOrder order = MonomialOrder::DegRevLex);

// Fully reduces f against basis (which need not be a GB; against a GB this is
// the canonical normal form, zero iff f lies in the ideal).
Poly normal_form(const Poly& f, const std::vector<Poly>& basis, const TermOrder& order);

// Krull dimension of the quotient ring; std::nullopt marks the unit ideal
// (empty variety).
std::optional<int64_t> krull_dim(const Ideal& ideal,
                                 MonomialOrder order = MonomialOrder::DegRevLex);

// Dimension from an already computed Groebner basis: reads off the leading
// exponents w.r.t. `order` and solves the independent-set problem.
std::optional<int64_t> dim_from_basis(const std::vector<Poly>& basis, const VarSetPtr& vars,
                                      const TermOrder& order);

// Generators of I restricted to the non-eliminated variables (I cap k[rest]).
// Returned polynomials live in the same ring but avoid eliminated variables.
std::vector<Poly> eliminate(const std::vector<Poly>& gens, const VarSetPtr& vars,
                            const std::vector<bool>& elim);

// A : g^infty for a single polynomial via the inverse-variable trick.
Ideal saturate_principal(const Ideal& a, const Poly& g);

// Ideal intersection via one auxiliary variable.
Ideal intersect(const Ideal& lhs, const Ideal& rhs);

// A : B^infty, computed generator-wise as the intersection over generators g
// of A : g^infty. Saturating by the zero ideal yields the unit ideal (the
// locally closed set V(A) minus V(0) is empty).
Ideal saturate(const Ideal& a, const Ideal& b);

// Number of Buchberger runs since process start; the cache tests use this to
// prove that warm runs perform no Groebner computation.
uint64_t groebner_invocation_count();

}  // namespace arcmld
