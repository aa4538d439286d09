#pragma once

#include <vector>

#include "arcmld/poly.hpp"

namespace arcmld {

// Diagonal group element: modulus d and weights normalized into [1, d].
// The identity carries weight d in every coordinate, so the twist below sends
// x_i to t * x_i for it.
struct GroupElement {
  int d = 1;
  std::vector<int> weights;

  bool is_identity() const;
  GroupElement inverse() const;
  GroupElement compose(const GroupElement& other) const;
  std::string to_string() const;

  bool operator==(const GroupElement& o) const { return d == o.d && weights == o.weights; }
  bool operator<(const GroupElement& o) const { return weights < o.weights; }
};

// Finite diagonal abelian action given by generator weight vectors mod d.
struct GroupSpec {
  int d = 1;
  std::vector<std::vector<int>> generators;

  int rank() const { return generators.empty() ? 0 : static_cast<int>(generators.front().size()); }
};

GroupElement normalize_element(int d, const std::vector<int>& weights);

// All distinct elements, identity first, the rest in ascending weight order.
// Raises PseudoReflection when a non-identity element fixes a hyperplane
// (fewer than two coordinates with weight != d).
std::vector<GroupElement> enumerate_group(const GroupSpec& spec, int n_vars);

// age'(gamma) = sum e_i / d, exact.
Rat age_prime(const GroupElement& gamma);

// True iff every monomial of f has weight 0 mod d for every generator.
// t-exponents are ignored.
bool check_invariant(const Poly& f, const GroupSpec& spec);

// Denef-Loeser twist: c x^a t^k  ->  c x^a t^(k + sum a_i e_i / d). The
// polynomial must live in a ring containing "t"; non-invariant monomials raise
// FractionalExponent.
Poly twist(const Poly& f, const GroupElement& gamma);

// Minimal generating monomials (exponent vectors) of the invariant maximal
// ideal; exponents bounded by d componentwise.
std::vector<Exps> invariant_monomial_generators(const GroupSpec& spec, int n_vars);

}  // namespace arcmld
