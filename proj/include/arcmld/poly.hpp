#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "arcmld/rational.hpp"
#include "arcmld/varset.hpp"

namespace arcmld {

// Exponent vector; size always matches the variable set.
using Exps = std::vector<int32_t>;

int64_t total_degree(const Exps& e);

// Immutable exact multivariate polynomial over the rationals.
//
// Terms live in a map keyed by exponent vector (plain lexicographic vector
// ordering, independent of any monomial order), so equality and printing are
// canonical. Zero coefficients are never stored.
class Poly {
 public:
  Poly() = default;
  explicit Poly(VarSetPtr vars) : vars_(std::move(vars)) {}

  static Poly zero(VarSetPtr vars) { return Poly(std::move(vars)); }
  static Poly constant(VarSetPtr vars, Rat c);
  static Poly variable(VarSetPtr vars, int index);
  static Poly monomial(VarSetPtr vars, Exps exps, Rat c);

  const VarSetPtr& vars() const { return vars_; }
  const std::map<Exps, Rat>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Nonzero constant polynomial (unit of the ring).
  bool is_unit_constant() const;
  int num_terms() const { return static_cast<int>(terms_.size()); }
  int64_t degree() const;          // total degree, -1 for the zero polynomial
  int64_t degree_in(int var) const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& c) const;
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly pow(int n) const;
  Poly derivative(int var) const;

  // Divides out the rational content and makes the first stored term's
  // coefficient positive. Returns zero unchanged.
  Poly primitive_part() const;

  // Re-express over `target`, matching variables by name. Every variable
  // actually appearing must exist in the target set.
  Poly lift(const VarSetPtr& target) const;

  // Simultaneous substitution; `images[i]` replaces variable i. All images
  // must share one variable set, which becomes the result's.
  Poly substitute(const std::vector<Poly>& images) const;

  std::string to_string() const;

  // Internal-use constructor taking an already clean term map.
  static Poly from_terms(VarSetPtr vars, std::map<Exps, Rat> terms);

 private:
  void add_term(const Exps& e, const Rat& c);

  VarSetPtr vars_;
  std::map<Exps, Rat> terms_;
};

Poly operator*(const Rat& c, const Poly& p);

// A finitely generated ideal. Generators all share one variable set; an empty
// or all-zero generator list denotes the zero ideal.
struct Ideal {
  VarSetPtr vars;
  std::vector<Poly> gens;

  Ideal() = default;
  explicit Ideal(VarSetPtr v) : vars(std::move(v)) {}
  Ideal(VarSetPtr v, std::vector<Poly> g);

  bool is_zero() const;
  // True when some generator is a nonzero constant.
  bool has_unit_generator() const;
  std::string to_string() const;
};

// Parses the ASCII polynomial syntax: rational coefficients ("3", "-5/2"),
// "^" for powers, "*" optional between factors, parentheses. Unknown
// identifiers raise ParseError.
Poly parse_poly(const std::string& text, const VarSetPtr& vars);

}  // namespace arcmld
