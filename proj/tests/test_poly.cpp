#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "arcmld/errors.hpp"
#include "arcmld/poly.hpp"

using namespace arcmld;

namespace {

Poly random_poly(const VarSetPtr& vars, std::mt19937& rng, int max_deg = 3, int max_terms = 4) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> exp(0, max_deg);
  std::uniform_int_distribution<int> coef(-5, 5);
  Poly p = Poly::zero(vars);
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    Exps e(vars->size());
    for (auto& x : e) x = exp(rng);
    int c = coef(rng);
    if (c == 0) c = 1;
    p = p + Poly::monomial(vars, e, Rat(c));
  }
  return p;
}

}  // namespace

TEST_CASE("parser handles coefficients, powers and implicit products") {
  auto v = make_varset({"x", "y"});
  CHECK(parse_poly("3x^2*y", v) == parse_poly("3 * x^2 * y", v));
  CHECK(parse_poly("1/2 x", v) == Poly::variable(v, 0) * Rat(1, 2));
  CHECK(parse_poly("x^2 - 2x + 1", v) == parse_poly("(x-1)^2", v));
  CHECK(parse_poly("-x + x", v).is_zero());
  CHECK(parse_poly("2(x+y)", v) == parse_poly("2x + 2y", v));
  CHECK(parse_poly("0", v).is_zero());
  CHECK(parse_poly("7/14", v) == Poly::constant(v, Rat(1, 2)));
}

TEST_CASE("parser rejects bad input") {
  auto v = make_varset({"x"});
  CHECK_THROWS_AS(parse_poly("x +", v), ArcError);
  CHECK_THROWS_AS(parse_poly("z", v), ArcError);
  CHECK_THROWS_AS(parse_poly("x^", v), ArcError);
  CHECK_THROWS_AS(parse_poly("(x", v), ArcError);
}

TEST_CASE("arithmetic basics and invariants") {
  auto v = make_varset({"x", "y"});
  Poly x = Poly::variable(v, 0);
  Poly y = Poly::variable(v, 1);
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK((x + y).pow(2) == x * x + 2 * x * y + y * y);

  // no zero coefficients stored
  Poly z = x - x;
  CHECK(z.is_zero());
  CHECK(z.num_terms() == 0);

  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    Poly a = random_poly(v, rng), b = random_poly(v, rng), c = random_poly(v, rng);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    for (const auto& [e, coef] : (a * b - b * a).terms()) {
      (void)e;
      CHECK(coef != 0);
    }
  }
}

TEST_CASE("derivative follows the product rule") {
  auto v = make_varset({"x", "y"});
  std::mt19937 rng(11);
  for (int i = 0; i < 30; ++i) {
    Poly a = random_poly(v, rng), b = random_poly(v, rng);
    CHECK((a * b).derivative(0) == a.derivative(0) * b + a * b.derivative(0));
  }
  CHECK(parse_poly("x^2-y^3", v).derivative(0) == parse_poly("2x", v));
  CHECK(parse_poly("x^2-y^3", v).derivative(1) == parse_poly("-3y^2", v));
}

TEST_CASE("substitution composes") {
  auto v = make_varset({"x", "y"});
  auto w = make_varset({"t"});
  Poly f = parse_poly("x^2 - y^3", v);
  std::vector<Poly> arc{parse_poly("t^3", w), parse_poly("t^2", w)};
  CHECK(f.substitute(arc).is_zero());
  std::vector<Poly> shift{parse_poly("t^3 + t^4", w), parse_poly("t^2", w)};
  Poly g = f.substitute(shift);
  CHECK(g == parse_poly("2t^7 + t^8", w));
}

TEST_CASE("lift to a larger ring and printing round-trip") {
  auto v = make_varset({"x"});
  auto w = make_varset({"y", "x", "t"});
  Poly f = parse_poly("x^2 - 3/2", v);
  Poly g = f.lift(w);
  CHECK(g == parse_poly("x^2 - 3/2", w));
  CHECK(parse_poly(g.to_string(), w) == g);

  std::mt19937 rng(3);
  auto big = make_varset({"a", "b", "c"});
  for (int i = 0; i < 40; ++i) {
    Poly p = random_poly(big, rng);
    CHECK(parse_poly(p.to_string(), big) == p);
  }
}

TEST_CASE("primitive part clears denominators and content") {
  auto v = make_varset({"x"});
  Poly f = parse_poly("4/6 x^2 - 2/3", v);
  Poly p = f.primitive_part();
  CHECK(p == parse_poly("x^2 - 1", v));
}
