#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "arcmld/groebner.hpp"
#include "arcmld/poly.hpp"

using namespace arcmld;

namespace {

Poly rand_poly(const VarSetPtr& vars, std::mt19937& rng, int max_deg = 2, int max_terms = 3) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> exp(0, max_deg);
  std::uniform_int_distribution<int> coef(-4, 4);
  Poly p = Poly::zero(vars);
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    Exps e(vars->size());
    for (auto& x : e) x = exp(rng);
    int c = coef(rng);
    if (c == 0) c = 2;
    p = p + Poly::monomial(vars, e, Rat(c));
  }
  return p;
}

}  // namespace

TEST_CASE("reduced bases for the contract examples") {
  auto v = make_varset({"x", "y"});
  Ideal g1 = groebner(Ideal(v, {parse_poly("x^2-1", v), parse_poly("x-1", v)}),
                      MonomialOrder::Lex);
  REQUIRE(g1.gens.size() == 1);
  CHECK(g1.gens[0] == parse_poly("x-1", v));

  Ideal g2 = groebner(Ideal(v, {parse_poly("x", v), parse_poly("y", v)}));
  CHECK(g2.gens.size() == 2);

  Ideal g3 = groebner(Ideal(v, {parse_poly("x*y-1", v), parse_poly("x", v)}),
                      MonomialOrder::Lex);
  CHECK(g3.has_unit_generator());
}

TEST_CASE("membership: constructed combinations reduce to zero") {
  auto v = make_varset({"x", "y", "z"});
  std::mt19937 rng(23);
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<Poly> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(rand_poly(v, rng));
    TermOrder ord = TermOrder::degrevlex(v->size());
    std::vector<Poly> gb = groebner_basis(gens, ord);
    // f = sum of random multiples of the generators
    Poly f = Poly::zero(v);
    for (const auto& g : gens) f = f + rand_poly(v, rng) * g;
    CHECK(normal_form(f, gb, ord).is_zero());
  }
}

TEST_CASE("normal form is the identity on reduced remainders") {
  auto v = make_varset({"x", "y"});
  TermOrder ord = TermOrder::degrevlex(2);
  std::vector<Poly> gb =
      groebner_basis({parse_poly("x^2 - y", v), parse_poly("y^2 - 1", v)}, ord);
  Poly f = parse_poly("x^4 + x*y^3", v);
  Poly r = normal_form(f, gb, ord);
  CHECK(normal_form(r, gb, ord) == r);
  CHECK(normal_form(f - r, gb, ord).is_zero());
}

TEST_CASE("krull_dim on the contract examples") {
  auto v = make_varset({"x", "y"});
  CHECK(krull_dim(Ideal(v)) == 2);
  CHECK(krull_dim(Ideal(v, {parse_poly("x", v)})) == 1);
  CHECK(krull_dim(Ideal(v, {parse_poly("x^2-y^3", v)})) == 1);
  CHECK(!krull_dim(Ideal(v, {parse_poly("1", v)})).has_value());

  auto w = make_varset({"x", "y", "z"});
  CHECK(krull_dim(Ideal(w, {parse_poly("x*y", w), parse_poly("x*z", w)})) == 2);
  CHECK(krull_dim(Ideal(w, {parse_poly("x", w), parse_poly("y", w), parse_poly("z", w)})) == 0);
}

TEST_CASE("krull_dim is order independent") {
  auto v = make_varset({"x", "y", "z"});
  std::vector<Ideal> corpus;
  corpus.push_back(Ideal(v, {parse_poly("x^2 - y*z", v)}));
  corpus.push_back(Ideal(v, {parse_poly("x*y - 1", v)}));
  corpus.push_back(Ideal(v, {parse_poly("x^2", v), parse_poly("x*y", v)}));
  corpus.push_back(Ideal(v, {parse_poly("x - z^2", v), parse_poly("y - z^3", v)}));
  std::mt19937 rng(5);
  for (int i = 0; i < 6; ++i) {
    corpus.push_back(Ideal(v, {rand_poly(v, rng), rand_poly(v, rng)}));
  }
  for (const auto& ideal : corpus) {
    CHECK(krull_dim(ideal, MonomialOrder::DegRevLex) == krull_dim(ideal, MonomialOrder::Lex));
  }
}

TEST_CASE("saturation: contract examples, idempotence, containment") {
  auto v = make_varset({"x", "y"});
  Ideal a1(v, {parse_poly("x*y", v)});
  Ideal b1(v, {parse_poly("x", v)});
  Ideal s1 = saturate(a1, b1);
  REQUIRE(s1.gens.size() == 1);
  CHECK(s1.gens[0] == parse_poly("y", v));

  Ideal s2 = saturate(Ideal(v, {parse_poly("x", v)}), Ideal(v, {parse_poly("y", v)}));
  CHECK(s2.gens.size() == 1);
  CHECK(s2.gens[0] == parse_poly("x", v));

  Ideal s3 = saturate(Ideal(v, {parse_poly("x^2", v)}), Ideal(v, {parse_poly("x", v)}));
  CHECK(s3.has_unit_generator());

  // idempotence and A subset A : B^inf on a mixed corpus
  std::mt19937 rng(17);
  TermOrder ord = TermOrder::degrevlex(2);
  for (int i = 0; i < 8; ++i) {
    Ideal a(v, {rand_poly(v, rng), rand_poly(v, rng)});
    Ideal b(v, {rand_poly(v, rng)});
    Ideal s = saturate(a, b);
    Ideal ss = saturate(s, b);
    CHECK(groebner(s).to_string() == groebner(ss).to_string());
    for (const auto& g : a.gens) {
      CHECK(normal_form(g, groebner(s).gens, ord).is_zero());
    }
  }
}

TEST_CASE("saturation by the zero ideal empties the set difference") {
  auto v = make_varset({"x", "y"});
  Ideal a(v, {parse_poly("x", v)});
  Ideal zero(v);
  CHECK(saturate(a, zero).has_unit_generator());
  Ideal with_zero_gen(v, {Poly::zero(v)});
  CHECK(saturate(a, with_zero_gen).has_unit_generator());
  // a zero generator alongside a unit one is redundant, not absorbing
  Ideal mixed(v, {Poly::zero(v), parse_poly("y", v)});
  Ideal s = saturate(a, mixed);
  REQUIRE(s.gens.size() == 1);
  CHECK(s.gens[0] == parse_poly("x", v));
}

TEST_CASE("dimension splits across saturation and sum") {
  // dim A = max(dim A:g^inf, dim A+(g)), hand-checked small cases
  auto v = make_varset({"x", "y", "z"});
  struct Case {
    std::string a1, a2, g;
  };
  std::vector<Case> cases{
      {"x*y", "", "x"},
      {"x*y", "x*z", "x"},
      {"x^2 - y^2", "", "x - y"},
      {"x*z - y^2", "", "z"},
  };
  for (const auto& c : cases) {
    std::vector<Poly> gens{parse_poly(c.a1, v)};
    if (!c.a2.empty()) gens.push_back(parse_poly(c.a2, v));
    Ideal a(v, gens);
    Poly g = parse_poly(c.g, v);
    auto dim_a = krull_dim(a);
    Ideal sat = saturate(a, Ideal(v, {g}));
    std::vector<Poly> sum_gens = gens;
    sum_gens.push_back(g);
    auto dim_sat = krull_dim(sat);
    auto dim_sum = krull_dim(Ideal(v, sum_gens));
    REQUIRE(dim_a.has_value());
    int64_t expected = -1;
    if (dim_sat) expected = std::max(expected, *dim_sat);
    if (dim_sum) expected = std::max(expected, *dim_sum);
    CHECK(*dim_a == expected);
  }
}

TEST_CASE("intersection meets both ideals") {
  auto v = make_varset({"x", "y"});
  Ideal i1(v, {parse_poly("x", v)});
  Ideal i2(v, {parse_poly("y", v)});
  Ideal m = intersect(i1, i2);
  REQUIRE(m.gens.size() == 1);
  CHECK(m.gens[0] == parse_poly("x*y", v));
}

TEST_CASE("elimination keeps only the retained block") {
  auto v = make_varset({"u", "x", "y"});
  std::vector<Poly> gens{parse_poly("x - u^2", v), parse_poly("y - u^3", v)};
  std::vector<bool> elim{true, false, false};
  std::vector<Poly> out = eliminate(gens, v, elim);
  REQUIRE(out.size() == 1);
  CHECK(out[0] == parse_poly("x^3 - y^2", v));
}
