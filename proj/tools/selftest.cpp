#include "selftest.hpp"

#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "arcmld/errors.hpp"
#include "arcmld/groebner.hpp"
#include "arcmld/hensel.hpp"
#include "arcmld/jets.hpp"
#include "arcmld/mld.hpp"
#include "arcmld/quotient.hpp"
#include "arcmld/report.hpp"
#include "arcmld/scenario.hpp"
#include "arcmld/singularity.hpp"
#include "arcmld/toric.hpp"

namespace arcmld {

namespace {

struct Fixture {
  const char* name;
  std::function<void()> body;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error(what);
}

template <typename Fn>
void expect_error(ErrorCode code, Fn&& fn) {
  try {
    fn();
  } catch (const ArcError& e) {
    if (e.code() == code) return;
    throw std::runtime_error(std::string("wrong error code: got ") + e.what());
  }
  throw std::runtime_error(std::string("expected error ") + error_code_name(code));
}

CylinderSpec simple_spec(const VarSetPtr& ambient, const std::string& name, const Ideal& ideal,
                         ContactKind kind, int order) {
  CylinderSpec spec;
  spec.ambient = ambient;
  spec.registry.emplace(name, ideal);
  spec.clauses.push_back(ContactClause{name, kind, order});
  return spec;
}

std::vector<Fixture> fixtures() {
  std::vector<Fixture> fs;

  fs.push_back({"groebner: (x^2-1, x-1) lex -> (x-1)", [] {
    auto v = make_varset({"x", "y"});
    Ideal g = groebner(Ideal(v, {parse_poly("x^2-1", v), parse_poly("x-1", v)}),
                       MonomialOrder::Lex);
    expect(g.gens.size() == 1 && g.gens[0] == parse_poly("x-1", v), g.to_string());
  }});
  fs.push_back({"groebner: (x, y) degrevlex stays (x, y)", [] {
    auto v = make_varset({"x", "y"});
    Ideal g = groebner(Ideal(v, {parse_poly("x", v), parse_poly("y", v)}));
    expect(g.gens.size() == 2, g.to_string());
  }});
  fs.push_back({"groebner: (x y - 1, x) is the unit ideal", [] {
    auto v = make_varset({"x", "y"});
    Ideal g = groebner(Ideal(v, {parse_poly("x*y-1", v), parse_poly("x", v)}),
                       MonomialOrder::Lex);
    expect(g.has_unit_generator(), g.to_string());
  }});
  fs.push_back({"krull_dim: 0, (x), (x^2-y^3), (1) in Q[x,y]", [] {
    auto v = make_varset({"x", "y"});
    expect(krull_dim(Ideal(v)) == 2, "zero ideal");
    expect(krull_dim(Ideal(v, {parse_poly("x", v)})) == 1, "(x)");
    expect(krull_dim(Ideal(v, {parse_poly("x^2-y^3", v)})) == 1, "cusp");
    expect(!krull_dim(Ideal(v, {parse_poly("1", v)})).has_value(), "unit");
  }});
  fs.push_back({"saturate: (xy):(x)=(y), (x):(y)=(x), (x^2):(x)=(1)", [] {
    auto v = make_varset({"x", "y"});
    Ideal s1 = saturate(Ideal(v, {parse_poly("x*y", v)}), Ideal(v, {parse_poly("x", v)}));
    expect(s1.gens.size() == 1 && s1.gens[0] == parse_poly("y", v), s1.to_string());
    Ideal s2 = saturate(Ideal(v, {parse_poly("x", v)}), Ideal(v, {parse_poly("y", v)}));
    expect(s2.gens.size() == 1 && s2.gens[0] == parse_poly("x", v), s2.to_string());
    Ideal s3 = saturate(Ideal(v, {parse_poly("x^2", v)}), Ideal(v, {parse_poly("x", v)}));
    expect(s3.has_unit_generator(), s3.to_string());
  }});

  fs.push_back({"jet_expand: x^2-y^3 at level 1", [] {
    auto v = make_varset({"x", "y", "t"});
    JetRing ring = make_jet_ring(make_varset({"x", "y"}), 1);
    auto c = jet_expand(parse_poly("x^2-y^3", v), ring);
    expect(c[0] == parse_poly("x_0^2-y_0^3", ring.vars), c[0].to_string());
    expect(c[1] == parse_poly("2x_0*x_1-3y_0^2*y_1", ring.vars), c[1].to_string());
  }});
  fs.push_back({"jet_expand: x at level 2 and x - t at level 1", [] {
    auto v = make_varset({"x", "t"});
    JetRing r2 = make_jet_ring(make_varset({"x"}), 2);
    auto c = jet_expand(parse_poly("x", v), r2);
    expect(c[0] == parse_poly("x_0", r2.vars) && c[1] == parse_poly("x_1", r2.vars) &&
               c[2] == parse_poly("x_2", r2.vars),
           "x expansion");
    JetRing r1 = make_jet_ring(make_varset({"x"}), 1);
    auto d = jet_expand(parse_poly("x - t", v), r1);
    expect(d[0] == parse_poly("x_0", r1.vars) && d[1] == parse_poly("x_1 - 1", r1.vars),
           "x - t expansion");
  }});
  fs.push_back({"jet_ideal: (x) level 1 and (t x - t) level 1", [] {
    auto v = make_varset({"x", "t"});
    JetRing ring = make_jet_ring(make_varset({"x"}), 1);
    Ideal j1 = jet_ideal(Ideal(v, {parse_poly("x", v)}), ring);
    expect(j1.gens.size() == 2, j1.to_string());
    Ideal j2 = jet_ideal(Ideal(v, {parse_poly("t*x - t", v)}), ring);
    expect(j2.gens.size() == 1 && j2.gens[0] == parse_poly("x_0 - 1", ring.vars),
           j2.to_string());
  }});
  fs.push_back({"contact: AtLeast((x),3) at level 3 in A^1", [] {
    auto v = make_varset({"x", "t"});
    CylinderSpec spec = simple_spec(v, "a", Ideal(v, {parse_poly("x", v)}),
                                    ContactKind::AtLeast, 3);
    ContactConditions cc = contact_conditions(spec, 3);
    expect(cc.closed.gens.size() == 3 && cc.exclusion_extras.empty(), cc.closed.to_string());
  }});
  fs.push_back({"contact: Exact((x),1) at level 2 in A^1", [] {
    auto v = make_varset({"x", "t"});
    CylinderSpec spec = simple_spec(v, "a", Ideal(v, {parse_poly("x", v)}),
                                    ContactKind::Exact, 1);
    ContactConditions cc = contact_conditions(spec, 2);
    expect(cc.closed.gens.size() == 1, cc.closed.to_string());
    expect(cc.exclusion_extras.size() == 1 && cc.exclusion_extras[0].gens.size() == 1,
           "one exclusion");
    expect(cc.exclusion(0).gens.size() == 2, "E_1 = closed + coefficient");
  }});
  fs.push_back({"contact: AtLeast((x,y),1) at level 1 in A^2", [] {
    auto v = make_varset({"x", "y", "t"});
    CylinderSpec spec = simple_spec(
        v, "a", Ideal(v, {parse_poly("x", v), parse_poly("y", v)}), ContactKind::AtLeast, 1);
    ContactConditions cc = contact_conditions(spec, 1);
    expect(cc.closed.gens.size() == 2, cc.closed.to_string());
  }});
  fs.push_back({"codim: Cont>=3((x)) in A^1 has codim 3", [] {
    auto v = make_varset({"x", "t"});
    CylinderSpec spec = simple_spec(v, "a", Ideal(v, {parse_poly("x", v)}),
                                    ContactKind::AtLeast, 3);
    CodimCertificate cert = cylinder_codim(spec, 1, {3, 4});
    expect(cert.stabilized && cert.codim == 3, cert.codim_string());
  }});
  fs.push_back({"codim: Cont>=1((x,y)) in A^2 has codim 2", [] {
    auto v = make_varset({"x", "y", "t"});
    CylinderSpec spec = simple_spec(
        v, "a", Ideal(v, {parse_poly("x", v), parse_poly("y", v)}), ContactKind::AtLeast, 1);
    CodimCertificate cert = cylinder_codim(spec, 2, {1, 2});
    expect(cert.stabilized && cert.codim == 2, cert.codim_string());
  }});
  fs.push_back({"codim: twisted maximal ideal of 1/2(1,1) has codim 0", [] {
    auto v = make_varset({"x", "y", "t"});
    Ideal tw(v, {parse_poly("t*x^2", v), parse_poly("t*x*y", v), parse_poly("t*y^2", v)});
    CylinderSpec spec = simple_spec(v, "m", tw, ContactKind::AtLeast, 1);
    CodimCertificate cert = cylinder_codim(spec, 2, {1, 2});
    expect(cert.stabilized && cert.codim == 0, cert.codim_string());
  }});

  fs.push_back({"group: enumerate 1/2(1,1) and 1/3(1,1)", [] {
    GroupSpec g2{2, {{1, 1}}};
    auto e2 = enumerate_group(g2, 2);
    expect(e2.size() == 2 && e2[0].is_identity() && e2[1].weights == std::vector<int>{1, 1},
           "1/2(1,1)");
    GroupSpec g3{3, {{1, 1}}};
    auto e3 = enumerate_group(g3, 2);
    expect(e3.size() == 3 && e3[0].is_identity(), "1/3(1,1)");
  }});
  fs.push_back({"group: 1/2(1,2) is a pseudo-reflection (error)", [] {
    expect_error(ErrorCode::PseudoReflection,
                 [] { enumerate_group(GroupSpec{2, {{1, 2}}}, 2); });
  }});
  fs.push_back({"age': 1/2(1,1) -> 1, identity in N=3 -> 3, 1/3(1,2) -> 1", [] {
    expect(age_prime(normalize_element(2, {1, 1})) == 1, "1/2(1,1)");
    expect(age_prime(normalize_element(1, {1, 1, 1})) == 3, "identity");
    expect(age_prime(normalize_element(3, {1, 2})) == 1, "1/3(1,2)");
  }});
  fs.push_back({"invariance: x^2+y^2 yes, x no, xy under 1/3(1,2) yes", [] {
    auto v = make_varset({"x", "y", "t"});
    GroupSpec half{2, {{1, 1}}};
    expect(check_invariant(parse_poly("x^2+y^2", v), half), "x^2+y^2");
    expect(!check_invariant(parse_poly("x", v), half), "x");
    GroupSpec third{3, {{1, 2}}};
    expect(check_invariant(parse_poly("x*y", v), third), "xy");
  }});
  fs.push_back({"twist: invariants pick up integer t-powers", [] {
    auto v = make_varset({"x", "y", "t"});
    Poly f = twist(parse_poly("x^2+y^2", v), normalize_element(2, {1, 1}));
    expect(f == parse_poly("t*x^2 + t*y^2", v), f.to_string());
    Poly g = twist(parse_poly("x*y", v), normalize_element(3, {1, 2}));
    expect(g == parse_poly("t*x*y", v), g.to_string());
  }});
  fs.push_back({"twist: non-invariant monomial raises FractionalExponent", [] {
    auto v = make_varset({"x", "y", "t"});
    expect_error(ErrorCode::FractionalExponent,
                 [&] { twist(parse_poly("x", v), normalize_element(2, {1, 1})); });
  }});

  fs.push_back({"fitting: c=1 cusp gives (2x, -3y^2, x^2-y^3)", [] {
    auto v = make_varset({"x", "y", "t"});
    Ideal j = fitting_jacobian({parse_poly("x^2-y^3", v)}, v);
    expect(j.gens.size() == 3 && j.gens[0] == parse_poly("2x", v) &&
               j.gens[1] == parse_poly("-3y^2", v),
           j.to_string());
  }});
  fs.push_back({"fitting: c=0 is the unit ideal", [] {
    auto v = make_varset({"x", "t"});
    Ideal j = fitting_jacobian({}, v);
    expect(j.has_unit_generator(), j.to_string());
  }});
  fs.push_back({"fitting: twisted quadric", [] {
    auto v = make_varset({"x", "y", "z", "t"});
    Ideal j = fitting_jacobian({parse_poly("t*(x^2+y^2+z^2)", v)}, v);
    expect(j.gens.size() == 4 && j.gens[0] == parse_poly("2t*x", v), j.to_string());
  }});
  fs.push_back({"model: pure quotient 1/2(1,1) twists m_x to (tx^2, txy, ty^2)", [] {
    HyperquotientSpec spec =
        make_hyperquotient(2, {"x", "y"}, GroupSpec{2, {{1, 1}}}, {}, {});
    spec.validate();
    TwistedModel m = build_twisted_model(spec, normalize_element(2, {1, 1}));
    expect(m.equations.empty() && m.fitting.has_unit_generator(), "no equations");
    expect(m.maximal_twist.gens.size() == 3, m.maximal_twist.to_string());
    auto v = spec.ambient;
    for (const char* want : {"t*y^2", "t*x*y", "t*x^2"}) {
      bool found = false;
      for (const auto& g : m.maximal_twist.gens) {
        if (g == parse_poly(want, v)) found = true;
      }
      expect(found, std::string("missing twisted generator ") + want);
    }
  }});
  fs.push_back({"model: identity twist scales every variable by t", [] {
    HyperquotientSpec spec = make_hyperquotient(3, {"x", "y", "z"}, GroupSpec{1, {}},
                                                {}, {});
    auto v = spec.ambient;
    HyperquotientSpec spec_eq =
        make_hyperquotient(3, {"x", "y", "z"}, GroupSpec{1, {}},
                           {parse_poly("x*y - z^2", v)}, {});
    TwistedModel m = build_twisted_model(spec_eq, normalize_element(1, {1, 1, 1}));
    expect(m.equations[0] == parse_poly("t^2*x*y - t^2*z^2", v), m.equations[0].to_string());
  }});
  fs.push_back({"model: 1/2(1,1,1) quadric twists to t(x^2+y^2+z^2)", [] {
    GroupSpec g{2, {{1, 1, 1}}};
    auto pre = make_varset({"x", "y", "z", "t"});
    HyperquotientSpec spec = make_hyperquotient(
        3, {"x", "y", "z"}, g, {parse_poly("x^2+y^2+z^2", pre)}, {});
    TwistedModel m = build_twisted_model(spec, normalize_element(2, {1, 1, 1}));
    expect(m.equations[0] == parse_poly("t*x^2+t*y^2+t*z^2", spec.ambient),
           m.equations[0].to_string());
  }});
  fs.push_back({"cylinder_family: pure quotient w=(), b1=0", [] {
    HyperquotientSpec spec =
        make_hyperquotient(2, {"x", "y"}, GroupSpec{2, {{1, 1}}}, {}, {});
    TwistedModel m = build_twisted_model(spec, normalize_element(2, {1, 1}));
    CylinderSpec cyl = cylinder_family(spec, m, {}, 0);
    expect(cyl.clauses.size() == 2, "two clauses");
    expect(cyl.clauses[0].ideal == "m_x" && cyl.clauses[0].order == 1, "m_x clause");
    expect(cyl.clauses[1].ideal == "jac" && cyl.clauses[1].kind == ContactKind::Exact &&
               cyl.clauses[1].order == 0,
           "vacuous jac clause");
  }});

  fs.push_back({"error: LevelTooSmall from contact conditions", [] {
    auto v = make_varset({"x", "t"});
    CylinderSpec spec = simple_spec(v, "a", Ideal(v, {parse_poly("x", v)}),
                                    ContactKind::AtLeast, 3);
    expect_error(ErrorCode::LevelTooSmall, [&] { contact_conditions(spec, 1); });
  }});
  fs.push_back({"error: NonMonomial from the toric oracle", [] {
    auto pre = make_varset({"x", "y", "t"});
    IdealFactor fac;
    fac.name = "a";
    fac.ideal = Ideal(pre, {parse_poly("x + y", pre)});
    fac.delta = Rat(1);
    HyperquotientSpec spec =
        make_hyperquotient(2, {"x", "y"}, GroupSpec{1, {}}, {}, {fac});
    expect_error(ErrorCode::NonMonomial, [&] { toric_mld_for_spec(spec); });
  }});
  fs.push_back({"error: NotInMaximalIdeal from pia_check", [] {
    auto pre = make_varset({"x", "y", "t"});
    HyperquotientSpec spec = make_hyperquotient(
        2, {"x", "y"}, GroupSpec{1, {}}, {parse_poly("x + 1", pre)}, {});
    expect_error(ErrorCode::NotInMaximalIdeal, [&] {
      pia_check(spec, SearchBounds{1, 1, 2});
    });
  }});
  fs.push_back({"error: MinorOrderTooHigh from hensel_lift", [] {
    auto xv = make_varset({"x", "t"});
    auto tv = make_varset({"t"});
    expect_error(ErrorCode::MinorOrderTooHigh, [&] {
      hensel_lift({parse_poly("x^2", xv)}, {parse_poly("t", tv)}, 1, 0, {0});
    });
  }});

  fs.push_back({"hensel: x^2 - t^2 lifts x = t exactly", [] {
    auto xv = make_varset({"x", "t"});
    auto tv = make_varset({"t"});
    HenselResult r = hensel_lift({parse_poly("x^2 - t^2", xv)}, {parse_poly("t", tv)}, 1, 0, {0});
    expect(r.lifted[0] == parse_poly("t", tv), r.lifted[0].to_string());
    expect(r.residual_order < 0, "exact root");
  }});
  fs.push_back({"hensel: cusp jet (t^3, t^2) lifts along x", [] {
    auto xv = make_varset({"x", "y", "t"});
    auto tv = make_varset({"t"});
    HenselResult r = hensel_lift({parse_poly("x^2 - y^3", xv)},
                                 {parse_poly("t^3", tv), parse_poly("t^2", tv)}, 3, 0, {0});
    expect(r.lifted[0] == parse_poly("t^3", tv) && r.lifted[1] == parse_poly("t^2", tv),
           "lift stays (t^3, t^2)");
  }});

  fs.push_back({"toric: 1/3(1,1) -> 2/3, A^2 -> 2, (A^2,(x,y)) -> 1", [] {
    ToricResult r1 = toric_mld(GroupSpec{3, {{1, 1}}}, 2, {});
    expect(r1.value == Rat(2, 3), rat_to_string(r1.value));
    ToricResult r2 = toric_mld(GroupSpec{1, {}}, 2, {});
    expect(r2.value == 2, rat_to_string(r2.value));
    std::vector<Exps> m{{1, 0}, {0, 1}};
    ToricResult r3 = toric_mld(GroupSpec{1, {}}, 2, {{m, Rat(1)}});
    expect(r3.value == 1, rat_to_string(r3.value));
  }});
  fs.push_back({"mld: A^2 gives 2 at the identity", [] {
    MldReport rep = mld_smooth_ambient(2, {"x", "y"}, {}, SearchBounds{});
    expect(rep.value == Rat(2), format_report_human(rep));
    expect(rep.oracle_agrees.value_or(false), "oracle agreement");
  }});
  fs.push_back({"mld: 1/2(1,1) gives 1", [] {
    HyperquotientSpec spec =
        make_hyperquotient(2, {"x", "y"}, GroupSpec{2, {{1, 1}}}, {}, {});
    MldReport rep = mld_hyperquotient(spec, SearchBounds{});
    expect(rep.value == Rat(1), "value 1");
    expect(rep.oracle_agrees.value_or(false), "oracle agreement");
  }});

  return fs;
}

}  // namespace

int run_selftest() {
  int failures = 0;
  for (const auto& f : fixtures()) {
    try {
      f.body();
      std::cout << "ok   " << f.name << "\n";
    } catch (const std::exception& e) {
      ++failures;
      std::cout << "FAIL " << f.name << ": " << e.what() << "\n";
    }
  }
  std::cout << (failures == 0 ? "selftest passed" : "selftest FAILED") << "\n";
  return failures;
}

}  // namespace arcmld
