#include "arcmld/singularity.hpp"

#include <algorithm>

#include "arcmld/errors.hpp"
#include "arcmld/groebner.hpp"

namespace arcmld {

namespace {

VarSetPtr x_only_ring(const HyperquotientSpec& spec) {
  std::vector<std::string> names;
  for (const auto& n : spec.ambient->names()) {
    if (n != "t") names.push_back(n);
  }
  return make_varset(std::move(names));
}

}  // namespace

void HyperquotientSpec::validate() const {
  if (codim() > N) {
    throw ArcError(ErrorCode::ParseError, "more equations than ambient variables");
  }
  enumerate_group(group, N);  // pseudo-reflection check
  for (const auto& f : equations) {
    if (f.degree_in(ambient->index_of("t")) > 0) {
      throw ArcError(ErrorCode::ParseError, "defining equations must not involve t");
    }
    if (!check_invariant(f, group)) {
      throw ArcError(ErrorCode::FractionalExponent,
                     "equation " + f.to_string() + " is not invariant");
    }
  }
  for (const auto& fac : factors) {
    if (fac.delta <= 0) {
      throw ArcError(ErrorCode::ParseError, "ideal exponent must be positive");
    }
    for (const auto& g : fac.ideal.gens) {
      if (!check_invariant(g, group)) {
        throw ArcError(ErrorCode::FractionalExponent,
                       "generator " + g.to_string() + " of " + fac.name + " is not invariant");
      }
    }
  }
  if (!equations.empty()) {
    // Regular-sequence proxy: the complete intersection has the expected
    // dimension. Normality/klt of B stay unchecked (reported as assumptions).
    VarSetPtr xr = x_only_ring(*this);
    std::vector<Poly> fs;
    for (const auto& f : equations) fs.push_back(f.lift(xr));
    auto dim = krull_dim(Ideal(xr, fs));
    if (!dim.has_value() || *dim != N - codim()) {
      throw ArcError(ErrorCode::ParseError,
                     "equations do not cut a complete intersection of codimension " +
                         std::to_string(codim()));
    }
  }
}

HyperquotientSpec make_hyperquotient(int N, std::vector<std::string> var_names,
                                     GroupSpec group, std::vector<Poly> equations,
                                     std::vector<IdealFactor> factors) {
  if (static_cast<int>(var_names.size()) != N) {
    throw ArcError(ErrorCode::ParseError, "variable count mismatch");
  }
  for (const auto& n : var_names) {
    if (n == "t") throw ArcError(ErrorCode::ParseError, "'t' is reserved");
  }
  HyperquotientSpec spec;
  spec.N = N;
  spec.group = std::move(group);
  std::vector<std::string> names = var_names;
  names.push_back("t");
  spec.ambient = make_varset(std::move(names));

  for (auto& f : equations) spec.equations.push_back(f.lift(spec.ambient));
  for (auto& fac : factors) {
    if (fac.name == "m_x" || fac.name == "jac") {
      throw ArcError(ErrorCode::ParseError, "ideal name '" + fac.name + "' is reserved");
    }
    IdealFactor lifted;
    lifted.name = fac.name;
    lifted.delta = fac.delta;
    lifted.ideal = Ideal(spec.ambient);
    for (const auto& g : fac.ideal.gens) lifted.ideal.gens.push_back(g.lift(spec.ambient));
    spec.factors.push_back(std::move(lifted));
  }

  spec.maximal_ideal = Ideal(spec.ambient);
  for (const auto& e : invariant_monomial_generators(spec.group, N)) {
    Exps full(spec.ambient->size(), 0);
    for (int i = 0; i < N; ++i) full[i] = e[i];
    spec.maximal_ideal.gens.push_back(Poly::monomial(spec.ambient, std::move(full), Rat(1)));
  }
  return spec;
}

Ideal fitting_jacobian(const std::vector<Poly>& equations, const VarSetPtr& ambient) {
  Ideal out(ambient);
  const int c = static_cast<int>(equations.size());
  if (c == 0) {
    out.gens.push_back(Poly::constant(ambient, 1));
    return out;
  }
  std::vector<int> x_vars;
  for (int i = 0; i < ambient->size(); ++i) {
    if (ambient->name(i) != "t") x_vars.push_back(i);
  }
  std::vector<std::vector<Poly>> jac(c);
  for (int i = 0; i < c; ++i) {
    for (int xv : x_vars) jac[i].push_back(equations[i].derivative(xv));
  }
  // all c x c minors, columns in lexicographic order
  std::vector<int> rows(c);
  for (int i = 0; i < c; ++i) rows[i] = i;
  std::vector<int> comb(c);
  auto emit = [&](const std::vector<int>& cols) {
    // Laplace expansion along the first row.
    auto rec = [&](auto&& self, std::vector<int> rs, std::vector<int> cs) -> Poly {
      if (rs.empty()) return Poly::constant(ambient, 1);
      Poly acc = Poly::zero(ambient);
      for (size_t j = 0; j < cs.size(); ++j) {
        std::vector<int> rs2(rs.begin() + 1, rs.end());
        std::vector<int> cs2;
        for (size_t k = 0; k < cs.size(); ++k) {
          if (k != j) cs2.push_back(cs[k]);
        }
        Poly contrib = jac[rs[0]][cs[j]] * self(self, rs2, cs2);
        acc = (j % 2 == 0) ? acc + contrib : acc - contrib;
      }
      return acc;
    };
    Poly minor = rec(rec, rows, cols);
    if (!minor.is_zero()) out.gens.push_back(minor);
  };
  auto choose = [&](auto&& self, int start, int k) -> void {
    if (k == c) {
      emit(comb);
      return;
    }
    for (int i = start; i < static_cast<int>(x_vars.size()); ++i) {
      comb[k] = i;
      self(self, i + 1, k + 1);
    }
  };
  choose(choose, 0, 0);
  for (const auto& f : equations) out.gens.push_back(f);
  return out;
}

TwistedModel build_twisted_model(const HyperquotientSpec& spec, const GroupElement& gamma) {
  TwistedModel model;
  model.gamma = gamma;
  for (const auto& f : spec.equations) model.equations.push_back(twist(f, gamma));
  model.fitting = fitting_jacobian(model.equations, spec.ambient);
  for (const auto& fac : spec.factors) {
    Ideal tw(spec.ambient);
    for (const auto& g : fac.ideal.gens) tw.gens.push_back(twist(g, gamma));
    model.factor_twists.push_back(std::move(tw));
  }
  model.maximal_twist = Ideal(spec.ambient);
  for (const auto& g : spec.maximal_ideal.gens) {
    model.maximal_twist.gens.push_back(twist(g, gamma));
  }
  return model;
}

CylinderSpec cylinder_family(const HyperquotientSpec& spec, const TwistedModel& model,
                             const std::vector<int>& w, int b1, ContactKind factor_kind) {
  if (w.size() != spec.factors.size()) {
    throw ArcError(ErrorCode::Internal, "w-vector length must match the ideal factors");
  }
  if (b1 < 0) throw ArcError(ErrorCode::Internal, "b1 must be non-negative");

  CylinderSpec cyl;
  cyl.ambient = spec.ambient;
  cyl.equations = model.equations;
  cyl.fitting_name = "jac";
  for (size_t j = 0; j < spec.factors.size(); ++j) {
    cyl.registry.emplace(spec.factors[j].name, model.factor_twists[j]);
    cyl.clauses.push_back(ContactClause{spec.factors[j].name, factor_kind, w[j]});
  }
  cyl.registry.emplace("m_x", model.maximal_twist);
  cyl.clauses.push_back(ContactClause{"m_x", ContactKind::AtLeast, 1});
  cyl.registry.emplace("jac", model.fitting);
  cyl.clauses.push_back(ContactClause{"jac", ContactKind::Exact, b1});
  return cyl;
}

}  // namespace arcmld
