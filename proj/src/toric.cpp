#include "arcmld/toric.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "arcmld/errors.hpp"

namespace arcmld {

std::vector<Exps> monomial_exponents(const Ideal& ideal, int n_vars) {
  std::vector<Exps> out;
  const int t_index = ideal.vars->index_of("t");
  for (const auto& g : ideal.gens) {
    if (g.is_zero()) continue;
    if (g.num_terms() != 1) {
      throw ArcError(ErrorCode::NonMonomial,
                     "generator " + g.to_string() + " is not a monomial");
    }
    const Exps& e = g.terms().begin()->first;
    Exps x(n_vars, 0);
    int k = 0;
    for (int i = 0; i < ideal.vars->size(); ++i) {
      if (i == t_index) continue;
      x[k++] = e[i];
    }
    out.push_back(std::move(x));
  }
  if (out.empty()) {
    throw ArcError(ErrorCode::NonMonomial, "empty monomial ideal factor");
  }
  return out;
}

namespace {

struct BoxSearch {
  Rat best;
  std::vector<int> attained;  // numerators, v_i = u_i / d
  bool found = false;
};

BoxSearch search_box(const GroupSpec& group, int n_vars,
                     const std::vector<std::pair<std::vector<Exps>, Rat>>& factors, int box) {
  const int d = group.d;
  // Residue subgroup generated by the weight vectors mod d.
  std::set<std::vector<int>> residues;
  {
    std::vector<int> zero(n_vars, 0);
    residues.insert(zero);
    std::vector<std::vector<int>> frontier{zero};
    while (!frontier.empty()) {
      std::vector<std::vector<int>> next;
      for (const auto& r : frontier) {
        for (const auto& g : group.generators) {
          std::vector<int> s(n_vars);
          for (int i = 0; i < n_vars; ++i) s[i] = (r[i] + g[i]) % d;
          if (residues.insert(s).second) next.push_back(std::move(s));
        }
      }
      frontier = std::move(next);
    }
  }

  BoxSearch result;
  std::vector<int> u(n_vars, 1);
  const int u_max = d * box;
  while (true) {
    std::vector<int> r(n_vars);
    for (int i = 0; i < n_vars; ++i) r[i] = u[i] % d;
    if (residues.count(r)) {
      int64_t num = 0;
      for (int i = 0; i < n_vars; ++i) num += u[i];
      Rat value(num, d);
      value.canonicalize();
      for (const auto& [exps, delta] : factors) {
        int64_t ord = 0;
        bool first = true;
        for (const auto& a : exps) {
          int64_t s = 0;
          for (int i = 0; i < n_vars; ++i) s += static_cast<int64_t>(u[i]) * a[i];
          if (first || s < ord) ord = s;
          first = false;
        }
        Rat o(ord, d);
        o.canonicalize();
        value -= delta * o;
      }
      if (!result.found || value < result.best) {
        result.best = value;
        result.attained = u;
        result.found = true;
      }
    }
    int i = n_vars - 1;
    while (i >= 0 && u[i] == u_max) {
      u[i] = 1;
      --i;
    }
    if (i < 0) break;
    ++u[i];
  }
  return result;
}

}  // namespace

ToricResult toric_mld(const GroupSpec& group, int n_vars,
                      const std::vector<std::pair<std::vector<Exps>, Rat>>& monomial_factors,
                      int box) {
  if (box <= 0) box = n_vars + 1;
  BoxSearch primary = search_box(group, n_vars, monomial_factors, box);
  if (!primary.found) {
    throw ArcError(ErrorCode::Internal, "toric search found no lattice points");
  }
  BoxSearch audit = search_box(group, n_vars, monomial_factors, 2 * box);

  ToricResult out;
  out.value = primary.best;
  for (int ui : primary.attained) {
    Rat v(ui, group.d);
    v.canonicalize();
    out.attained.push_back(v);
  }
  out.box = box;
  out.box_audit_ok = audit.best == primary.best;
  std::ostringstream note;
  note << "box ceiling " << box << " per coordinate; doubled-box audit "
       << (out.box_audit_ok ? "confirms the minimum" : "LOWERED the minimum (box too small)");
  out.note = note.str();
  return out;
}

ToricResult toric_mld_for_spec(const HyperquotientSpec& spec, int box) {
  if (!spec.equations.empty()) {
    throw ArcError(ErrorCode::NonMonomial, "toric oracle requires c = 0 (no equations)");
  }
  std::vector<std::pair<std::vector<Exps>, Rat>> factors;
  for (const auto& fac : spec.factors) {
    factors.emplace_back(monomial_exponents(fac.ideal, spec.N), fac.delta);
  }
  return toric_mld(spec.group, spec.N, factors, box);
}

}  // namespace arcmld
