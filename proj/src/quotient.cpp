#include "arcmld/quotient.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "arcmld/errors.hpp"

namespace arcmld {

bool GroupElement::is_identity() const {
  return std::all_of(weights.begin(), weights.end(), [&](int e) { return e == d; });
}

GroupElement normalize_element(int d, const std::vector<int>& weights) {
  GroupElement g;
  g.d = d;
  g.weights.reserve(weights.size());
  for (int w : weights) {
    int r = ((w - 1) % d + d) % d + 1;  // into [1, d]
    g.weights.push_back(r);
  }
  return g;
}

GroupElement GroupElement::inverse() const {
  std::vector<int> w;
  w.reserve(weights.size());
  for (int e : weights) w.push_back(-e);
  return normalize_element(d, w);
}

GroupElement GroupElement::compose(const GroupElement& other) const {
  std::vector<int> w;
  w.reserve(weights.size());
  for (size_t i = 0; i < weights.size(); ++i) w.push_back(weights[i] + other.weights[i]);
  return normalize_element(d, w);
}

std::string GroupElement::to_string() const {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < weights.size(); ++i) {
    if (i) out << ",";
    out << weights[i];
  }
  out << ")";
  return out.str();
}

std::vector<GroupElement> enumerate_group(const GroupSpec& spec, int n_vars) {
  for (const auto& g : spec.generators) {
    if (static_cast<int>(g.size()) != n_vars) {
      throw ArcError(ErrorCode::ParseError, "generator weight vector length mismatch");
    }
  }
  GroupElement id = normalize_element(spec.d, std::vector<int>(n_vars, spec.d));
  std::set<GroupElement> seen{id};
  std::vector<GroupElement> frontier{id};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& el : frontier) {
      for (const auto& gen : spec.generators) {
        GroupElement g = el.compose(normalize_element(spec.d, gen));
        if (seen.insert(g).second) next.push_back(std::move(g));
      }
    }
    frontier = std::move(next);
  }

  std::vector<GroupElement> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  auto id_pos = std::find(out.begin(), out.end(), id);
  std::rotate(out.begin(), id_pos, id_pos + 1);

  for (const auto& el : out) {
    if (el.is_identity()) continue;
    int moved = 0;
    for (int e : el.weights) {
      if (e != el.d) ++moved;
    }
    if (moved < 2) {
      throw ArcError(ErrorCode::PseudoReflection,
                     "element " + el.to_string() + " mod " + std::to_string(el.d) +
                         " fixes a hyperplane; the action is not free in codimension one");
    }
  }
  return out;
}

Rat age_prime(const GroupElement& gamma) {
  Rat sum(0);
  for (int e : gamma.weights) {
    Rat term(e, gamma.d);
    term.canonicalize();
    sum += term;
  }
  return sum;
}

namespace {

// Weighted degree of a monomial under one weight vector, t ignored.
int64_t monomial_weight(const Exps& e, const VarSetPtr& vars, const std::vector<int>& w,
                        int t_index) {
  int64_t s = 0;
  int k = 0;
  for (int i = 0; i < vars->size(); ++i) {
    if (i == t_index) continue;
    s += static_cast<int64_t>(e[i]) * w[k];
    ++k;
  }
  return s;
}

}  // namespace

bool check_invariant(const Poly& f, const GroupSpec& spec) {
  const int t_index = f.vars()->index_of("t");
  const int n = f.vars()->size() - (t_index >= 0 ? 1 : 0);
  for (const auto& gen : spec.generators) {
    if (static_cast<int>(gen.size()) != n) {
      throw ArcError(ErrorCode::Internal, "generator length does not match ring");
    }
    for (const auto& [e, c] : f.terms()) {
      if (monomial_weight(e, f.vars(), gen, t_index) % spec.d != 0) return false;
    }
  }
  return true;
}

Poly twist(const Poly& f, const GroupElement& gamma) {
  const int t_index = f.vars()->index_of("t");
  if (t_index < 0) {
    throw ArcError(ErrorCode::Internal, "twist target ring must contain t");
  }
  std::map<Exps, Rat> terms;
  for (const auto& [e, c] : f.terms()) {
    int64_t s = monomial_weight(e, f.vars(), gamma.weights, t_index);
    if (s % gamma.d != 0) {
      throw ArcError(ErrorCode::FractionalExponent,
                     "monomial has weight " + std::to_string(s) + " not divisible by d=" +
                         std::to_string(gamma.d) + " under " + gamma.to_string());
    }
    Exps d = e;
    d[t_index] += static_cast<int32_t>(s / gamma.d);
    terms.emplace(std::move(d), c);
  }
  return Poly::from_terms(f.vars(), std::move(terms));
}

std::vector<Exps> invariant_monomial_generators(const GroupSpec& spec, int n_vars) {
  // Any invariant monomial is divisible by an invariant one with exponents
  // <= d (x_i^d is always invariant), so the box search below is complete.
  std::vector<Exps> inv;
  Exps cur(n_vars, 0);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n_vars) {
      if (total_degree(cur) == 0) return;
      for (const auto& gen : spec.generators) {
        int64_t s = 0;
        for (int i = 0; i < n_vars; ++i) s += static_cast<int64_t>(cur[i]) * gen[i];
        if (s % spec.d != 0) return;
      }
      inv.push_back(cur);
      return;
    }
    for (int v = 0; v <= spec.d; ++v) {
      cur[pos] = v;
      self(self, pos + 1);
    }
    cur[pos] = 0;
  };
  rec(rec, 0);

  std::sort(inv.begin(), inv.end(), [](const Exps& a, const Exps& b) {
    int64_t da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  });
  std::vector<Exps> minimal;
  for (const auto& e : inv) {
    bool divisible = false;
    for (const auto& g : minimal) {
      bool all = true;
      for (int i = 0; i < n_vars; ++i) {
        if (g[i] > e[i]) {
          all = false;
          break;
        }
      }
      if (all) {
        divisible = true;
        break;
      }
    }
    if (!divisible) minimal.push_back(e);
  }
  return minimal;
}

}  // namespace arcmld
