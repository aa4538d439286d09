#include "arcmld/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <utility>

#include "arcmld/errors.hpp"

namespace arcmld {

namespace {

std::atomic<uint64_t> g_groebner_calls{0};

}  // namespace

uint64_t groebner_invocation_count() { return g_groebner_calls.load(); }

TermOrder TermOrder::lex(int nvars) {
  TermOrder o;
  o.kind_ = Kind::Lex;
  o.nvars_ = nvars;
  return o;
}

TermOrder TermOrder::degrevlex(int nvars) {
  TermOrder o;
  o.kind_ = Kind::DegRevLex;
  o.nvars_ = nvars;
  return o;
}

TermOrder TermOrder::elimination(int nvars, std::vector<bool> elim) {
  TermOrder o;
  o.kind_ = Kind::Block;
  o.nvars_ = nvars;
  o.elim_ = std::move(elim);
  return o;
}

TermOrder TermOrder::of(MonomialOrder order, int nvars) {
  return order == MonomialOrder::Lex ? lex(nvars) : degrevlex(nvars);
}

namespace {

// degrevlex on a masked subset of coordinates; mask == nullptr means all.
int cmp_degrevlex_masked(const Exps& a, const Exps& b, const std::vector<bool>* mask) {
  int64_t da = 0, db = 0;
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i) {
    if (mask && !(*mask)[i]) continue;
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (int i = n - 1; i >= 0; --i) {
    if (mask && !(*mask)[i]) continue;
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;  // reverse: bigger tail is smaller
  }
  return 0;
}

}  // namespace

bool TermOrder::greater(const Exps& a, const Exps& b) const {
  switch (kind_) {
    case Kind::Lex:
      for (int i = 0; i < nvars_; ++i) {
        if (a[i] != b[i]) return a[i] > b[i];
      }
      return false;
    case Kind::DegRevLex:
      return cmp_degrevlex_masked(a, b, nullptr) > 0;
    case Kind::Block: {
      int c = cmp_degrevlex_masked(a, b, &elim_);
      if (c != 0) return c > 0;
      std::vector<bool> rest(elim_.size());
      for (size_t i = 0; i < elim_.size(); ++i) rest[i] = !elim_[i];
      return cmp_degrevlex_masked(a, b, &rest) > 0;
    }
  }
  return false;
}

namespace {

// Working representation: terms sorted descending, leading term first.
struct GBPoly {
  std::vector<std::pair<Exps, Rat>> t;

  bool zero() const { return t.empty(); }
  const Exps& lm() const { return t.front().first; }
  const Rat& lc() const { return t.front().second; }
};

GBPoly to_gb(const Poly& p, const TermOrder& order) {
  GBPoly g;
  g.t.reserve(p.terms().size());
  for (const auto& term : p.terms()) g.t.push_back(term);
  std::sort(g.t.begin(), g.t.end(),
            [&](const auto& a, const auto& b) { return order.greater(a.first, b.first); });
  return g;
}

Poly from_gb(const GBPoly& g, const VarSetPtr& vars) {
  std::map<Exps, Rat> terms(g.t.begin(), g.t.end());
  return Poly::from_terms(vars, std::move(terms));
}

bool divides(const Exps& a, const Exps& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Exps exp_lcm(const Exps& a, const Exps& b) {
  Exps r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool coprime(const Exps& a, const Exps& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0 && b[i] > 0) return false;
  }
  return true;
}

// r -= c * x^shift * g, merging sorted term lists.
GBPoly axpy(const GBPoly& r, const Rat& c, const Exps& shift, const GBPoly& g,
            const TermOrder& order) {
  GBPoly out;
  out.t.reserve(r.t.size() + g.t.size());
  size_t i = 0, j = 0;
  Exps ge(shift.size());
  while (i < r.t.size() || j < g.t.size()) {
    if (j < g.t.size()) {
      for (size_t k = 0; k < ge.size(); ++k) ge[k] = g.t[j].first[k] + shift[k];
    }
    if (j >= g.t.size() || (i < r.t.size() && order.greater(r.t[i].first, ge))) {
      out.t.push_back(r.t[i]);
      ++i;
    } else if (i >= r.t.size() || order.greater(ge, r.t[i].first)) {
      out.t.emplace_back(ge, -c * g.t[j].second);
      ++j;
    } else {
      Rat coef = r.t[i].second - c * g.t[j].second;
      if (coef != 0) out.t.emplace_back(ge, std::move(coef));
      ++i;
      ++j;
    }
  }
  return out;
}

void make_primitive(GBPoly& p) {
  if (p.zero()) return;
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& [e, c] : p.t) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rat scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (p.lc() < 0) scale = -scale;
  for (auto& [e, c] : p.t) c *= scale;
}

// Top-reduction loop; non-reducible leading terms move to the remainder.
// With `rescale` the intermediate polynomial is content-stripped after each
// reduction step (coefficient growth control inside Buchberger; the public
// normal form must not rescale).
GBPoly reduce_full(GBPoly f, const std::vector<GBPoly>& basis, const TermOrder& order,
                   bool rescale = false) {
  GBPoly rem;
  while (!f.zero()) {
    // Among reducers, prefer the one with the fewest terms.
    const GBPoly* best = nullptr;
    for (const auto& g : basis) {
      if (g.zero() || !divides(g.lm(), f.lm())) continue;
      if (!best || g.t.size() < best->t.size()) best = &g;
    }
    if (best) {
      Exps shift(f.lm().size());
      for (size_t k = 0; k < shift.size(); ++k) shift[k] = f.lm()[k] - best->lm()[k];
      Rat c = f.lc() / best->lc();
      f = axpy(f, c, shift, *best, order);
      if (rescale && rem.zero() && !f.zero()) make_primitive(f);
    } else {
      rem.t.push_back(f.t.front());
      f.t.erase(f.t.begin());
    }
  }
  return rem;
}

struct SPair {
  int64_t deg;
  int i, j;
  bool operator<(const SPair& o) const {
    if (deg != o.deg) return deg < o.deg;
    if (j != o.j) return j < o.j;
    return i < o.i;
  }
};

std::vector<GBPoly> buchberger(std::vector<GBPoly> basis, const TermOrder& order) {
  g_groebner_calls.fetch_add(1);

  // Drop zeros, normalize input.
  std::vector<GBPoly> g;
  for (auto& p : basis) {
    if (!p.zero()) {
      make_primitive(p);
      g.push_back(std::move(p));
    }
  }

  std::set<SPair> queue;
  std::set<std::pair<int, int>> done;
  auto push_pairs = [&](int k) {
    for (int i = 0; i < k; ++i) {
      Exps l = exp_lcm(g[i].lm(), g[k].lm());
      queue.insert(SPair{total_degree(l), i, k});
    }
  };
  for (int k = 0; k < static_cast<int>(g.size()); ++k) push_pairs(k);

  while (!queue.empty()) {
    SPair p = *queue.begin();
    queue.erase(queue.begin());
    done.insert({p.i, p.j});

    const Exps& li = g[p.i].lm();
    const Exps& lj = g[p.j].lm();
    if (coprime(li, lj)) continue;  // product criterion

    Exps l = exp_lcm(li, lj);
    bool chained = false;
    for (int k = 0; k < static_cast<int>(g.size()) && !chained; ++k) {
      if (k == p.i || k == p.j || g[k].zero()) continue;
      if (!divides(g[k].lm(), l)) continue;
      auto key = [&](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (done.count(key(p.i, k)) && done.count(key(p.j, k))) chained = true;
    }
    if (chained) continue;  // chain criterion

    // S-polynomial.
    Exps si(l.size()), sj(l.size());
    for (size_t k = 0; k < l.size(); ++k) {
      si[k] = l[k] - li[k];
      sj[k] = l[k] - lj[k];
    }
    GBPoly s;
    s.t.emplace_back(si, Rat(1) / g[p.i].lc());
    GBPoly fi = axpy(GBPoly{}, Rat(-1) / g[p.i].lc(), si, g[p.i], order);
    GBPoly fj = axpy(GBPoly{}, Rat(-1) / g[p.j].lc(), sj, g[p.j], order);
    GBPoly sp = axpy(fi, Rat(1), Exps(l.size(), 0), fj, order);

    GBPoly r = reduce_full(std::move(sp), g, order, /*rescale=*/true);
    if (!r.zero()) {
      make_primitive(r);
      g.push_back(std::move(r));
      push_pairs(static_cast<int>(g.size()) - 1);
    }
  }

  // Minimalize: drop generators whose leading monomial another one divides.
  std::vector<GBPoly> kept;
  for (size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      if (divides(g[j].lm(), g[i].lm())) {
        if (g[i].lm() == g[j].lm() && i < j) continue;  // keep the first of equals
        redundant = true;
      }
    }
    if (!redundant) kept.push_back(g[i]);
  }

  // Interreduce tails and make monic.
  std::vector<GBPoly> reduced(kept.size());
  for (size_t i = 0; i < kept.size(); ++i) {
    std::vector<GBPoly> others;
    for (size_t j = 0; j < kept.size(); ++j) {
      if (j != i) others.push_back(kept[j]);
    }
    GBPoly r = reduce_full(kept[i], others, order);
    if (r.zero()) continue;  // fully redundant
    Rat inv = Rat(1) / r.lc();
    for (auto& [e, c] : r.t) c *= inv;
    reduced[i] = std::move(r);
  }
  std::vector<GBPoly> out;
  for (auto& p : reduced) {
    if (!p.zero()) out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(),
            [&](const GBPoly& a, const GBPoly& b) { return order.greater(b.lm(), a.lm()); });
  return out;
}

}  // namespace

std::vector<Poly> groebner_basis(const std::vector<Poly>& gens, const TermOrder& order) {
  if (gens.empty()) return {};
  VarSetPtr vars = gens.front().vars();
  std::vector<GBPoly> input;
  for (const auto& p : gens) input.push_back(to_gb(p, order));
  std::vector<GBPoly> gb = buchberger(std::move(input), order);
  std::vector<Poly> out;
  out.reserve(gb.size());
  for (const auto& p : gb) out.push_back(from_gb(p, vars));
  return out;
}

Ideal groebner(const Ideal& ideal, MonomialOrder order) {
  TermOrder ord = TermOrder::of(order, ideal.vars->size());
  std::vector<Poly> gb = groebner_basis(ideal.gens, ord);
  if (gb.size() == 1 && gb.front().is_unit_constant()) {
    return Ideal(ideal.vars, {Poly::constant(ideal.vars, 1)});
  }
  return Ideal(ideal.vars, std::move(gb));
}

Poly normal_form(const Poly& f, const std::vector<Poly>& basis, const TermOrder& order) {
  std::vector<GBPoly> b;
  for (const auto& p : basis) {
    if (!p.is_zero()) b.push_back(to_gb(p, order));
  }
  GBPoly r = reduce_full(to_gb(f, order), b, order);
  return from_gb(r, f.vars());
}

namespace {

// Minimum hitting set over the supports of the initial ideal's generators,
// by branch and bound. Supports are variable-index sets.
int min_hitting_set(std::vector<std::vector<int>> supports) {
  // Prune supports that contain another support.
  std::sort(supports.begin(), supports.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<std::vector<int>> pruned;
  for (const auto& s : supports) {
    bool super = false;
    for (const auto& t : pruned) {
      if (std::includes(s.begin(), s.end(), t.begin(), t.end())) {
        super = true;
        break;
      }
    }
    if (!super) pruned.push_back(s);
  }

  int best = static_cast<int>(pruned.size());  // hitting one var per support always works
  std::vector<int> chosen;
  auto rec = [&](auto&& self, size_t next_unhit, int count) -> void {
    if (count >= best) return;
    // Find first support not hit by `chosen`.
    size_t idx = next_unhit;
    while (idx < pruned.size()) {
      bool hit = false;
      for (int v : pruned[idx]) {
        if (std::find(chosen.begin(), chosen.end(), v) != chosen.end()) {
          hit = true;
          break;
        }
      }
      if (!hit) break;
      ++idx;
    }
    if (idx == pruned.size()) {
      best = std::min(best, count);
      return;
    }
    for (int v : pruned[idx]) {
      chosen.push_back(v);
      self(self, idx + 1, count + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0, 0);
  return best;
}

}  // namespace

std::optional<int64_t> dim_from_basis(const std::vector<Poly>& basis, const VarSetPtr& vars,
                                      const TermOrder& order) {
  const int n = vars->size();
  std::vector<std::vector<int>> supports;
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    if (g.is_unit_constant()) return std::nullopt;
    const Exps* lead = nullptr;
    for (const auto& [e, c] : g.terms()) {
      if (!lead || order.greater(e, *lead)) lead = &e;
    }
    std::vector<int> supp;
    for (int i = 0; i < n; ++i) {
      if ((*lead)[i] > 0) supp.push_back(i);
    }
    supports.push_back(std::move(supp));
  }
  return n - min_hitting_set(std::move(supports));
}

std::optional<int64_t> krull_dim(const Ideal& ideal, MonomialOrder order) {
  const int n = ideal.vars->size();
  if (ideal.is_zero()) return n;
  Ideal gb = groebner(ideal, order);
  if (gb.has_unit_generator()) return std::nullopt;
  if (gb.gens.empty()) return n;
  return dim_from_basis(gb.gens, ideal.vars, TermOrder::of(order, n));
}

std::vector<Poly> eliminate(const std::vector<Poly>& gens, const VarSetPtr& vars,
                            const std::vector<bool>& elim) {
  TermOrder order = TermOrder::elimination(vars->size(), elim);
  std::vector<Poly> gb = groebner_basis(gens, order);
  std::vector<Poly> out;
  for (const auto& g : gb) {
    bool uses_elim = false;
    for (const auto& [e, c] : g.terms()) {
      for (int i = 0; i < vars->size() && !uses_elim; ++i) {
        if (elim[i] && e[i] > 0) uses_elim = true;
      }
      if (uses_elim) break;
    }
    if (!uses_elim) out.push_back(g);
  }
  return out;
}

namespace {

// Extends the ring by one auxiliary variable (appended last).
VarSetPtr extend_ring(const VarSetPtr& vars, const std::string& aux) {
  std::vector<std::string> names = vars->names();
  names.push_back(aux);
  return make_varset(std::move(names));
}

std::vector<Poly> drop_last_var(const std::vector<Poly>& gens, const VarSetPtr& target) {
  std::vector<Poly> out;
  out.reserve(gens.size());
  for (const auto& g : gens) {
    std::map<Exps, Rat> terms;
    for (const auto& [e, c] : g.terms()) {
      Exps d(e.begin(), e.end() - 1);
      terms.emplace(std::move(d), c);
    }
    out.push_back(Poly::from_terms(target, std::move(terms)));
  }
  return out;
}

Ideal unit_ideal(const VarSetPtr& vars) {
  return Ideal(vars, {Poly::constant(vars, 1)});
}

}  // namespace

Ideal saturate_principal(const Ideal& a, const Poly& g) {
  if (g.is_zero()) return unit_ideal(a.vars);
  if (g.is_constant()) return groebner(a);
  if (a.has_unit_generator()) return unit_ideal(a.vars);

  VarSetPtr ext = extend_ring(a.vars, "@sat");
  const int aux = ext->size() - 1;
  std::vector<Poly> gens;
  for (const auto& p : a.gens) {
    if (!p.is_zero()) gens.push_back(p.lift(ext));
  }
  Poly one = Poly::constant(ext, 1);
  gens.push_back(one - Poly::variable(ext, aux) * g.lift(ext));

  std::vector<bool> elim(ext->size(), false);
  elim[aux] = true;
  std::vector<Poly> kept = eliminate(gens, ext, elim);
  return Ideal(a.vars, drop_last_var(kept, a.vars));
}

Ideal intersect(const Ideal& lhs, const Ideal& rhs) {
  if (lhs.has_unit_generator()) return groebner(rhs);
  if (rhs.has_unit_generator()) return groebner(lhs);
  if (lhs.is_zero() || rhs.is_zero()) return Ideal(lhs.vars);

  VarSetPtr ext = extend_ring(lhs.vars, "@mix");
  const int aux = ext->size() - 1;
  Poly u = Poly::variable(ext, aux);
  Poly one_minus_u = Poly::constant(ext, 1) - u;
  std::vector<Poly> gens;
  for (const auto& p : lhs.gens) {
    if (!p.is_zero()) gens.push_back(u * p.lift(ext));
  }
  for (const auto& p : rhs.gens) {
    if (!p.is_zero()) gens.push_back(one_minus_u * p.lift(ext));
  }
  std::vector<bool> elim(ext->size(), false);
  elim[aux] = true;
  std::vector<Poly> kept = eliminate(gens, ext, elim);
  return Ideal(lhs.vars, drop_last_var(kept, lhs.vars));
}

Ideal saturate(const Ideal& a, const Ideal& b) {
  if (!same_varset(a.vars, b.vars)) {
    throw ArcError(ErrorCode::Internal, "saturate: variable set mismatch");
  }
  std::vector<Poly> nonzero;
  for (const auto& g : b.gens) {
    if (!g.is_zero()) nonzero.push_back(g);
  }
  if (nonzero.empty()) return unit_ideal(a.vars);
  if (a.has_unit_generator()) return unit_ideal(a.vars);

  bool have = false;
  Ideal acc(a.vars);
  for (const auto& g : nonzero) {
    Ideal part = saturate_principal(a, g);
    acc = have ? intersect(acc, part) : std::move(part);
    have = true;
  }
  return groebner(acc);
}

}  // namespace arcmld
