#include "arcmld/hensel.hpp"

#include <algorithm>
#include <sstream>

#include "arcmld/errors.hpp"

namespace arcmld {

int t_order(const Poly& p) {
  if (p.is_zero()) return -1;
  const int t = p.vars()->index_of("t");
  int best = -1;
  for (const auto& [e, c] : p.terms()) {
    int ord = t < 0 ? 0 : e[t];
    if (best < 0 || ord < best) best = ord;
    if (best == 0) break;
  }
  return best;
}

namespace {

Rat t_coeff(const Poly& p, int k) {
  const int t = p.vars()->index_of("t");
  for (const auto& [e, c] : p.terms()) {
    int ord = t < 0 ? 0 : e[t];
    if (ord == k && total_degree(e) == ord) return c;
  }
  return Rat(0);
}

// Evaluates f at the jet: x_j -> jet[j], t -> t, landing in the jet's ring.
Poly eval_at_jet(const Poly& f, const std::vector<Poly>& jet, const VarSetPtr& tring) {
  std::vector<Poly> images;
  images.reserve(f.vars()->size());
  for (int i = 0; i < f.vars()->size(); ++i) {
    const std::string& name = f.vars()->name(i);
    if (name == "t") {
      images.push_back(Poly::variable(tring, tring->index_of("t")));
    } else {
      // coordinate order in `jet` follows the ambient variable order, t skipped
      int k = 0;
      int found = -1;
      for (int j = 0; j < f.vars()->size(); ++j) {
        if (f.vars()->name(j) == "t") continue;
        if (j == i) {
          found = k;
          break;
        }
        ++k;
      }
      images.push_back(jet.at(found));
    }
  }
  return f.substitute(images);
}

Poly det_rec(const std::vector<std::vector<Poly>>& m, std::vector<int> cols,
             const VarSetPtr& ring, int row) {
  if (cols.empty()) return Poly::constant(ring, 1);
  Poly acc = Poly::zero(ring);
  for (size_t k = 0; k < cols.size(); ++k) {
    std::vector<int> rest;
    for (size_t j = 0; j < cols.size(); ++j) {
      if (j != k) rest.push_back(cols[j]);
    }
    Poly sub = det_rec(m, rest, ring, row + 1);
    Poly contrib = m[row][cols[k]] * sub;
    acc = (k % 2 == 0) ? acc + contrib : acc - contrib;
  }
  return acc;
}

Poly matrix_det(const std::vector<std::vector<Poly>>& m, const std::vector<int>& cols,
                const VarSetPtr& ring) {
  return det_rec(m, cols, ring, 0);
}

// Exact Gaussian elimination; returns false when inconsistent.
bool solve_linear(std::vector<std::vector<Rat>> a, std::vector<Rat> b, std::vector<Rat>& out) {
  const size_t rows = a.size();
  const size_t cols = rows ? a[0].size() : 0;
  std::vector<int> pivot_col(rows, -1);
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    Rat inv = Rat(1) / a[r][c];
    for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col[r] = static_cast<int>(c);
    ++r;
  }
  for (size_t i = r; i < rows; ++i) {
    if (b[i] != 0) return false;
  }
  out.assign(cols, Rat(0));
  for (size_t i = 0; i < r; ++i) out[pivot_col[i]] = b[i];
  return true;
}

}  // namespace

HenselResult hensel_lift(const std::vector<Poly>& system, const std::vector<Poly>& jet,
                         int m, int e, const std::vector<int>& scols) {
  const size_t r = system.size();
  if (scols.size() != r) {
    throw ArcError(ErrorCode::Internal, "hensel: |S| must equal the number of equations");
  }
  if (jet.empty()) throw ArcError(ErrorCode::Internal, "hensel: empty jet");
  VarSetPtr tring = jet.front().vars();
  if (tring->index_of("t") < 0) {
    throw ArcError(ErrorCode::Internal, "hensel: jet coordinates must be t-polynomials");
  }

  // Residual orders.
  std::vector<Poly> residual;
  int v = -1;  // -1 = infinity
  for (const auto& f : system) {
    Poly fx = eval_at_jet(f, jet, tring);
    int ord = t_order(fx);
    if (ord >= 0 && (v < 0 || ord < v)) v = ord;
    residual.push_back(std::move(fx));
  }
  if (v >= 0 && v <= m) {
    throw ArcError(ErrorCode::Internal,
                   "hensel: jet does not solve the system modulo t^" + std::to_string(m + 1));
  }

  // Jacobian columns evaluated at the jet, in ambient coordinate order
  // (t skipped).
  std::vector<int> coord_vars;
  for (int i = 0; i < system.front().vars()->size(); ++i) {
    if (system.front().vars()->name(i) != "t") coord_vars.push_back(i);
  }
  if (coord_vars.size() != jet.size()) {
    throw ArcError(ErrorCode::Internal, "hensel: jet size does not match coordinates");
  }
  std::vector<std::vector<Poly>> jac(r);
  for (size_t i = 0; i < r; ++i) {
    for (int cv : coord_vars) {
      jac[i].push_back(eval_at_jet(system[i].derivative(cv), jet, tring));
    }
  }

  const int e_max = std::min<int>(m, v < 0 ? m : v - m - 1);
  int minor_ord = t_order(matrix_det(jac, scols, tring));
  if (minor_ord < 0 || minor_ord > e_max) {
    // Scan all column subsets for the error report.
    int best = -1;
    std::vector<int> idx(coord_vars.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::vector<int> comb(r);
    auto rec = [&](auto&& self, size_t start, size_t k) -> void {
      if (k == r) {
        int o = t_order(matrix_det(jac, comb, tring));
        if (o >= 0 && (best < 0 || o < best)) best = o;
        return;
      }
      for (size_t i = start; i < idx.size(); ++i) {
        comb[k] = idx[i];
        self(self, i + 1, k + 1);
      }
    };
    rec(rec, 0, 0);
    std::ostringstream msg;
    msg << "every " << r << "x" << r << " minor has t-order > " << std::max(e, e_max)
        << " at the jet (best order ";
    if (best < 0) msg << "infinity";
    else msg << best;
    msg << ", usable bound " << e_max << ")";
    throw ArcError(ErrorCode::MinorOrderTooHigh, msg.str());
  }

  // Linear system on the t^(m+1) coefficients of the S-coordinates:
  //   sum_j jac[i][scols[j]] * beta_j = -F_i(jet)/t^(m+1)  (mod t^(oo+1))
  std::vector<std::vector<Rat>> a;
  std::vector<Rat> b;
  for (size_t i = 0; i < r; ++i) {
    for (int l = 0; l <= minor_ord; ++l) {
      std::vector<Rat> row;
      for (size_t j = 0; j < r; ++j) row.push_back(t_coeff(jac[i][scols[j]], l));
      a.push_back(std::move(row));
      b.push_back(-t_coeff(residual[i], m + 1 + l));
    }
  }
  std::vector<Rat> beta;
  if (!solve_linear(std::move(a), std::move(b), beta)) {
    throw ArcError(ErrorCode::Internal, "hensel: no solution (preconditions violated)");
  }

  HenselResult res;
  res.minor_order = minor_ord;
  Poly t_pow = Poly::variable(tring, tring->index_of("t")).pow(m + 1);
  res.lifted = jet;
  for (size_t j = 0; j < r; ++j) {
    res.lifted[scols[j]] = res.lifted[scols[j]] + t_pow * Rat(beta[j]);
  }
  int out_order = -1;
  for (const auto& f : system) {
    int ord = t_order(eval_at_jet(f, res.lifted, tring));
    if (ord >= 0 && (out_order < 0 || ord < out_order)) out_order = ord;
  }
  res.residual_order = out_order;
  if (out_order >= 0 && out_order < m + minor_ord + 2) {
    throw ArcError(ErrorCode::Internal, "hensel: lift misses the required precision");
  }
  return res;
}

}  // namespace arcmld
