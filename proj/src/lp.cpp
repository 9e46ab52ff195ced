#include "tvt/lp.hpp"

#include <algorithm>
#include <limits>

namespace tvt {
namespace lp_detail {
namespace {

// Dense simplex tableau for  min c.z  s.t.  A z = b, z >= 0, b >= 0.
// Column layout: structural columns first, then one artificial per row.
// The reduced-cost row is carried through pivots rather than recomputed.
struct Tableau {
  std::size_t m = 0, n = 0;        // rows, structural columns
  std::vector<Vec> a;              // m x (n + m)
  Vec b;                           // m, kept >= 0
  std::vector<int> basis;          // m, column index basic in each row
  std::vector<bool> blocked;       // columns barred from entering
  Vec red;                         // reduced costs of the current objective
  Rational value;                  // current objective value

  std::size_t cols() const { return n + m; }

  void load_objective(const Vec& c) {
    red = c;
    value = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const Rational cb = c[static_cast<std::size_t>(basis[i])];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < cols(); ++j) red[j] -= cb * a[i][j];
      value += cb * b[i];
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rational inv = Rational(1) / a[row][col];
    for (auto& v : a[row]) v *= inv;
    b[row] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || a[i][col] == 0) continue;
      const Rational factor = a[i][col];
      for (std::size_t j = 0; j < cols(); ++j) a[i][j] -= factor * a[row][j];
      b[i] -= factor * b[row];
    }
    if (!red.empty() && red[col] != 0) {
      const Rational factor = red[col];
      for (std::size_t j = 0; j < cols(); ++j) red[j] -= factor * a[row][j];
      value += factor * b[row];
    }
    basis[row] = static_cast<int>(col);
  }
};

// Bland's rule minimisation of the loaded objective. Columns at or beyond
// `retire_from` are barred from re-entering once they leave the basis
// (artificials never need to come back). Returns false if unbounded below.
bool run_simplex(Tableau& t, std::size_t retire_from) {
  long guard = 2'000'000;
  while (guard-- > 0) {
    std::size_t enter = t.cols();
    for (std::size_t j = 0; j < t.cols(); ++j) {
      if (!t.blocked[j] && t.red[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == t.cols()) return true;  // optimal
    std::size_t leave = t.m;
    Rational best_ratio = 0;
    for (std::size_t i = 0; i < t.m; ++i) {
      if (t.a[i][enter] <= 0) continue;
      const Rational ratio = t.b[i] / t.a[i][enter];
      if (leave == t.m || ratio < best_ratio ||
          (ratio == best_ratio && t.basis[i] < t.basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == t.m) return false;  // unbounded
    const std::size_t departed = static_cast<std::size_t>(t.basis[leave]);
    t.pivot(leave, enter);
    if (departed >= retire_from) t.blocked[departed] = true;
  }
  throw InternalError("simplex iteration guard exceeded");
}

}  // namespace

GeneralResult solve(const GeneralLp& lp) {
  const std::size_t nv = lp.nvars;
  if (!lp.nonneg.empty() && lp.nonneg.size() != nv)
    throw std::invalid_argument("nonneg flag count mismatch");
  if (!lp.objective.empty() && lp.objective.size() != nv)
    throw std::invalid_argument("objective length mismatch");

  // Structural columns: one per nonnegative variable, a (plus, minus) pair
  // per free variable, then one surplus column per Ge row.
  std::vector<std::size_t> col_of(nv);     // first column of each variable
  std::vector<bool> split(nv, false);
  std::size_t ncols = 0;
  for (std::size_t j = 0; j < nv; ++j) {
    const bool nn = !lp.nonneg.empty() && lp.nonneg[j];
    col_of[j] = ncols;
    split[j] = !nn;
    ncols += nn ? 1 : 2;
  }
  std::size_t n_surplus = 0;
  for (const auto& row : lp.rows) {
    if (row.rel == Rel::Ge) ++n_surplus;
    else if (row.rel != Rel::Eq)
      throw std::invalid_argument("internal solver accepts Ge/Eq rows only");
    if (row.coeffs.size() != nv)
      throw std::invalid_argument("row width mismatch");
  }
  const std::size_t m = lp.rows.size();
  const std::size_t n_struct = ncols + n_surplus;

  Tableau t;
  t.m = m;
  t.n = n_struct;
  t.a.assign(m, Vec(n_struct + m, Rational(0)));
  t.b.assign(m, Rational(0));
  t.basis.assign(m, 0);
  t.blocked.assign(n_struct + m, false);

  std::size_t surplus_at = ncols;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = lp.rows[i];
    const bool flip = row.rhs < 0;
    const Rational sign = flip ? -1 : 1;
    for (std::size_t j = 0; j < nv; ++j) {
      const Rational v = sign * row.coeffs[j];
      t.a[i][col_of[j]] = v;
      if (split[j]) t.a[i][col_of[j] + 1] = -v;
    }
    if (row.rel == Rel::Ge) t.a[i][surplus_at++] = flip ? 1 : -1;
    t.b[i] = sign * row.rhs;
    t.a[i][n_struct + i] = 1;  // artificial
    t.basis[i] = static_cast<int>(n_struct + i);
  }

  // Phase 1: minimise the sum of artificials.
  Vec phase1(n_struct + m, Rational(0));
  for (std::size_t j = n_struct; j < n_struct + m; ++j) phase1[j] = 1;
  t.load_objective(phase1);
  if (!run_simplex(t, n_struct)) throw InternalError("phase-1 unbounded");
  if (t.value != 0) return {};  // infeasible

  // Drive surviving artificials out of the basis, then bar them.
  for (std::size_t i = 0; i < t.m; ++i) {
    if (static_cast<std::size_t>(t.basis[i]) < n_struct) continue;
    std::size_t col = n_struct;
    for (std::size_t j = 0; j < n_struct; ++j) {
      if (t.a[i][j] != 0) {
        col = j;
        break;
      }
    }
    if (col < n_struct) {
      t.pivot(i, col);
    }
    // A redundant row keeps its zero-valued artificial basic; it can never
    // leave the basis again because every entering column pivots elsewhere.
  }
  for (std::size_t j = n_struct; j < n_struct + m; ++j) t.blocked[j] = true;

  GeneralResult out;
  out.feasible = true;

  if (!lp.objective.empty()) {
    Vec c(n_struct + m, Rational(0));
    for (std::size_t j = 0; j < nv; ++j) {
      c[col_of[j]] = -lp.objective[j];  // maximise = minimise negation
      if (split[j]) c[col_of[j] + 1] = lp.objective[j];
    }
    t.load_objective(c);
    if (!run_simplex(t, n_struct)) throw InternalError("objective unbounded");
    out.value = -t.value;
  }

  Vec z(n_struct + m, Rational(0));
  for (std::size_t i = 0; i < t.m; ++i)
    z[static_cast<std::size_t>(t.basis[i])] = t.b[i];
  out.x.assign(nv, Rational(0));
  for (std::size_t j = 0; j < nv; ++j) {
    out.x[j] = z[col_of[j]];
    if (split[j]) out.x[j] -= z[col_of[j] + 1];
  }
  return out;
}

}  // namespace lp_detail

namespace {

// Normalise user rows so inequalities read  a.x >= b  or  a.x > b.
struct NormalRow {
  Vec a;
  Rational b;
  bool strict = false;
  bool eq = false;
};

std::vector<NormalRow> normalise(const std::vector<LinearRow>& rows,
                                 std::size_t dim) {
  if (rows.empty()) throw std::invalid_argument("empty constraint system");
  std::vector<NormalRow> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    if (row.coeffs.size() != dim)
      throw std::invalid_argument("constraint width mismatch");
    NormalRow n;
    switch (row.rel) {
      case Rel::Ge: n.a = row.coeffs; n.b = row.rhs; break;
      case Rel::Gt: n.a = row.coeffs; n.b = row.rhs; n.strict = true; break;
      case Rel::Eq: n.a = row.coeffs; n.b = row.rhs; n.eq = true; break;
      case Rel::Le:
      case Rel::Lt: {
        n.a.resize(dim);
        for (std::size_t j = 0; j < dim; ++j) n.a[j] = -row.coeffs[j];
        n.b = -row.rhs;
        n.strict = row.rel == Rel::Lt;
        break;
      }
    }
    out.push_back(std::move(n));
  }
  return out;
}

// Try to find multipliers proving the normalised system infeasible.
// Mode 0 asks for sum(lambda b) >= 1, mode 1 for sum(lambda b) = 0 with
// total strict weight >= 1 (Motzkin's two alternatives, scaled).
Vec find_certificate(const std::vector<NormalRow>& rows, std::size_t dim,
                     int mode) {
  const std::size_t m = rows.size();
  lp_detail::GeneralLp alt;
  alt.nvars = m;
  alt.nonneg.assign(m, true);
  for (std::size_t i = 0; i < m; ++i)
    if (rows[i].eq) alt.nonneg[i] = false;
  for (std::size_t k = 0; k < dim; ++k) {
    LinearRow r;
    r.rel = Rel::Eq;
    r.rhs = 0;
    r.coeffs.resize(m);
    for (std::size_t i = 0; i < m; ++i) r.coeffs[i] = rows[i].a[k];
    alt.rows.push_back(std::move(r));
  }
  {
    LinearRow r;
    r.rhs = mode == 0 ? 1 : 0;
    r.rel = mode == 0 ? Rel::Ge : Rel::Eq;
    r.coeffs.resize(m);
    for (std::size_t i = 0; i < m; ++i) r.coeffs[i] = rows[i].b;
    alt.rows.push_back(std::move(r));
  }
  if (mode == 1) {
    LinearRow r;
    r.rel = Rel::Ge;
    r.rhs = 1;
    r.coeffs.assign(m, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
      if (rows[i].strict) r.coeffs[i] = 1;
    alt.rows.push_back(std::move(r));
  }
  const auto res = lp_detail::solve(alt);
  return res.feasible ? res.x : Vec{};
}

bool check_certificate(const std::vector<NormalRow>& rows, std::size_t dim,
                       const Vec& mult) {
  if (mult.size() != rows.size()) return false;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (!rows[i].eq && mult[i] < 0) return false;
  for (std::size_t k = 0; k < dim; ++k) {
    Rational s = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) s += mult[i] * rows[i].a[k];
    if (s != 0) return false;
  }
  Rational total = 0, strict_weight = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    total += mult[i] * rows[i].b;
    if (rows[i].strict) strict_weight += mult[i];
  }
  return total > 0 || (total == 0 && strict_weight > 0);
}

}  // namespace

LpOutcome lp_feasible(const std::vector<LinearRow>& rows, std::size_t dim,
                      bool want_certificate) {
  const auto normal = normalise(rows, dim);
  bool any_strict = false;
  for (const auto& r : normal) any_strict |= r.strict;

  lp_detail::GeneralLp lp;
  lp.nvars = dim + (any_strict ? 1 : 0);
  lp.nonneg.assign(lp.nvars, false);
  if (any_strict) lp.nonneg[dim] = true;
  for (const auto& r : normal) {
    LinearRow row;
    row.coeffs = r.a;
    row.coeffs.resize(lp.nvars, Rational(0));
    if (r.strict) row.coeffs[dim] = -1;  // a.x - s >= b
    row.rel = r.eq ? Rel::Eq : Rel::Ge;
    row.rhs = r.b;
    lp.rows.push_back(std::move(row));
  }
  if (any_strict) {
    LinearRow cap;  // s <= 1, as -s >= -1
    cap.coeffs.assign(lp.nvars, Rational(0));
    cap.coeffs[dim] = -1;
    cap.rel = Rel::Ge;
    cap.rhs = -1;
    lp.rows.push_back(std::move(cap));
    lp.objective.assign(lp.nvars, Rational(0));
    lp.objective[dim] = 1;
  }

  const auto res = lp_detail::solve(lp);
  LpOutcome out;
  if (res.feasible && (!any_strict || res.value > 0)) {
    out.status = LpStatus::Feasible;
    out.witness.assign(res.x.begin(), res.x.begin() + static_cast<long>(dim));
    if (!satisfies(rows, out.witness))
      throw InternalError("feasible witness failed re-verification");
    return out;
  }

  out.status = LpStatus::Infeasible;
  if (want_certificate) {
    Vec cert = find_certificate(normal, dim, 0);
    if (cert.empty()) cert = find_certificate(normal, dim, 1);
    if (cert.empty() || !check_certificate(normal, dim, cert))
      throw InternalError("no verifiable infeasibility certificate found");
    out.certificate = std::move(cert);
  }
  return out;
}

bool satisfies(const std::vector<LinearRow>& rows, const Vec& x) {
  for (const auto& row : rows) {
    if (row.coeffs.size() != x.size()) return false;
    const Rational lhs = dot(row.coeffs, x);
    switch (row.rel) {
      case Rel::Le: if (!(lhs <= row.rhs)) return false; break;
      case Rel::Lt: if (!(lhs < row.rhs)) return false; break;
      case Rel::Ge: if (!(lhs >= row.rhs)) return false; break;
      case Rel::Gt: if (!(lhs > row.rhs)) return false; break;
      case Rel::Eq: if (!(lhs == row.rhs)) return false; break;
    }
  }
  return true;
}

bool valid_infeasibility_certificate(const std::vector<LinearRow>& rows,
                                     const Vec& multipliers) {
  if (rows.empty() || rows[0].coeffs.empty()) return false;
  const auto normal = normalise(rows, rows[0].coeffs.size());
  return check_certificate(normal, rows[0].coeffs.size(), multipliers);
}

}  // namespace tvt
