#include "tvt/geometry.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace tvt {

bool HalfSpace::contains(const Point& x) const {
  const Rational v = dot(normal, x);
  return open ? v > offset : v >= offset;
}

int HalfSpace::side(const Point& x) const {
  const Rational v = dot(normal, x);
  if (v > offset) return 1;
  if (v < offset) return -1;
  return 0;
}

HalfSpace HalfSpace::complement() const {
  HalfSpace c;
  c.normal.resize(normal.size());
  for (std::size_t i = 0; i < normal.size(); ++i) c.normal[i] = -normal[i];
  c.offset = -offset;
  c.open = !open;
  return c;
}

std::size_t HalfSpaceFamily::dim() const {
  return halfspaces.empty() ? 0 : halfspaces.front().normal.size();
}

void HalfSpaceFamily::validate() const {
  if (halfspaces.empty()) throw std::invalid_argument("empty half-space family");
  const std::size_t d = dim();
  for (const auto& h : halfspaces) {
    if (h.normal.size() != d)
      throw std::invalid_argument("half-space dimension mismatch");
    if (is_zero(h.normal))
      throw std::invalid_argument("half-space with zero normal");
  }
}

namespace {

void check_points(const std::vector<Point>& points) {
  if (points.empty()) throw std::invalid_argument("empty point list");
  const std::size_t d = points.front().size();
  if (d == 0) throw std::invalid_argument("zero-dimensional point");
  for (const auto& p : points)
    if (p.size() != d) throw std::invalid_argument("point dimension mismatch");
}

}  // namespace

bool captures_origin(const std::vector<Point>& points) {
  check_points(points);
  const std::size_t d = points.front().size();
  const std::size_t m = points.size();

  lp_detail::GeneralLp lp;
  lp.nvars = m;
  lp.nonneg.assign(m, true);
  for (std::size_t k = 0; k < d; ++k) {
    LinearRow row;
    row.rel = Rel::Eq;
    row.rhs = 0;
    row.coeffs.resize(m);
    for (std::size_t i = 0; i < m; ++i) row.coeffs[i] = points[i][k];
    lp.rows.push_back(std::move(row));
  }
  LinearRow sum;
  sum.rel = Rel::Eq;
  sum.rhs = 1;
  sum.coeffs.assign(m, Rational(1));
  lp.rows.push_back(std::move(sum));
  return lp_detail::solve(lp).feasible;
}

HullIntersection convex_hulls_intersect(const std::vector<std::vector<Point>>& parts,
                                        bool want_certificate) {
  if (parts.empty()) throw std::invalid_argument("no parts");
  HullIntersection out;
  for (const auto& part : parts) {
    if (part.empty()) {
      out.status = HullIntersection::Status::EmptyPart;
      return out;
    }
  }
  std::vector<Point> all;
  for (const auto& part : parts)
    for (const auto& p : part) all.push_back(p);
  check_points(all);
  const std::size_t d = all.front().size();

  // Variables: convex weights per part, concatenated. Rows force equal
  // per-part combinations (consecutive pairs) and unit weight sums.
  std::vector<std::size_t> offset(parts.size() + 1, 0);
  for (std::size_t c = 0; c < parts.size(); ++c)
    offset[c + 1] = offset[c] + parts[c].size();
  const std::size_t nv = offset.back();

  std::vector<LinearRow> rows;
  for (std::size_t c = 0; c + 1 < parts.size(); ++c) {
    for (std::size_t k = 0; k < d; ++k) {
      LinearRow row;
      row.rel = Rel::Eq;
      row.rhs = 0;
      row.coeffs.assign(nv, Rational(0));
      for (std::size_t i = 0; i < parts[c].size(); ++i)
        row.coeffs[offset[c] + i] = parts[c][i][k];
      for (std::size_t i = 0; i < parts[c + 1].size(); ++i)
        row.coeffs[offset[c + 1] + i] = -parts[c + 1][i][k];
      rows.push_back(std::move(row));
    }
  }
  for (std::size_t c = 0; c < parts.size(); ++c) {
    LinearRow row;
    row.rel = Rel::Eq;
    row.rhs = 1;
    row.coeffs.assign(nv, Rational(0));
    for (std::size_t i = 0; i < parts[c].size(); ++i)
      row.coeffs[offset[c] + i] = 1;
    rows.push_back(std::move(row));
  }

  lp_detail::GeneralLp lp;
  lp.nvars = nv;
  lp.nonneg.assign(nv, true);
  lp.rows = rows;
  const auto res = lp_detail::solve(lp);

  if (res.feasible) {
    out.status = HullIntersection::Status::Intersect;
    out.witness.assign(d, Rational(0));
    for (std::size_t i = 0; i < parts[0].size(); ++i)
      for (std::size_t k = 0; k < d; ++k)
        out.witness[k] += res.x[i] * parts[0][i][k];
    // Re-verify: every part's combination hits the witness exactly.
    for (std::size_t c = 0; c < parts.size(); ++c) {
      Point q(d, Rational(0));
      Rational w = 0;
      for (std::size_t i = 0; i < parts[c].size(); ++i) {
        const Rational& lam = res.x[offset[c] + i];
        if (lam < 0) throw InternalError("negative convex weight");
        w += lam;
        for (std::size_t k = 0; k < d; ++k) q[k] += lam * parts[c][i][k];
      }
      if (w != 1 || q != out.witness)
        throw InternalError("hull intersection witness failed re-verification");
    }
    return out;
  }

  out.status = HullIntersection::Status::Disjoint;
  if (want_certificate) {
    // Re-pose with free variables and explicit nonnegativity rows so the
    // generic certificate machinery applies.
    std::vector<LinearRow> free_rows = rows;
    for (std::size_t j = 0; j < nv; ++j) {
      LinearRow r;
      r.rel = Rel::Ge;
      r.rhs = 0;
      r.coeffs.assign(nv, Rational(0));
      r.coeffs[j] = 1;
      free_rows.push_back(std::move(r));
    }
    const auto lpres = lp_feasible(free_rows, nv, true);
    if (lpres.feasible())
      throw InternalError("disjoint hulls re-posed as feasible");
    out.certificate = lpres.certificate;
  }
  return out;
}

bool open_intersection_empty(const HalfSpaceFamily& family) {
  family.validate();
  std::vector<LinearRow> rows;
  for (const auto& h : family.halfspaces)
    rows.push_back({h.normal, Rel::Gt, h.offset});
  return !lp_feasible(rows, family.dim()).feasible();
}

bool closed_union_covers_space(const HalfSpaceFamily& family) {
  family.validate();
  HalfSpaceFamily complements;
  for (const auto& h : family.halfspaces)
    complements.halfspaces.push_back(h.complement());
  return open_intersection_empty(complements);
}

std::uint64_t membership_mask(const HalfSpace& h, const std::vector<Point>& points) {
  if (points.size() > 63) throw std::invalid_argument("mask limited to 63 points");
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (dot(h.normal, points[i]) > h.offset) mask |= std::uint64_t(1) << i;
  return mask;
}

std::optional<Vec> hyperplane_normal(const std::vector<Vec>& directions,
                                     std::size_t d) {
  if (directions.size() + 1 != d) return std::nullopt;
  // Gaussian elimination; the nullspace must be one-dimensional.
  std::vector<Vec> m = directions;
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < d && row < m.size(); ++col) {
    std::size_t pr = row;
    while (pr < m.size() && m[pr][col] == 0) ++pr;
    if (pr == m.size()) continue;
    std::swap(m[row], m[pr]);
    const Rational inv = Rational(1) / m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      const Rational f = m[i][col];
      for (std::size_t j = 0; j < d; ++j) m[i][j] -= f * m[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  if (row != directions.size()) return std::nullopt;  // dependent directions

  std::vector<bool> is_pivot(d, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::size_t free_col = d;
  for (std::size_t c = 0; c < d; ++c)
    if (!is_pivot[c]) {
      free_col = c;
      break;
    }
  if (free_col == d) return std::nullopt;

  Vec normal(d, Rational(0));
  normal[free_col] = 1;
  for (std::size_t i = 0; i < row; ++i)
    normal[pivot_col[i]] = -m[i][free_col];

  // Canonical form: clear denominators, divide by gcd, leading sign positive.
  Integer lcm = 1;
  for (const auto& v : normal) lcm = boost::multiprecision::lcm(lcm, denominator(v));
  Integer g = 0;
  std::vector<Integer> ints(d);
  for (std::size_t j = 0; j < d; ++j) {
    ints[j] = numerator(normal[j]) * (lcm / denominator(normal[j]));
    g = boost::multiprecision::gcd(g, ints[j]);
  }
  if (g == 0) return std::nullopt;
  int lead_sign = 0;
  for (const auto& v : ints)
    if (v != 0) {
      lead_sign = v > 0 ? 1 : -1;
      break;
    }
  for (std::size_t j = 0; j < d; ++j) {
    Integer v = ints[j] / g;
    if (lead_sign < 0) v = -v;
    normal[j] = Rational(v);
  }
  return normal;
}

std::vector<Vec> candidate_normals(const std::vector<Point>& points) {
  check_points(points);
  const std::size_t d = points.front().size();
  const std::size_t m = points.size();

  std::set<std::vector<std::string>> seen;
  std::vector<Vec> out;
  auto push = [&](const std::optional<Vec>& n) {
    if (!n) return;
    std::vector<std::string> key;
    key.reserve(n->size());
    for (const auto& v : *n) key.push_back(rational_to_string(v));
    if (seen.insert(key).second) out.push_back(*n);
  };

  // Subsets of k points (k <= d) contribute k-1 difference directions,
  // completed with d-k coordinate directions.
  std::vector<std::size_t> pts_idx, coord_idx;
  std::function<void(std::size_t, std::size_t)> choose_coords =
      [&](std::size_t start, std::size_t need) {
        if (need == 0) {
          std::vector<Vec> dirs;
          for (std::size_t i = 1; i < pts_idx.size(); ++i)
            dirs.push_back(sub(points[pts_idx[i]], points[pts_idx[0]]));
          for (auto c : coord_idx) {
            Vec e(d, Rational(0));
            e[c] = 1;
            dirs.push_back(std::move(e));
          }
          push(hyperplane_normal(dirs, d));
          return;
        }
        for (std::size_t c = start; c < d; ++c) {
          coord_idx.push_back(c);
          choose_coords(c + 1, need - 1);
          coord_idx.pop_back();
        }
      };
  std::function<void(std::size_t, std::size_t)> choose_points =
      [&](std::size_t start, std::size_t k) {
        if (pts_idx.size() == k) {
          choose_coords(0, d - k);
          return;
        }
        for (std::size_t i = start; i < m; ++i) {
          pts_idx.push_back(i);
          choose_points(i + 1, k);
          pts_idx.pop_back();
        }
      };
  for (std::size_t k = 1; k <= std::min(d, m); ++k) choose_points(0, k);
  return out;
}

std::vector<HalfSpace> enumerate_combinatorial_halfspaces(
    const std::vector<Point>& points, const EnumerateOptions& opts) {
  check_points(points);
  const std::size_t d = points.front().size();
  const std::size_t m = points.size();
  if (m > 63) throw std::invalid_argument("enumeration limited to 63 points");

  std::map<std::uint64_t, HalfSpace> by_mask;
  const std::uint64_t full = m == 63 ? ~std::uint64_t(0) >> 1
                                     : (std::uint64_t(1) << m) - 1;

  auto sweep = [&](const Vec& a) {
    Vec levels(m);
    for (std::size_t i = 0; i < m; ++i) levels[i] = dot(a, points[i]);
    Vec sorted = levels;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    Vec cuts;
    cuts.push_back(sorted.front() - 1);
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
      cuts.push_back((sorted[i] + sorted[i + 1]) / 2);
    cuts.push_back(sorted.back() + 1);
    for (const auto& b : cuts) {
      std::uint64_t mask = 0;
      for (std::size_t i = 0; i < m; ++i)
        if (levels[i] > b) mask |= std::uint64_t(1) << i;
      by_mask.emplace(mask, HalfSpace{a, b, true});
    }
  };

  const auto normals = candidate_normals(points);
  for (const auto& a : normals) {
    sweep(a);
    Vec neg(d);
    for (std::size_t j = 0; j < d; ++j) neg[j] = -a[j];
    sweep(neg);
  }

  if (m <= opts.closure_point_limit) {
    for (std::uint64_t mask = 1; mask < full; ++mask) {
      // A subset is realizable iff its complement is (weak boundary points
      // shift strictly outside), and sweeps harvest both orientations, so
      // deciding the masks without point 0 decides them all.
      if (mask & 1) continue;
      if (by_mask.count(mask)) continue;
      // Realizable iff the subset's hull misses the complement's hull; the
      // weight LP is far smaller than solving for the cut directly.
      std::vector<std::vector<Point>> sides(2);
      for (std::size_t i = 0; i < m; ++i)
        sides[(mask >> i) & 1 ? 0 : 1].push_back(points[i]);
      if (convex_hulls_intersect(sides).intersect()) continue;

      // Recover a concrete cut: a.p - b >= 1 inside, <= 0 outside
      // (strictness scales away), guaranteed feasible by the separation.
      lp_detail::GeneralLp lp;
      lp.nvars = d + 1;
      for (std::size_t i = 0; i < m; ++i) {
        LinearRow row;
        row.rel = Rel::Ge;
        if ((mask >> i) & 1) {
          row.coeffs = points[i];
          row.coeffs.push_back(Rational(-1));
          row.rhs = 1;
        } else {
          row.coeffs.resize(d + 1);
          for (std::size_t j = 0; j < d; ++j) row.coeffs[j] = -points[i][j];
          row.coeffs[d] = 1;
          row.rhs = 0;
        }
        lp.rows.push_back(std::move(row));
      }
      const auto res = lp_detail::solve(lp);
      if (!res.feasible)
        throw InternalError("disjoint hulls admit no separating half-space");
      Vec a(res.x.begin(), res.x.begin() + static_cast<long>(d));
      if (is_zero(a)) throw InternalError("zero normal from closure witness");
      Vec neg(d);
      for (std::size_t j = 0; j < d; ++j) neg[j] = -a[j];
      sweep(a);  // harvest every subset this direction realizes, both ways
      sweep(neg);
      if (!by_mask.count(mask))
        throw InternalError("closure witness failed to realize its subset");
    }
  }

  std::vector<HalfSpace> out;
  out.reserve(by_mask.size());
  for (auto& [mask, h] : by_mask) out.push_back(std::move(h));
  return out;
}

}  // namespace tvt
