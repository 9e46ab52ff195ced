#include "tvt/splits.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace tvt {

namespace {

// Augmenting-path maximum matching on a small bipartite membership matrix.
struct Matcher {
  const std::vector<std::vector<bool>>& adj;
  std::vector<int> match_point;  // per half-space: matched point or -1
  std::vector<bool> visited;

  explicit Matcher(const std::vector<std::vector<bool>>& a)
      : adj(a), match_point(a.size(), -1) {}

  bool augment(int point) {
    const int n = static_cast<int>(adj.size());
    for (int h = 0; h < n; ++h) {
      if (!adj[point][h] || visited[h]) continue;
      visited[h] = true;
      if (match_point[h] < 0 || augment(match_point[h])) {
        match_point[h] = point;
        return true;
      }
    }
    return false;
  }

  int solve() {
    int matched = 0;
    for (int p = 0; p < static_cast<int>(adj.size()); ++p) {
      visited.assign(adj.size(), false);
      if (augment(p)) ++matched;
    }
    return matched;
  }
};

}  // namespace

CanSplitResult matching_on_membership(const std::vector<std::vector<bool>>& member) {
  const int n = static_cast<int>(member.size());
  for (const auto& row : member)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("membership matrix must be square");

  CanSplitResult out;
  Matcher matcher(member);
  if (matcher.solve() == n) {
    out.yes = true;
    out.matching.assign(n, -1);
    for (int h = 0; h < n; ++h) out.matching[matcher.match_point[h]] = h;
    return out;
  }

  // Minimum-cardinality Hall violator on the half-space side: a set K of
  // half-spaces whose union holds fewer than |K| points.
  for (int size = 1; size <= n && out.hall_violator.empty(); ++size) {
    std::vector<int> subset;
    std::function<bool(int)> search = [&](int start) {
      if (static_cast<int>(subset.size()) == size) {
        int covered = 0;
        for (int p = 0; p < n; ++p)
          for (int h : subset)
            if (member[p][h]) {
              ++covered;
              break;
            }
        return covered < size;
      }
      for (int h = start; h < n; ++h) {
        subset.push_back(h);
        if (search(h + 1)) return true;
        subset.pop_back();
      }
      return false;
    };
    if (search(0)) out.hall_violator = subset;
  }
  if (out.hall_violator.empty())
    throw InternalError("matching failed but no Hall violator exists");
  return out;
}

CanSplitResult can_split(const HalfSpaceFamily& family,
                         const std::vector<Point>& class_points) {
  family.validate();
  const int n = static_cast<int>(family.size());
  if (static_cast<int>(class_points.size()) != n)
    throw std::invalid_argument("class size differs from family size");

  if (!open_intersection_empty(family)) {
    CanSplitResult out;
    out.nonempty_intersection = true;
    return out;
  }
  std::vector<std::vector<bool>> member(n, std::vector<bool>(n, false));
  for (int p = 0; p < n; ++p)
    for (int h = 0; h < n; ++h)
      member[p][h] = family.halfspaces[h].contains(class_points[p]);
  return matching_on_membership(member);
}

bool is_perfect_split(const HalfSpaceFamily& family, const Configuration& config) {
  config.validate();
  if (static_cast<int>(family.size()) != config.r) return false;
  if (!open_intersection_empty(family)) return false;
  for (const auto& cls : config.classes) {
    for (const auto& h : family.halfspaces) {
      int inside = 0;
      for (const auto& p : cls)
        if (dot(h.normal, p) > h.offset) ++inside;
      if (inside != config.r - 1) return false;
    }
  }
  return true;
}

std::pair<Configuration, HalfSpaceFamily> generate_perfect_split(int N, int r,
                                                                 int d,
                                                                 std::uint64_t seed) {
  if (N < 1 || r < 2 || d < 1) throw std::invalid_argument("bad parameters");
  if (r > d + 1)
    throw std::invalid_argument(
        "no perfect split configuration exists for r > d+1: r open half-spaces "
        "each missing one point per class would have a common point");

  // Simplex vertices: the first r-1 coordinate unit points plus the origin.
  std::vector<Point> vertex(r, Point(d, Rational(0)));
  for (int j = 0; j + 1 < r; ++j) vertex[j][j] = 1;

  // Affine functionals with lambda_i(vertex_j) = delta_ij and sum 1.
  HalfSpaceFamily family;
  for (int i = 0; i < r; ++i) {
    HalfSpace h;
    h.open = true;
    h.normal.assign(d, Rational(0));
    if (i + 1 < r) {  // lambda_i(x) = x_i < 1/r
      h.normal[i] = -1;
      h.offset = make_rational(-1, r);
    } else {  // lambda_last(x) = 1 - sum x_j < 1/r
      for (int j = 0; j + 1 < r; ++j) h.normal[j] = 1;
      h.offset = make_rational(r - 1, r);
    }
    family.halfspaces.push_back(std::move(h));
  }

  // Jitter radius 1/(2 r^2): each functional moves by at most (r-1)/(2 r^2),
  // which keeps every membership strict.
  const Rational radius = make_rational(1, 2LL * r * r);
  const long long grid = 1024;
  Configuration config;
  config.d = d;
  config.r = r;
  SplitRng rng(seed);
  for (int c = 0; c < N; ++c) {
    SplitRng class_rng = rng.child(static_cast<std::uint64_t>(c));
    std::vector<Point> cls;
    for (int j = 0; j < r; ++j) {
      Point p = vertex[j];
      for (int k = 0; k < d; ++k)
        p[k] += radius * make_rational(class_rng.range(-grid, grid), grid);
      cls.push_back(std::move(p));
    }
    config.classes.push_back(std::move(cls));
  }

  if (!is_perfect_split(family, config))
    throw InternalError("generated configuration is not a perfect split");
  return {std::move(config), std::move(family)};
}

namespace {

Rational pow_rational(const Rational& base, int exp) {
  Rational out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

Rational sup_norm(const Vec& v) {
  Rational out = 0;
  for (const auto& x : v) {
    Rational a = x < 0 ? Rational(-x) : x;
    if (a > out) out = a;
  }
  return out;
}

Rational det(std::vector<Vec> m) {
  const std::size_t n = m.size();
  Rational out = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      out = -out;
    }
    out *= m[col][col];
    const Rational inv = Rational(1) / m[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m[i][col] == 0) continue;
      const Rational f = m[i][col] * inv;
      for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  return out;
}

}  // namespace

Configuration generate_clustered_config(int N, int r, int d, std::uint64_t seed,
                                        const std::vector<Point>& base_points) {
  if (N < 1 || r < 2 || d < 1) throw std::invalid_argument("bad parameters");
  std::vector<Point> base = base_points;
  if (base.empty()) {
    for (int i = 1; i <= N; ++i) {  // moment curve, always in general position
      Point p(d);
      Rational v = i;
      for (int k = 0; k < d; ++k) {
        p[k] = v;
        v *= i;
      }
      base.push_back(std::move(p));
    }
  }
  if (static_cast<int>(base.size()) != N)
    throw std::invalid_argument("base point count differs from N");
  for (const auto& p : base)
    if (static_cast<int>(p.size()) != d)
      throw std::invalid_argument("base point dimension mismatch");

  // Exact jitter radius: small enough that a hyperplane meeting a cluster's
  // hull passes within the margin of its base point, while no hyperplane is
  // within that margin of d+1 base points at once (determinant bound below).
  Rational radius = make_rational(1, 4);
  for (int i = 0; i < N; ++i) {
    for (int j = i + 1; j < N; ++j) {
      const Rational gap = sup_norm(sub(base[i], base[j]));
      if (gap == 0) throw std::invalid_argument("duplicate base points");
      if (gap / 4 < radius) radius = gap / 4;
    }
  }
  if (N >= d + 1) {
    std::vector<int> subset;
    std::function<void(int)> visit = [&](int start) {
      if (static_cast<int>(subset.size()) == d + 1) {
        std::vector<Vec> diff;
        Rational w = 0;
        for (int k = 1; k <= d; ++k) {
          diff.push_back(sub(base[subset[k]], base[subset[0]]));
          const Rational s = sup_norm(diff.back());
          if (s > w) w = s;
        }
        Rational determinant = det(diff);
        if (determinant < 0) determinant = -determinant;
        if (determinant == 0)
          throw std::invalid_argument(
              "degenerate base points: d+1 of them lie on a hyperplane");
        // |det| <= 2 rho d (d W)^{d-1} whenever a unit-normal hyperplane is
        // within rho of all d+1 points; clusters of radius rho_inf put their
        // hulls within sqrt(d) rho_inf <= d rho_inf of the base point.
        const Rational bound =
            determinant / (Rational(4) * d * d * pow_rational(Rational(d) * w, d - 1));
        if (bound < radius) radius = bound;
        return;
      }
      for (int i = start; i < N; ++i) {
        subset.push_back(i);
        visit(i + 1);
        subset.pop_back();
      }
    };
    visit(0);
  }

  const long long grid = 1024;
  Configuration config;
  config.d = d;
  config.r = r;
  SplitRng rng(seed);
  for (int c = 0; c < N; ++c) {
    SplitRng class_rng = rng.child(static_cast<std::uint64_t>(c));
    std::vector<Point> cls;
    for (int j = 0; j < r; ++j) {
      Point p = base[c];
      for (int k = 0; k < d; ++k)
        p[k] += radius * make_rational(class_rng.range(-grid, grid), grid);
      cls.push_back(std::move(p));
    }
    config.classes.push_back(std::move(cls));
  }
  return config;
}

void SplitCertificate::validate(const Configuration& config) const {
  config.validate();
  family.validate();
  if (static_cast<int>(family.size()) != config.r)
    throw std::invalid_argument("certificate family size differs from r");
  if (split_class_indices.size() != matchings.size())
    throw std::invalid_argument("certificate matching count mismatch");
  if (!open_intersection_empty(family))
    throw std::invalid_argument("certificate family has nonempty intersection");
  for (std::size_t k = 0; k < split_class_indices.size(); ++k) {
    const int c = split_class_indices[k];
    if (c < 0 || c >= config.count())
      throw std::invalid_argument("certificate class index out of range");
    if (!is_permutation(matchings[k], config.r))
      throw std::invalid_argument("certificate matching is not a bijection");
    for (int i = 0; i < config.r; ++i)
      if (!family.halfspaces[matchings[k][i]].contains(config.classes[c][i]))
        throw std::invalid_argument("certificate matching membership fails");
  }
}

namespace {

struct FamilySig {
  std::vector<std::uint64_t> masks;  // sorted
  bool operator<(const FamilySig& o) const { return masks < o.masks; }
  bool operator==(const FamilySig& o) const { return masks == o.masks; }
};

int count_pair_splits(std::uint64_t upper, std::uint64_t lower, int N) {
  int count = 0;
  for (int c = 0; c < N; ++c) {
    const bool a_up = (upper >> (2 * c)) & 1, a_lo = (lower >> (2 * c)) & 1;
    const bool b_up = (upper >> (2 * c + 1)) & 1, b_lo = (lower >> (2 * c + 1)) & 1;
    if ((a_up && b_lo) || (b_up && a_lo)) ++count;
  }
  return count;
}

SplitCertificate make_pair_certificate(const Configuration& config,
                                       const HalfSpace& upper,
                                       const HalfSpace& lower) {
  SplitCertificate cert;
  cert.family.halfspaces = {upper, lower};
  for (int c = 0; c < config.count(); ++c) {
    const bool a_up = upper.contains(config.classes[c][0]);
    const bool a_lo = lower.contains(config.classes[c][0]);
    const bool b_up = upper.contains(config.classes[c][1]);
    const bool b_lo = lower.contains(config.classes[c][1]);
    if (a_up && b_lo) {
      cert.split_class_indices.push_back(c);
      cert.matchings.push_back({0, 1});
    } else if (b_up && a_lo) {
      cert.split_class_indices.push_back(c);
      cert.matchings.push_back({1, 0});
    }
  }
  return cert;
}

// Complete exact capacity for r = 2. Families of two open half-spaces with
// empty intersection are exactly opposite parallel cuts with a gap; the
// per-normal sweep covers every cut pair along candidate directions and a
// joint LP closure covers signature pairs those directions miss.
CapacityResult split_capacity_pairs(const Configuration& config,
                                    long long family_budget) {
  const auto points = config.all_points();
  const int N = config.count();
  const std::size_t m = points.size();
  const std::size_t d = config.d;

  struct Best {
    int f = -1;
    FamilySig sig;
    HalfSpace upper, lower;
  } best;
  std::set<std::pair<std::uint64_t, std::uint64_t>> seen_pairs;

  auto consider = [&](const HalfSpace& upper, const HalfSpace& lower) {
    const std::uint64_t mu = membership_mask(upper, points);
    const std::uint64_t ml = membership_mask(lower, points);
    seen_pairs.emplace(std::min(mu, ml), std::max(mu, ml));
    const int f = count_pair_splits(mu, ml, N);
    FamilySig sig{{std::min(mu, ml), std::max(mu, ml)}};
    if (f > best.f || (f == best.f && sig < best.sig)) {
      best = {f, sig, upper, lower};
    }
  };

  for (const auto& a : candidate_normals(points)) {
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
    Vec neg(d);
    for (std::size_t j = 0; j < d; ++j) neg[j] = -a[j];
    for (std::size_t lo = 0; lo < cuts.size(); ++lo) {
      for (std::size_t hi = lo; hi < cuts.size(); ++hi) {
        HalfSpace upper{a, cuts[hi], true};
        HalfSpace lower{neg, -cuts[lo], true};
        consider(upper, lower);
      }
    }
  }

  // Joint closure over realizable signature pairs.
  const auto candidates = enumerate_combinatorial_halfspaces(points);
  std::vector<std::uint64_t> masks;
  for (const auto& h : candidates) masks.push_back(membership_mask(h, points));

  struct PairCandidate {
    int f;
    std::uint64_t x, y;  // x < y
  };
  std::vector<PairCandidate> pairs;
  const Integer space = Integer(masks.size()) * Integer(masks.size() + 1) / 2;
  if (space > family_budget) {
    CapacityResult out;
    out.status = CapacityResult::Status::BudgetExceeded;
    out.candidate_space = space;
    return out;
  }
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (std::size_t j = i; j < masks.size(); ++j) {
      const std::uint64_t x = std::min(masks[i], masks[j]);
      const std::uint64_t y = std::max(masks[i], masks[j]);
      if ((x & y) != 0) continue;
      if (seen_pairs.count({x, y})) continue;
      const int f = count_pair_splits(x, y, N);  // symmetric in the two sides
      if (f > best.f || (f == best.f && FamilySig{{x, y}} < best.sig))
        pairs.push_back({f, x, y});
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const PairCandidate& a, const PairCandidate& b) {
    if (a.f != b.f) return a.f > b.f;
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  });
  for (const auto& cand : pairs) {
    if (cand.f < best.f) break;
    FamilySig sig{{cand.x, cand.y}};
    if (cand.f == best.f && !(sig < best.sig)) continue;
    // Try either side as the upper cut; the split count is side-symmetric.
    for (int orient = 0; orient < 2; ++orient) {
      const std::uint64_t up = orient == 0 ? cand.x : cand.y;
      const std::uint64_t lo = orient == 0 ? cand.y : cand.x;
      std::vector<LinearRow> rows;  // vars: w (d), beta_up, beta_lo
      for (std::size_t i = 0; i < m; ++i) {
        const bool in_up = (up >> i) & 1, in_lo = (lo >> i) & 1;
        LinearRow r_up;
        r_up.coeffs = points[i];
        r_up.coeffs.push_back(Rational(-1));
        r_up.coeffs.push_back(Rational(0));
        r_up.rhs = in_up ? 1 : 0;
        r_up.rel = in_up ? Rel::Ge : Rel::Le;  // margin-1 form of strictness
        rows.push_back(std::move(r_up));
        LinearRow r_lo;
        r_lo.coeffs = points[i];
        r_lo.coeffs.push_back(Rational(0));
        r_lo.coeffs.push_back(Rational(-1));
        r_lo.rhs = in_lo ? -1 : 0;
        r_lo.rel = in_lo ? Rel::Le : Rel::Ge;
        rows.push_back(std::move(r_lo));
      }
      LinearRow gap;  // beta_up >= beta_lo
      gap.coeffs.assign(d + 2, Rational(0));
      gap.coeffs[d] = 1;
      gap.coeffs[d + 1] = -1;
      gap.rel = Rel::Ge;
      gap.rhs = 0;
      rows.push_back(std::move(gap));
      const auto res = lp_feasible(rows, d + 2);
      if (!res.feasible()) continue;
      Vec w(res.witness.begin(), res.witness.begin() + static_cast<long>(d));
      Vec neg(d);
      for (std::size_t j = 0; j < d; ++j) neg[j] = -w[j];
      HalfSpace upper{w, res.witness[d], true};
      HalfSpace lower{neg, -res.witness[d + 1], true};
      if (membership_mask(upper, points) != up || membership_mask(lower, points) != lo)
        throw InternalError("joint closure witness realizes the wrong masks");
      best = {cand.f, sig, upper, lower};
      break;
    }
  }

  CapacityResult out;
  out.f = best.f;
  out.certificate = make_pair_certificate(config, best.upper, best.lower);
  if (static_cast<int>(out.certificate.split_class_indices.size()) != best.f)
    throw InternalError("capacity certificate count mismatch");
  out.certificate.validate(config);
  return out;
}

std::vector<std::uint64_t> class_membership_bits(const Configuration& config,
                                                 const HalfSpace& h) {
  std::vector<std::uint64_t> bits(config.count(), 0);
  for (int c = 0; c < config.count(); ++c)
    for (int i = 0; i < config.r; ++i)
      if (h.contains(config.classes[c][i])) bits[c] |= std::uint64_t(1) << i;
  return bits;
}

// Evaluate one candidate family: split count and matchings, gated on the
// family's open intersection being empty (checked lazily by the caller).
int family_split_count(const Configuration& config,
                       const std::vector<const std::vector<std::uint64_t>*>& bits,
                       std::vector<std::vector<int>>* matchings,
                       std::vector<int>* classes) {
  const int r = config.r;
  int count = 0;
  for (int c = 0; c < config.count(); ++c) {
    std::vector<std::vector<bool>> member(r, std::vector<bool>(r, false));
    for (int p = 0; p < r; ++p)
      for (int h = 0; h < r; ++h)
        member[p][h] = ((*bits[h])[c] >> p) & 1;
    auto res = matching_on_membership(member);
    if (res.yes) {
      ++count;
      if (matchings) {
        classes->push_back(c);
        matchings->push_back(res.matching);
      }
    }
  }
  return count;
}

CapacityResult split_capacity_general(const Configuration& config,
                                      const CapacityMode& mode) {
  const auto points = config.all_points();
  const int r = config.r;
  const auto candidates = enumerate_combinatorial_halfspaces(points);
  const std::size_t m = candidates.size();

  std::vector<std::vector<std::uint64_t>> bits;
  std::vector<std::uint64_t> masks;
  bits.reserve(m);
  for (const auto& h : candidates) {
    bits.push_back(class_membership_bits(config, h));
    masks.push_back(membership_mask(h, points));
  }

  struct Best {
    int f = -1;
    FamilySig sig;
    std::vector<std::size_t> idx;
  } best;

  auto evaluate = [&](const std::vector<std::size_t>& idx) {
    FamilySig sig;
    for (auto i : idx) sig.masks.push_back(masks[i]);
    std::sort(sig.masks.begin(), sig.masks.end());
    std::vector<const std::vector<std::uint64_t>*> fb;
    for (auto i : idx) fb.push_back(&bits[i]);
    const int f = family_split_count(config, fb, nullptr, nullptr);
    if (f < best.f || (f == best.f && !(sig < best.sig))) return;
    HalfSpaceFamily family;
    for (auto i : idx) family.halfspaces.push_back(candidates[i]);
    if (!open_intersection_empty(family)) return;
    best = {f, sig, idx};
  };

  CapacityResult out;
  if (mode.kind == CapacityMode::Exact) {
    Integer space = 1;  // combinations with repetition: C(m + r - 1, r)
    for (int k = 0; k < r; ++k) space = space * Integer(m + k) / (k + 1);
    if (space > mode.family_budget) {
      out.status = CapacityResult::Status::BudgetExceeded;
      out.candidate_space = space;
      return out;
    }
    std::vector<std::size_t> idx(r, 0);
    std::function<void(int, std::size_t)> visit = [&](int pos, std::size_t start) {
      if (pos == r) {
        evaluate(idx);
        return;
      }
      for (std::size_t i = start; i < m; ++i) {
        idx[pos] = i;
        visit(pos + 1, i);
      }
    };
    visit(0, 0);
  } else {
    SplitRng rng(mode.seed);
    std::vector<std::size_t> idx(r);
    for (long long trial = 0; trial < mode.trials; ++trial) {
      for (int k = 0; k < r; ++k)
        idx[k] = static_cast<std::size_t>(rng.below(m));
      std::sort(idx.begin(), idx.end());
      evaluate(idx);
    }
  }

  if (best.f < 0) {
    // No candidate family had empty intersection (possible only under a tiny
    // Monte Carlo budget); report zero capacity with a trivial family.
    HalfSpaceFamily family;
    Vec e1(config.d, Rational(0)), e1n(config.d, Rational(0));
    e1[0] = 1;
    e1n[0] = -1;
    family.halfspaces.push_back({e1, Rational(0), true});
    family.halfspaces.push_back({e1n, Rational(0), true});
    while (static_cast<int>(family.size()) < r)
      family.halfspaces.push_back({e1, Rational(0), true});
    out.f = 0;
    out.certificate.family = family;
    out.certificate.validate(config);
    return out;
  }

  out.f = best.f;
  out.certificate.family.halfspaces.clear();
  for (auto i : best.idx)
    out.certificate.family.halfspaces.push_back(candidates[i]);
  std::vector<const std::vector<std::uint64_t>*> fb;
  for (auto i : best.idx) fb.push_back(&bits[i]);
  family_split_count(config, fb, &out.certificate.matchings,
                     &out.certificate.split_class_indices);
  out.certificate.validate(config);
  return out;
}

}  // namespace

CapacityResult split_capacity(const Configuration& config, const CapacityMode& mode) {
  config.validate();
  if (config.all_points().size() > 63)
    throw std::invalid_argument("capacity search limited to 63 points");
  if (config.r == 2 && mode.kind == CapacityMode::Exact)
    return split_capacity_pairs(config, mode.family_budget);
  return split_capacity_general(config, mode);
}

int max_pairs_split_by_hyperplane(const Configuration& config) {
  return max_pairs_split_with_witness(config).first;
}

std::pair<int, HalfSpace> max_pairs_split_with_witness(const Configuration& config) {
  config.validate();
  if (config.r != 2)
    throw std::invalid_argument("hyperplane pair splitting requires r = 2");
  const auto points = config.all_points();
  const int N = config.count();

  int best = -1;
  HalfSpace best_h;
  for (const auto& h : enumerate_combinatorial_halfspaces(points)) {
    // Shift the cut into the open gap so no point sits on the boundary;
    // this never decreases the number of strictly split pairs.
    Vec levels(points.size());
    for (std::size_t i = 0; i < points.size(); ++i)
      levels[i] = dot(h.normal, points[i]);
    Rational cut;
    bool have_in = false, have_out = false;
    Rational min_in = 0, max_out = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (levels[i] > h.offset) {
        if (!have_in || levels[i] < min_in) min_in = levels[i];
        have_in = true;
      } else {
        if (!have_out || levels[i] > max_out) max_out = levels[i];
        have_out = true;
      }
    }
    if (!have_in) continue;  // empty side splits nothing
    if (have_out)
      cut = (min_in + max_out) / 2;
    else
      cut = min_in - 1;

    int count = 0;
    for (int c = 0; c < N; ++c) {
      const Rational& la = levels[2 * c];
      const Rational& lb = levels[2 * c + 1];
      if ((la > cut && lb < cut) || (lb > cut && la < cut)) ++count;
    }
    if (count > best) {
      best = count;
      best_h = HalfSpace{h.normal, cut, true};
    }
  }
  if (best < 0) {
    best = 0;
    Vec e1(config.d, Rational(0));
    e1[0] = 1;
    best_h = HalfSpace{e1, Rational(0), true};
  }
  return {best, best_h};
}

}  // namespace tvt
