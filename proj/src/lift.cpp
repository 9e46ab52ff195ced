#include "tvt/lift.hpp"

namespace tvt {

SimplexVectors make_simplex_vectors(int r) {
  if (r < 2) throw std::invalid_argument("simplex vectors need r >= 2");
  SimplexVectors sv;
  sv.r = r;
  sv.vectors.assign(r, Vec(r - 1, Rational(0)));
  for (int i = 0; i + 1 < r; ++i) sv.vectors[i][i] = 1;
  for (int k = 0; k + 1 < r; ++k) sv.vectors[r - 1][k] = -1;
  return sv;
}

Vec SimplexVectors::pair_functional(int i, int j) const {
  if (i < 0 || j < 0 || i >= r || j >= r || i == j)
    throw std::invalid_argument("pair functional needs distinct indices");
  Vec u(r - 1, Rational(0));
  // <u, v_last> = -sum(u), so e_i alone or -e_j alone handles the last vector.
  if (i < r - 1 && j < r - 1) {
    u[i] = 1;
    u[j] = -1;
  } else if (j == r - 1) {
    u[i] = 1;
  } else {
    u[j] = -1;
  }
  return u;
}

Point lift(const Point& x, int column, const SimplexVectors& sv) {
  if (column < 0 || column >= sv.r)
    throw std::invalid_argument("lift column index out of range");
  const int d = static_cast<int>(x.size());
  Point out(static_cast<std::size_t>(sv.r - 1) * (d + 1));
  const Vec& v = sv.vectors[column];
  for (int a = 0; a + 1 < sv.r; ++a) {
    for (int b = 0; b <= d; ++b) {
      const Rational xb = b < d ? x[b] : Rational(1);
      out[static_cast<std::size_t>(a) * (d + 1) + b] = v[a] * xb;
    }
  }
  return out;
}

Point project(const Point& y, int column, const SimplexVectors& sv, int d) {
  if (column < 0 || column >= sv.r)
    throw std::invalid_argument("project column index out of range");
  if (y.size() != static_cast<std::size_t>(sv.r - 1) * (d + 1))
    throw std::invalid_argument("lifted point has wrong dimension");
  const Vec& v = sv.vectors[column];
  Rational norm2 = 0;
  for (const auto& c : v) norm2 += c * c;
  Point out(d);
  for (int b = 0; b < d; ++b) {
    Rational s = 0;
    for (int a = 0; a + 1 < sv.r; ++a)
      s += v[a] * y[static_cast<std::size_t>(a) * (d + 1) + b];
    out[b] = s / norm2;
  }
  return out;
}

RBlock build_r_block(const std::vector<Point>& class_points, int class_index,
                     const SimplexVectors& sv) {
  if (static_cast<int>(class_points.size()) != sv.r)
    throw std::invalid_argument("class size differs from r");
  if (class_points.empty() || class_points.front().empty())
    throw std::invalid_argument("empty class");
  const int d = static_cast<int>(class_points.front().size());
  RBlock block;
  block.class_index = class_index;
  block.r = sv.r;
  block.d = d;
  block.grid.resize(sv.r);
  for (int i = 0; i < sv.r; ++i) {
    if (static_cast<int>(class_points[i].size()) != d)
      throw std::invalid_argument("point dimension mismatch inside class");
    block.grid[i].reserve(sv.r);
    for (int j = 0; j < sv.r; ++j)
      block.grid[i].push_back(lift(class_points[i], j, sv));
    // Row capture certificate: the row sums to zero exactly, so the origin
    // is its barycenter.
    Point sum(block.grid[i][0].size(), Rational(0));
    for (int j = 0; j < sv.r; ++j)
      for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += block.grid[i][j][k];
    if (!is_zero(sum)) throw InternalError("r-block row does not sum to zero");
  }
  return block;
}

void ColorfulChoice::validate(const Configuration& config) const {
  if (selection.size() != config.classes.size())
    throw std::invalid_argument("choice class count mismatch");
  for (const auto& sigma : selection)
    if (!is_permutation(sigma, config.r))
      throw std::invalid_argument("choice row is not a permutation");
}

ColorfulPartition choice_to_partition(const ColorfulChoice& choice,
                                      const Configuration& config) {
  choice.validate(config);
  return ColorfulPartition{choice.selection};
}

ColorfulChoice partition_to_choice(const ColorfulPartition& partition,
                                   const Configuration& config) {
  partition.validate(config);
  return ColorfulChoice{partition.assignment};
}

std::vector<Point> lifted_choice_points(const Configuration& config,
                                        const ColorfulChoice& choice,
                                        const SimplexVectors& sv) {
  choice.validate(config);
  std::vector<Point> out;
  out.reserve(config.classes.size() * config.r);
  for (int c = 0; c < config.count(); ++c)
    for (int i = 0; i < config.r; ++i)
      out.push_back(lift(config.classes[c][i], choice.selection[c][i], sv));
  return out;
}

bool capture_equivalence_check(const Configuration& config,
                               const ColorfulPartition& partition) {
  config.validate();
  partition.validate(config);
  const bool downstairs =
      convex_hulls_intersect(partition_parts(config, partition)).intersect();
  const auto sv = make_simplex_vectors(config.r);
  const bool upstairs = captures_origin(
      lifted_choice_points(config, partition_to_choice(partition, config), sv));
  if (downstairs != upstairs)
    throw InternalError("hull-intersection / origin-capture equivalence failed");
  return downstairs;
}

HalfSpaceFamily pushdown_halfspace(const HalfSpace& h, int r, int d) {
  if (r < 2 || d < 1) throw std::invalid_argument("pushdown needs r >= 2, d >= 1");
  if (h.offset != 0)
    throw std::invalid_argument("pushdown requires a half-space through the origin");
  const std::size_t n = static_cast<std::size_t>(r - 1) * (d + 1);
  if (h.normal.size() != n)
    throw std::invalid_argument("half-space dimension is not (r-1)(d+1)");
  if (is_zero(h.normal)) throw std::invalid_argument("zero normal");

  const auto sv = make_simplex_vectors(r);
  auto z_at = [&](int row, int col) {  // Z is (r-1) x (d+1), row-major
    return h.normal[static_cast<std::size_t>(row) * (d + 1) + col];
  };
  HalfSpaceFamily family;
  for (int i = 0; i < r; ++i) {
    HalfSpace hi;
    hi.open = true;
    hi.normal.resize(d);
    for (int j = 0; j < d; ++j) {
      Rational s = 0;
      for (int a = 0; a + 1 < r; ++a) s += sv.vectors[i][a] * z_at(a, j);
      hi.normal[j] = s;
    }
    Rational last = 0;
    for (int a = 0; a + 1 < r; ++a) last += sv.vectors[i][a] * z_at(a, d);
    hi.offset = -last;
    if (is_zero(hi.normal))
      throw std::invalid_argument(
          "degenerate half-space: a pushdown image is not a half-space");
    family.halfspaces.push_back(std::move(hi));
  }
  return family;
}

}  // namespace tvt
