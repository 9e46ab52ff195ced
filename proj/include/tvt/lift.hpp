// The tensor lift into Q^n, n = (r-1)(d+1): simplex vectors, the lift and
// projection maps, r-blocks, colorful choices, and the pushdown of a
// half-space through the origin to a family downstairs.
#pragma once

#include "tvt/config.hpp"
#include "tvt/geometry.hpp"

#include <vector>

namespace tvt {

// r vectors in Q^{r-1} whose only linear dependence is that they sum to
// zero: the standard basis followed by the negated sum.
struct SimplexVectors {
  int r = 0;
  std::vector<Vec> vectors;

  // Functional u with <u, v_i> = 1, <u, v_j> = -1, zero on the others.
  Vec pair_functional(int i, int j) const;
};

SimplexVectors make_simplex_vectors(int r);

// g_i(x) = v_i (x|1)^T, flattened row-major to length (r-1)(d+1).
Point lift(const Point& x, int column, const SimplexVectors& sv);

// Left inverse of lift: project(lift(x, i), i) == x.
Point project(const Point& y, int column, const SimplexVectors& sv, int d);

// The r x r grid of lifted points of one class: entry (i, j) lifts the
// class's i-th point with simplex vector j. Every row sums to zero (hence
// captures the origin) and every column lies in the image of g_j.
struct RBlock {
  int class_index = 0;
  int r = 0;
  int d = 0;
  std::vector<std::vector<Point>> grid;
};

RBlock build_r_block(const std::vector<Point>& class_points, int class_index,
                     const SimplexVectors& sv);

// One entry per row and per column of each block: a permutation per class
// mapping row (point) to column (simplex vector).
struct ColorfulChoice {
  std::vector<std::vector<int>> selection;

  void validate(const Configuration& config) const;
};

ColorfulPartition choice_to_partition(const ColorfulChoice& choice,
                                      const Configuration& config);
ColorfulChoice partition_to_choice(const ColorfulPartition& partition,
                                   const Configuration& config);

// Lifted points selected by the choice, one per (class, row).
std::vector<Point> lifted_choice_points(const Configuration& config,
                                        const ColorfulChoice& choice,
                                        const SimplexVectors& sv);

// Evaluates both sides of the equivalence "convex hulls of the parts
// intersect downstairs iff the lifted choice captures the origin" and
// throws InternalError if they ever disagree; returns the shared value.
bool capture_equivalence_check(const Configuration& config,
                               const ColorfulPartition& partition);

// For a half-space through the origin in Q^n, the images of its slices
// through the affine spaces U_i are open half-spaces downstairs with
// coefficients <v_i, Z_j> and offset -<v_i, Z_{d+1}>, Z read row-major
// from the normal. Their open intersection is empty and their closures
// cover Q^d.
HalfSpaceFamily pushdown_halfspace(const HalfSpace& h, int r, int d);

}  // namespace tvt
