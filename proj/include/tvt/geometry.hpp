// Exact geometric predicates: convexity tests, half-space systems, and the
// combinatorial enumeration of half-spaces over a finite point set.
#pragma once

#include "tvt/lp.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace tvt {

// Membership convention: <normal, x> > offset (open) or >= offset (closed).
struct HalfSpace {
  Vec normal;
  Rational offset;
  bool open = true;

  bool contains(const Point& x) const;
  // -1 strictly outside boundary side, 0 on the boundary, +1 strictly inside.
  int side(const Point& x) const;
  HalfSpace complement() const;  // open <-> closed, flipped orientation
};

struct HalfSpaceFamily {
  std::vector<HalfSpace> halfspaces;

  std::size_t size() const { return halfspaces.size(); }
  std::size_t dim() const;
  void validate() const;  // equal dimensions, nonzero normals
};

// True iff the origin lies in the convex hull of the points.
bool captures_origin(const std::vector<Point>& points);

struct HullIntersection {
  enum class Status { Intersect, Disjoint, EmptyPart };
  Status status = Status::Disjoint;
  Point witness;    // common point, set iff Intersect
  Vec certificate;  // Farkas multipliers, set iff Disjoint and requested

  bool intersect() const { return status == Status::Intersect; }
};

// Decides whether the convex hulls of the parts share a common point.
// An empty part is reported as a distinct outcome rather than an error.
HullIntersection convex_hulls_intersect(const std::vector<std::vector<Point>>& parts,
                                        bool want_certificate = false);

// True iff the strict system {<a_i, x> > b_i for all i} is infeasible.
// Every family member is treated as open regardless of its flag.
bool open_intersection_empty(const HalfSpaceFamily& family);

// True iff the union of the closed half-spaces covers all of Q^d, decided
// via open_intersection_empty on the complements.
bool closed_union_covers_space(const HalfSpaceFamily& family);

// Bit i set iff point i is strictly inside H. Requires <= 63 points.
std::uint64_t membership_mask(const HalfSpace& h, const std::vector<Point>& points);

struct EnumerateOptions {
  // The LP closure pass runs only when the point count is at most this;
  // beyond it the span construction alone is used.
  std::size_t closure_point_limit = 16;
};

// Returns open half-spaces realizing every subset of `points` that is
// realizable as {points strictly inside an open half-space}, one
// representative per realizable subset, sorted by membership mask.
//
// Construction: candidate normals are taken orthogonal to hyperplanes
// spanned by up to d input points (short spans completed with coordinate
// directions), each swept with offsets strictly between consecutive point
// levels; a subset-by-subset LP closure then certifies completeness, which
// the span construction alone does not provide on degenerate inputs.
std::vector<HalfSpace> enumerate_combinatorial_halfspaces(
    const std::vector<Point>& points, const EnumerateOptions& opts = {});

// The span-derived candidate normals described above, deduplicated to a
// canonical integer form with positive leading coordinate. Exposed for the
// split-capacity search, which sweeps the same directions.
std::vector<Vec> candidate_normals(const std::vector<Point>& points);

// Nullspace direction of the span of the given vectors in Q^d, canonical
// form, or nullopt when the span does not have dimension d-1.
std::optional<Vec> hyperplane_normal(const std::vector<Vec>& directions,
                                     std::size_t d);

}  // namespace tvt
