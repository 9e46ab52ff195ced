// Split predicates and extremal split quantities: can a family of r open
// half-spaces with empty common intersection distribute a class's r points
// one-per-half-space, how many classes can any family split at once, and
// how many pairs can a single hyperplane split.
#pragma once

#include "tvt/config.hpp"
#include "tvt/geometry.hpp"
#include "tvt/rng.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace tvt {

struct CanSplitResult {
  bool yes = false;
  // On yes: matching[i] = half-space index assigned to point i.
  std::vector<int> matching;
  // On no with empty intersection: a minimum-cardinality set of half-space
  // indices whose union contains fewer class points than its size.
  std::vector<int> hall_violator;
  bool nonempty_intersection = false;
};

// Matching core on an arbitrary membership matrix (member[i][j] = point i
// lies in half-space j). Exposed so tests can compare it against the direct
// every-k-subset evaluation.
CanSplitResult matching_on_membership(const std::vector<std::vector<bool>>& member);

CanSplitResult can_split(const HalfSpaceFamily& family,
                         const std::vector<Point>& class_points);

// True iff the family's open intersection is empty and every half-space
// strictly contains exactly r-1 points of every class.
bool is_perfect_split(const HalfSpaceFamily& family, const Configuration& config);

// Construction via barycentric functionals of an embedded simplex: class k
// places its j-th point inside a rational jitter ball around vertex j, and
// H_i = { lambda_i(x) < 1/r }. Requires 2 <= r <= d+1; no perfect split
// configuration exists for r > d+1.
std::pair<Configuration, HalfSpaceFamily> generate_perfect_split(int N, int r,
                                                                 int d,
                                                                 std::uint64_t seed);

// Each class is r points jittered around a base point, with the exact jitter
// radius chosen so that any hyperplane meeting a cluster's hull passes close
// enough to its base point that no hyperplane can meet d+1 clusters at once.
// Base points default to the moment curve when omitted.
Configuration generate_clustered_config(int N, int r, int d, std::uint64_t seed,
                                        const std::vector<Point>& base_points = {});

struct SplitCertificate {
  HalfSpaceFamily family;
  std::vector<int> split_class_indices;
  // matchings[k][i] = half-space index for point i of split class k.
  std::vector<std::vector<int>> matchings;

  void validate(const Configuration& config) const;
};

struct CapacityMode {
  enum Kind { Exact, MonteCarlo } kind = Exact;
  long long trials = 0;           // MonteCarlo only
  std::uint64_t seed = 0;         // MonteCarlo only
  long long family_budget = 10'000'000;  // Exact only: candidate-space cap
};

struct CapacityResult {
  enum class Status { Ok, BudgetExceeded } status = Status::Ok;
  int f = 0;
  SplitCertificate certificate;  // attains f (empty family when f undefined)
  Integer candidate_space;       // estimate reported on budget refusal
};

// Largest number of classes any family of r open half-spaces with empty
// intersection splits simultaneously. Exact mode searches canonical
// candidates derived from the combinatorial half-space enumeration; for
// r = 2 the search is complete (such families are exactly opposite parallel
// cuts, closed over jointly realizable signature pairs). Monte Carlo mode
// reports a certified lower bound.
CapacityResult split_capacity(const Configuration& config, const CapacityMode& mode);

// r = 2 only: the maximum number of classes whose two points lie strictly on
// opposite sides of a single hyperplane.
int max_pairs_split_by_hyperplane(const Configuration& config);

// Internal variant that also returns a boundary-free half-space achieving
// the maximum (its boundary is the splitting hyperplane).
std::pair<int, HalfSpace> max_pairs_split_with_witness(const Configuration& config);

}  // namespace tvt
