// Tolerance oracles: is a colorful partition still a Tverberg partition
// after removing color classes, what is the largest removal count it
// survives, and which colorful partition of a configuration is best.
#pragma once

#include "tvt/config.hpp"
#include "tvt/geometry.hpp"
#include "tvt/splits.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace tvt {

// True iff the convex hulls of the parts, restricted to classes outside
// `removed_mask`, share a common point. A part emptied by removals makes
// the partition broken (the intersection with an empty hull is empty).
bool is_tverberg(const Configuration& config, const ColorfulPartition& partition,
                 std::uint64_t removed_mask = 0);

struct ToleranceReport {
  enum class Status { Ok, BudgetExhausted } status = Status::Ok;
  // Largest t such that removing any t classes leaves a Tverberg partition;
  // -1 when the partition is broken before any removal.
  int tolerance = -1;
  std::vector<int> break_set;  // minimal breaking removal, size tolerance+1
  // Farkas multipliers certifying hull disjointness after removing
  // break_set (empty when the break is an emptied part or not requested).
  Vec disjointness_certificate;
};

struct ToleranceOptions {
  long long subset_budget = 1 << 22;  // evaluations before giving up
  bool want_certificate = false;
};

// Ascending-cardinality search for the minimum breaking removal set.
// Breaking is monotone under supersets (hulls only shrink), so the first
// breaking cardinality determines the tolerance exactly.
ToleranceReport partition_tolerance(const Configuration& config,
                                    const ColorfulPartition& partition,
                                    const ToleranceOptions& opts = {});

// Exhaustive maximisation over colorful partitions (class 0 pinned to the
// identity: tolerance is invariant under relabeling parts globally).
// Ties resolve to the lexicographically least partition encoding.
std::pair<ColorfulPartition, ToleranceReport> best_partition_tolerance(
    const Configuration& config, const ToleranceOptions& opts = {});

struct BreakBoundReport {
  int max_split_pairs = 0;         // N' of the splitting hyperplane used
  std::vector<int> removed;        // verified breaking set
  bool verified_broken = false;
};

// r = 2 only: builds a breaking removal set of size at most N - ceil(N'/2)
// from a hyperplane splitting N' pairs: remove unsplit pairs, then every
// split pair whose part assignment disagrees with the better of the two
// orientations. Verifies the break by LP.
BreakBoundReport hyperplane_break_bound(const Configuration& config,
                                        const ColorfulPartition& partition);

// Batch variant reusing a precomputed best-splitting cut (boundary-free,
// splitting n_split pairs), as returned by max_pairs_split_with_witness.
BreakBoundReport hyperplane_break_bound(const Configuration& config,
                                        const ColorfulPartition& partition,
                                        const HalfSpace& cut, int n_split);

}  // namespace tvt
