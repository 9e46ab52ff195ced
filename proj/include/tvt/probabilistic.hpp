// Randomized search for tolerant partitions and the derandomized adversary:
// the attack enumerates all r! half-space labelings and certifies the one
// with the fewest removals instead of sampling.
#pragma once

#include "tvt/config.hpp"
#include "tvt/lift.hpp"
#include "tvt/rng.hpp"
#include "tvt/splits.hpp"
#include "tvt/tolerance.hpp"

#include <cstdint>
#include <vector>

namespace tvt {

// Independent uniform permutation per class, streams derived by class index
// so parallel and serial draws agree.
ColorfulChoice random_colorful_choice(const Configuration& config, SplitRng rng);

struct SearchReport {
  long long trials_attempted = 0;
  std::vector<int> per_trial_tolerance;
  bool found = false;         // reached the target tolerance
  ColorfulPartition best_partition;
  ToleranceReport best_report;
  std::uint64_t seed = 0;
};

// Samples random colorful choices, converts each to a partition and scores
// it with the exact tolerance oracle; stops at the first partition reaching
// `target_tolerance` or after `trials`. Reproducible from the seed.
SearchReport search_tolerant_partition(const Configuration& config,
                                       int target_tolerance, long long trials,
                                       std::uint64_t seed,
                                       const ToleranceOptions& opts = {});

struct AttackReport {
  std::vector<int> labeling;            // half-space index per label position
  std::vector<int> removed_classes;     // ascending
  std::vector<int> removed_unsplittable;
  bool broken_verified = false;
  // Exact average over all r! labelings of the number of removals;
  // equals (N - f) + f (1 - 1/r!) with f the certificate's split count.
  Rational expected_removals;
};

// Enumerates all r! labelings of the certificate's family; for each, removes
// the classes the family cannot split plus every split class with a matched
// point outside its labeled part, and keeps the labeling minimizing removals
// (ties to the lexicographically least labeling). The result is verified to
// break the partition, with surviving parts inside their labeled half-spaces.
AttackReport adversary_attack(const Configuration& config,
                              const ColorfulPartition& partition,
                              const SplitCertificate& certificate);

struct HitExpectation {
  Rational value;
  bool exact = false;
  long long trials = 0;  // Monte Carlo only
};

struct HitMode {
  enum Kind { Exact, MonteCarlo } kind = Exact;
  long long trials = 0;
  std::uint64_t seed = 0;
};

// Probability that a uniform random colorful choice of the class's r-block
// meets the half-space H through the origin. Exact mode averages over all
// r! choices; always at least the fixed-point probability p_r, and exactly 1
// when the pushdown of H's complement cannot split the class.
HitExpectation estimate_hit_expectation(const std::vector<Point>& class_points,
                                        const HalfSpace& h, const HitMode& mode);

}  // namespace tvt
