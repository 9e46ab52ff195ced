// Colored point configurations and colorful partitions, the shared inputs of
// the split, tolerance, and search machinery.
#pragma once

#include "tvt/rational.hpp"

#include <cstdint>
#include <vector>

namespace tvt {

// N color classes of exactly r points each in Q^d.
struct Configuration {
  int d = 0;
  int r = 0;
  std::vector<std::vector<Point>> classes;

  int count() const { return static_cast<int>(classes.size()); }
  void validate() const;
  std::vector<Point> all_points() const;
};

// Per class, a permutation sending the class's i-th point to a part index;
// each part therefore receives exactly one point of every class.
struct ColorfulPartition {
  std::vector<std::vector<int>> assignment;

  void validate(const Configuration& config) const;
};

bool is_permutation(const std::vector<int>& sigma, int n);

// Points of each part, restricted to classes outside `removed_mask`
// (bit c set = class c removed).
std::vector<std::vector<Point>> partition_parts(const Configuration& config,
                                                const ColorfulPartition& partition,
                                                std::uint64_t removed_mask = 0);

}  // namespace tvt
