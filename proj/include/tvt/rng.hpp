// Seedable, splittable PRNG (SplitMix64). Hand-rolled so that streams are
// bit-identical across platforms and standard library implementations.
#pragma once

#include "tvt/rational.hpp"

#include <cstdint>
#include <vector>

namespace tvt {

class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  // Uniform in [0, bound) by rejection sampling; bound > 0.
  std::uint64_t below(std::uint64_t bound);

  // Uniform in [lo, hi] inclusive.
  long long range(long long lo, long long hi);

  // Independent stream derived from this generator's seed and a key.
  // Deriving children with distinct keys from the same parent commutes with
  // the order in which the parent is otherwise used.
  SplitRng child(std::uint64_t key) const;

  // Uniform rational num/den with num in [-max_num, max_num].
  Rational small_rational(long long max_num, long long den);

  // Uniform permutation of {0, ..., n-1} (Fisher-Yates).
  std::vector<int> permutation(int n);

 private:
  std::uint64_t state_;
};

}  // namespace tvt
