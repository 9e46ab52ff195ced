#include "tvt/rng.hpp"

namespace tvt {

namespace {
constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}
}  // namespace

std::uint64_t SplitRng::next_u64() {
  state_ += kGamma;
  return mix(state_);
}

std::uint64_t SplitRng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("below(0)");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = next_u64();
  } while (x >= limit);
  return x % bound;
}

long long SplitRng::range(long long lo, long long hi) {
  if (lo > hi) throw std::invalid_argument("range: lo > hi");
  const std::uint64_t span =
      static_cast<std::uint64_t>(hi - lo) + 1;  // hi-lo < 2^63 in practice
  return lo + static_cast<long long>(below(span));
}

SplitRng SplitRng::child(std::uint64_t key) const {
  return SplitRng(mix(state_ ^ (key * kGamma + 0x243F6A8885A308D3ull)));
}

Rational SplitRng::small_rational(long long max_num, long long den) {
  return make_rational(range(-max_num, max_num), den);
}

std::vector<int> SplitRng::permutation(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(below(static_cast<std::uint64_t>(i) + 1));
    std::swap(p[i], p[j]);
  }
  return p;
}

}  // namespace tvt
