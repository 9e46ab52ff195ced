#include "tvt/tolerance.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace tvt {

bool is_tverberg(const Configuration& config, const ColorfulPartition& partition,
                 std::uint64_t removed_mask) {
  const auto parts = partition_parts(config, partition, removed_mask);
  return convex_hulls_intersect(parts).intersect();
}

namespace {

// Shared evaluation cache keyed by the surviving class set.
struct BreakOracle {
  const Configuration& config;
  const ColorfulPartition& partition;
  std::map<std::uint64_t, bool> cache;
  long long evaluations = 0;

  bool broken(std::uint64_t removed_mask) {
    const auto it = cache.find(removed_mask);
    if (it != cache.end()) return it->second;
    ++evaluations;
    const bool value = !is_tverberg(config, partition, removed_mask);
    cache.emplace(removed_mask, value);
    return value;
  }
};

}  // namespace

ToleranceReport partition_tolerance(const Configuration& config,
                                    const ColorfulPartition& partition,
                                    const ToleranceOptions& opts) {
  config.validate();
  partition.validate(config);
  const int N = config.count();
  if (N > 63) throw std::invalid_argument("tolerance search limited to 63 classes");

  BreakOracle oracle{config, partition, {}, 0};
  ToleranceReport report;

  for (int k = 0; k <= N; ++k) {
    std::vector<int> subset;
    std::optional<std::vector<int>> breaker;
    std::function<bool(int)> search = [&](int start) {
      if (static_cast<int>(subset.size()) == k) {
        if (oracle.evaluations >= opts.subset_budget) return true;  // abort
        std::uint64_t mask = 0;
        for (int c : subset) mask |= std::uint64_t(1) << c;
        if (oracle.broken(mask)) {
          breaker = subset;
          return true;
        }
        return false;
      }
      for (int c = start; c < N; ++c) {
        subset.push_back(c);
        if (search(c + 1)) return true;
        subset.pop_back();
      }
      return false;
    };
    const bool stopped = search(0);
    if (breaker) {
      report.tolerance = k - 1;
      report.break_set = *breaker;
      if (opts.want_certificate) {
        std::uint64_t mask = 0;
        for (int c : *breaker) mask |= std::uint64_t(1) << c;
        const auto parts = partition_parts(config, partition, mask);
        bool empty_part = false;
        for (const auto& part : parts) empty_part |= part.empty();
        if (!empty_part) {
          const auto res = convex_hulls_intersect(parts, true);
          if (res.intersect())
            throw InternalError("break set fails to break on re-evaluation");
          report.disjointness_certificate = res.certificate;
        }
      }
      return report;
    }
    if (stopped) {
      // Budget hit inside level k; levels below k were searched exhaustively,
      // so k-1 is a certified lower bound on the tolerance.
      report.status = ToleranceReport::Status::BudgetExhausted;
      report.tolerance = k - 1;
      return report;
    }
  }
  throw InternalError("removing every class failed to break the partition");
}

namespace {

// Enumerate permutations of {0..r-1} in lexicographic order.
std::vector<std::vector<int>> all_permutations(int r) {
  std::vector<int> p(r);
  for (int i = 0; i < r; ++i) p[i] = i;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

std::pair<ColorfulPartition, ToleranceReport> best_partition_tolerance(
    const Configuration& config, const ToleranceOptions& opts) {
  config.validate();
  const int N = config.count();
  const auto perms = all_permutations(config.r);
  const std::size_t base = perms.size();

  Integer space = 1;
  for (int c = 1; c < N; ++c) space *= static_cast<long long>(base);
  if (space > opts.subset_budget)
    throw std::invalid_argument("partition space exceeds the search budget");

  ColorfulPartition best;
  ToleranceReport best_report;
  bool have_best = false;

  ColorfulPartition current;
  current.assignment.assign(N, perms.front());
  std::function<void(int)> visit = [&](int c) {
    if (c == N) {
      auto report = partition_tolerance(config, current, opts);
      if (!have_best || report.tolerance > best_report.tolerance) {
        best = current;
        best_report = report;
        have_best = true;
      }
      return;
    }
    for (const auto& perm : perms) {
      current.assignment[c] = perm;
      visit(c + 1);
    }
  };
  // Class 0 stays the identity: a global relabel of parts maps any partition
  // to one of this form without changing its tolerance.
  visit(1);
  return {best, best_report};
}

BreakBoundReport hyperplane_break_bound(const Configuration& config,
                                        const ColorfulPartition& partition) {
  const auto [n_split, cut] = max_pairs_split_with_witness(config);
  return hyperplane_break_bound(config, partition, cut, n_split);
}

BreakBoundReport hyperplane_break_bound(const Configuration& config,
                                        const ColorfulPartition& partition,
                                        const HalfSpace& cut, int n_split) {
  config.validate();
  partition.validate(config);
  if (config.r != 2)
    throw std::invalid_argument("hyperplane break bound requires r = 2");
  const int N = config.count();

  BreakBoundReport report;
  report.max_split_pairs = n_split;

  // For each orientation of the cut, remove unsplit pairs plus split pairs
  // whose assignment disagrees; keep the cheaper orientation.
  std::vector<int> removed_a, removed_b;
  for (int c = 0; c < N; ++c) {
    const int side0 = cut.side(config.classes[c][0]);
    const int side1 = cut.side(config.classes[c][1]);
    if (side0 * side1 != -1) {  // unsplit pair
      removed_a.push_back(c);
      removed_b.push_back(c);
      continue;
    }
    const int above_point = side0 > 0 ? 0 : 1;
    const int above_part = partition.assignment[c][above_point];
    // Orientation A wants the upper side in part 0, orientation B in part 1.
    if (above_part != 0) removed_a.push_back(c);
    if (above_part != 1) removed_b.push_back(c);
  }
  report.removed = removed_a.size() <= removed_b.size() ? removed_a : removed_b;

  const int bound = N - (n_split + 1) / 2;
  if (static_cast<int>(report.removed.size()) > bound)
    throw InternalError("break bound construction exceeded N - ceil(N'/2)");

  std::uint64_t mask = 0;
  for (int c : report.removed) mask |= std::uint64_t(1) << c;
  report.verified_broken = !is_tverberg(config, partition, mask);
  if (!report.verified_broken)
    throw InternalError("break bound removal failed to break the partition");
  return report;
}

}  // namespace tvt
