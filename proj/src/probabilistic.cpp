#include "tvt/probabilistic.hpp"

#include <algorithm>

namespace tvt {

ColorfulChoice random_colorful_choice(const Configuration& config, SplitRng rng) {
  config.validate();
  ColorfulChoice choice;
  choice.selection.reserve(config.classes.size());
  for (int c = 0; c < config.count(); ++c) {
    SplitRng stream = rng.child(static_cast<std::uint64_t>(c));
    choice.selection.push_back(stream.permutation(config.r));
  }
  return choice;
}

SearchReport search_tolerant_partition(const Configuration& config,
                                       int target_tolerance, long long trials,
                                       std::uint64_t seed,
                                       const ToleranceOptions& opts) {
  config.validate();
  SearchReport report;
  report.seed = seed;
  SplitRng master(seed);

  int best = -2;
  long long best_trial = -1;
  for (long long trial = 0; trial < trials; ++trial) {
    const auto choice =
        random_colorful_choice(config, master.child(static_cast<std::uint64_t>(trial)));
    const auto partition = choice_to_partition(choice, config);
    const auto tol = partition_tolerance(config, partition, opts);
    ++report.trials_attempted;
    report.per_trial_tolerance.push_back(tol.tolerance);
    // Best by tolerance, then earliest trial: an order-independent reduction.
    if (tol.tolerance > best) {
      best = tol.tolerance;
      best_trial = trial;
      report.best_partition = partition;
      report.best_report = tol;
    }
    if (tol.tolerance >= target_tolerance) {
      report.found = true;
      break;
    }
  }
  (void)best_trial;
  return report;
}

AttackReport adversary_attack(const Configuration& config,
                              const ColorfulPartition& partition,
                              const SplitCertificate& certificate) {
  config.validate();
  partition.validate(config);
  certificate.validate(config);  // throws on nonempty intersection / bad matching

  const int N = config.count();
  const int r = config.r;
  const auto& split_classes = certificate.split_class_indices;

  std::vector<bool> is_split(N, false);
  for (int c : split_classes) is_split[c] = true;

  // For split class c, the half-space index k is matched to exactly one
  // point; tau[c][k] = the part holding that point. Under labeling pi
  // (label i -> half-space pi[i]) the class survives iff tau[pi[i]] == i
  // for every i, i.e. pi is the inverse of tau.
  std::vector<std::vector<int>> tau(N);
  for (std::size_t k = 0; k < split_classes.size(); ++k) {
    const int c = split_classes[k];
    tau[c].assign(r, -1);
    for (int i = 0; i < r; ++i)
      tau[c][certificate.matchings[k][i]] = partition.assignment[c][i];
  }

  std::vector<int> labeling(r);
  for (int i = 0; i < r; ++i) labeling[i] = i;
  std::vector<int> best_labeling;
  std::vector<int> best_removed;
  Integer total_removed = 0;
  do {
    std::vector<int> removed;
    for (int c = 0; c < N; ++c) {
      if (!is_split[c]) {
        removed.push_back(c);
        continue;
      }
      bool survives = true;
      for (int i = 0; i < r && survives; ++i)
        survives = tau[c][labeling[i]] == i;
      if (!survives) removed.push_back(c);
    }
    total_removed += static_cast<long long>(removed.size());
    if (best_labeling.empty() || removed.size() < best_removed.size()) {
      best_labeling = labeling;
      best_removed = std::move(removed);
    }
  } while (std::next_permutation(labeling.begin(), labeling.end()));

  AttackReport report;
  report.labeling = best_labeling;
  report.removed_classes = best_removed;
  for (int c = 0; c < N; ++c)
    if (!is_split[c]) report.removed_unsplittable.push_back(c);
  report.expected_removals = Rational(total_removed) / factorial(r);

  std::uint64_t mask = 0;
  for (int c : report.removed_classes) mask |= std::uint64_t(1) << c;
  report.broken_verified = !is_tverberg(config, partition, mask);
  if (!report.broken_verified)
    throw InternalError("adversary attack failed to break the partition");

  // Containment: every surviving point of part i lies in the half-space
  // labeled i.
  for (int c = 0; c < N; ++c) {
    if ((mask >> c) & 1) continue;
    for (int i = 0; i < r; ++i) {
      const int part = partition.assignment[c][i];
      const auto& h = certificate.family.halfspaces[report.labeling[part]];
      if (!h.contains(config.classes[c][i]))
        throw InternalError("surviving part escapes its labeled half-space");
    }
  }
  return report;
}

HitExpectation estimate_hit_expectation(const std::vector<Point>& class_points,
                                        const HalfSpace& h, const HitMode& mode) {
  if (class_points.empty() || class_points.front().empty())
    throw std::invalid_argument("empty class");
  if (h.offset != 0)
    throw std::invalid_argument("hit expectation needs a half-space through the origin");
  const int r = static_cast<int>(class_points.size());
  if (r < 2) throw std::invalid_argument("class needs at least two points");
  const int d = static_cast<int>(class_points.front().size());
  const auto sv = make_simplex_vectors(r);
  if (h.normal.size() != static_cast<std::size_t>(r - 1) * (d + 1))
    throw std::invalid_argument("half-space dimension is not (r-1)(d+1)");

  // member[i][j]: the lift of point i with simplex vector j lies in H.
  std::vector<std::vector<bool>> member(r, std::vector<bool>(r, false));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      member[i][j] = h.contains(lift(class_points[i], j, sv));

  HitExpectation out;
  if (mode.kind == HitMode::Exact) {
    if (r > 10) throw std::invalid_argument("exact mode limited to r <= 10");
    std::vector<int> sigma(r);
    for (int i = 0; i < r; ++i) sigma[i] = i;
    long long hits = 0, total = 0;
    do {
      ++total;
      for (int i = 0; i < r; ++i) {
        if (member[i][sigma[i]]) {
          ++hits;
          break;
        }
      }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    out.value = Rational(hits) / total;
    out.exact = true;
    return out;
  }

  SplitRng rng(mode.seed);
  long long hits = 0;
  for (long long t = 0; t < mode.trials; ++t) {
    const auto sigma = rng.permutation(r);
    for (int i = 0; i < r; ++i) {
      if (member[i][sigma[i]]) {
        ++hits;
        break;
      }
    }
  }
  out.value = Rational(hits) / std::max<long long>(mode.trials, 1);
  out.trials = mode.trials;
  return out;
}

}  // namespace tvt
