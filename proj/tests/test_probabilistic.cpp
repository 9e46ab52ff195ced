#include "tvt/probabilistic.hpp"

#include "helpers.hpp"
#include "tvt/formulas.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace tvt;
using tvt::test::pt;
using tvt::test::q;

namespace {

Configuration nested_pairs(int N) {
  Configuration config;
  config.d = 1;
  config.r = 2;
  for (int i = 1; i <= N; ++i)
    config.classes.push_back({pt({-i}), pt({i})});
  return config;
}

}  // namespace

TEST_CASE("random choices are deterministic under a fixed seed") {
  const auto config = nested_pairs(4);
  const auto a = random_colorful_choice(config, SplitRng(42));
  const auto b = random_colorful_choice(config, SplitRng(42));
  CHECK(a.selection == b.selection);
  const auto c = random_colorful_choice(config, SplitRng(43));
  CHECK(a.selection != c.selection);  // overwhelmingly likely and fixed here
}

TEST_CASE("r=2 choices are balanced within three sigmas") {
  Configuration config;
  config.d = 1;
  config.r = 2;
  config.classes = {{pt({-1}), pt({1})}};
  int identity = 0;
  const int draws = 6000;
  for (int t = 0; t < draws; ++t) {
    const auto choice = random_colorful_choice(config, SplitRng(1000 + t));
    if (choice.selection[0] == std::vector<int>{0, 1}) ++identity;
  }
  // Binomial(6000, 1/2): three sigmas is about 116.
  CHECK(identity > 3000 - 120);
  CHECK(identity < 3000 + 120);
}

TEST_CASE("r=3 choices hit all six permutations") {
  Configuration config;
  config.d = 2;
  config.r = 3;
  config.classes = {{pt({0, 0}), pt({1, 0}), pt({0, 1})}};
  std::set<std::vector<int>> seen;
  for (int t = 0; t < 200; ++t)
    seen.insert(random_colorful_choice(config, SplitRng(t)).selection[0]);
  CHECK(seen.size() == 6);
}

TEST_CASE("search reaches the best attainable tolerance of nested pairs") {
  // The alternating partition of six nested pairs has tolerance 2, and the
  // break bound caps every partition there (N - ceil(N'/2) = 3 removals
  // always break), so 2 is the search ceiling.
  const auto config = nested_pairs(6);
  const auto found = search_tolerant_partition(config, 2, 200, 7);
  CHECK(found.found);
  CHECK(found.best_report.tolerance == 2);
  CHECK(found.trials_attempted <= 200);

  const auto unreachable = search_tolerant_partition(config, 3, 100, 7);
  CHECK(!unreachable.found);
  CHECK(unreachable.best_report.tolerance <= 2);
  CHECK(unreachable.trials_attempted == 100);
}

TEST_CASE("search on a perfect split never reaches past the ceiling") {
  const auto [config, family] = generate_perfect_split(4, 2, 2, 77);
  const auto report = search_tolerant_partition(config, 3, 64, 5);
  CHECK(!report.found);
  CHECK(report.best_report.tolerance <= 2);
  CHECK(report.trials_attempted == 64);
}

TEST_CASE("search with target zero succeeds when a Tverberg partition exists") {
  const auto config = nested_pairs(3);
  const auto report = search_tolerant_partition(config, 0, 100, 11);
  CHECK(report.found);
}

TEST_CASE("search reports are reproducible from the seed") {
  const auto config = nested_pairs(5);
  const auto a = search_tolerant_partition(config, 4, 50, 123);
  const auto b = search_tolerant_partition(config, 4, 50, 123);
  CHECK(a.trials_attempted == b.trials_attempted);
  CHECK(a.per_trial_tolerance == b.per_trial_tolerance);
  CHECK(a.best_partition.assignment == b.best_partition.assignment);
  CHECK(a.found == b.found);
}

TEST_CASE("adversary attack on a perfect split removes at most ceil(N/2) classes") {
  const auto [config, family] = generate_perfect_split(4, 2, 2, 91);
  const auto capacity = split_capacity(config, CapacityMode{});
  REQUIRE(capacity.f == 4);

  ColorfulPartition partition;
  partition.assignment.assign(4, {0, 1});
  const auto report = adversary_attack(config, partition, capacity.certificate);
  CHECK(report.broken_verified);
  CHECK(static_cast<int>(report.removed_classes.size()) <= 2);
  CHECK(report.removed_unsplittable.empty());
  CHECK(report.expected_removals == Rational(4) * (1 - make_rational(1, 2)));
}

TEST_CASE("attack removals stay within N - floor(f / r!) and break every time") {
  SplitRng rng(113);
  for (int trial = 0; trial < 12; ++trial) {
    SplitRng stream = rng.child(trial);
    Configuration config;
    config.d = 1 + static_cast<int>(stream.below(2));
    config.r = 2;
    const int N = 2 + static_cast<int>(stream.below(3));
    for (int c = 0; c < N; ++c) {
      std::vector<Point> cls;
      for (int j = 0; j < 2; ++j) {
        Point p(config.d);
        for (int k = 0; k < config.d; ++k) p[k] = q(stream.range(-14, 14), 3);
        cls.push_back(std::move(p));
      }
      config.classes.push_back(std::move(cls));
    }
    const auto capacity = split_capacity(config, CapacityMode{});
    REQUIRE(capacity.status == CapacityResult::Status::Ok);
    const int f = capacity.f;

    ColorfulPartition partition;
    for (int c = 0; c < N; ++c)
      partition.assignment.push_back(stream.below(2) ? std::vector<int>{1, 0}
                                                     : std::vector<int>{0, 1});
    const auto report = adversary_attack(config, partition, capacity.certificate);
    CHECK(report.broken_verified);
    CHECK(static_cast<int>(report.removed_classes.size()) <= N - f / 2);
    // The chosen labeling never removes more than the labeling average.
    CHECK(Rational(static_cast<long long>(report.removed_classes.size())) <=
          report.expected_removals);
    CHECK(report.expected_removals ==
          Rational(N - f) + Rational(f) * (1 - make_rational(1, 2)));
  }
}

TEST_CASE("attack rejects invalid certificates") {
  const auto [config, family] = generate_perfect_split(3, 2, 2, 15);
  const auto capacity = split_capacity(config, CapacityMode{});
  ColorfulPartition partition;
  partition.assignment.assign(3, {0, 1});

  SplitCertificate bad = capacity.certificate;
  bad.family.halfspaces[1] = bad.family.halfspaces[0];  // nonempty intersection
  CHECK_THROWS_AS(adversary_attack(config, partition, bad), std::invalid_argument);
}

TEST_CASE("hit expectation is exactly one when the pushdown cannot split") {
  SplitRng rng(127);
  int verified_one = 0, verified_lower = 0;
  for (int trial = 0; trial < 300 && (verified_one < 10 || verified_lower < 10);
       ++trial) {
    SplitRng stream = rng.child(trial);
    const int r = 2 + static_cast<int>(stream.below(2));
    const int d = 2;
    std::vector<Point> cls;
    for (int i = 0; i < r; ++i) {
      Point p(d);
      for (int k = 0; k < d; ++k) p[k] = q(stream.range(-9, 9), 2);
      cls.push_back(std::move(p));
    }
    HalfSpace h;
    h.offset = 0;
    h.open = false;  // closed half-space containing the origin
    h.normal.assign(static_cast<std::size_t>(r - 1) * (d + 1), Rational(0));
    for (auto& v : h.normal) v = q(stream.range(-9, 9), 2);

    HalfSpaceFamily pushed;
    try {
      pushed = pushdown_halfspace(h.complement(), r, d);
    } catch (const std::invalid_argument&) {
      continue;
    }
    const auto expectation = estimate_hit_expectation(cls, h, HitMode{});
    REQUIRE(expectation.exact);
    CHECK(expectation.value >= fixed_point_probability(r));
    CHECK(expectation.value <= 1);
    const bool splits = can_split(pushed, cls).yes;
    if (!splits) {
      CHECK(expectation.value == 1);
      ++verified_one;
    } else {
      CHECK(expectation.value < 1);
      ++verified_lower;
    }
  }
  CHECK(verified_one >= 10);
  CHECK(verified_lower >= 10);
}

TEST_CASE("hit expectation in the r > d+1 regime respects the matrix minimum") {
  SplitRng rng(131);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 25; ++trial) {
    SplitRng stream = rng.child(trial);
    const int r = 3, d = 1;
    std::vector<Point> cls;
    for (int i = 0; i < r; ++i) cls.push_back({q(stream.range(-9, 9), 2)});
    HalfSpace h;
    h.offset = 0;
    h.open = false;
    h.normal.assign(static_cast<std::size_t>(r - 1) * (d + 1), Rational(0));
    for (auto& v : h.normal) v = q(stream.range(-9, 9), 2);
    if (is_zero(h.normal)) continue;
    const auto expectation = estimate_hit_expectation(cls, h, HitMode{});
    CHECK(expectation.value >= min_column_hit_probability(r, d));
    CHECK(expectation.value <= 1);
    ++checked;
  }
  CHECK(checked >= 25);
}

TEST_CASE("monte carlo hit estimates are reproducible and close") {
  const std::vector<Point> cls{pt({0, 0}), pt({3, 1}), pt({1, 4})};
  HalfSpace h;  // r = 3, d = 2: lifted dimension 6
  h.offset = 0;
  h.open = false;
  h.normal = {q(1), q(2), q(-1), q(1), q(0), q(1)};
  const auto exact = estimate_hit_expectation(cls, h, HitMode{});
  HitMode mc;
  mc.kind = HitMode::MonteCarlo;
  mc.trials = 4000;
  mc.seed = 9;
  const auto est1 = estimate_hit_expectation(cls, h, mc);
  const auto est2 = estimate_hit_expectation(cls, h, mc);
  CHECK(est1.value == est2.value);
  Rational gap = est1.value - exact.value;
  if (gap < 0) gap = -gap;
  CHECK(gap < make_rational(1, 10));
}
