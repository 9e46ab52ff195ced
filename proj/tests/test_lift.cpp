#include "tvt/lift.hpp"

#include "helpers.hpp"
#include "tvt/rng.hpp"

#include <doctest.h>

#include <functional>

using namespace tvt;
using tvt::test::pt;
using tvt::test::q;

namespace {

Point random_point(SplitRng& rng, int d) {
  Point p(d);
  for (int k = 0; k < d; ++k) p[k] = q(rng.range(-30, 30), 7);
  return p;
}

Configuration random_config(SplitRng& rng, int N, int r, int d) {
  Configuration config;
  config.d = d;
  config.r = r;
  for (int c = 0; c < N; ++c) {
    std::vector<Point> cls;
    for (int j = 0; j < r; ++j) cls.push_back(random_point(rng, d));
    config.classes.push_back(std::move(cls));
  }
  return config;
}

}  // namespace

namespace {

Rational determinant(std::vector<Vec> m) {
  Rational out = 1;
  for (std::size_t col = 0; col < m.size(); ++col) {
    std::size_t pivot = col;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      out = -out;
    }
    out *= m[col][col];
    for (std::size_t i = col + 1; i < m.size(); ++i) {
      if (m[i][col] == 0) continue;
      const Rational f = m[i][col] / m[col][col];
      for (std::size_t j = col; j < m.size(); ++j) m[i][j] -= f * m[col][j];
    }
  }
  return out;
}

}  // namespace

TEST_CASE("simplex vectors sum to zero and every proper subset is independent") {
  for (int r = 2; r <= 6; ++r) {
    const auto sv = make_simplex_vectors(r);
    Vec sum(r - 1, Rational(0));
    for (const auto& v : sv.vectors)
      for (int k = 0; k + 1 < r; ++k) sum[k] += v[k];
    CHECK(is_zero(sum));
    // Dropping any vector leaves r-1 vectors of full rank in Q^{r-1}.
    for (int skip = 0; skip < r; ++skip) {
      std::vector<Vec> rest;
      for (int i = 0; i < r; ++i)
        if (i != skip) rest.push_back(sv.vectors[i]);
      CHECK(determinant(rest) != 0);
    }
  }
  CHECK_THROWS_AS(make_simplex_vectors(1), std::invalid_argument);
}

TEST_CASE("pair functionals separate their two vectors") {
  for (int r = 2; r <= 5; ++r) {
    const auto sv = make_simplex_vectors(r);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) {
        if (i == j) continue;
        const Vec u = sv.pair_functional(i, j);
        for (int k = 0; k < r; ++k) {
          const Rational v = dot(u, sv.vectors[k]);
          if (k == i) CHECK(v == 1);
          else if (k == j) CHECK(v == -1);
          else CHECK(v == 0);
        }
      }
    }
  }
}

TEST_CASE("lift in the r=2, d=1 base case") {
  const auto sv = make_simplex_vectors(2);
  CHECK(lift(pt({3}), 0, sv) == pt({3, 1}));
  CHECK(lift(pt({3}), 1, sv) == pt({-3, -1}));
  CHECK(project(pt({3, 1}), 0, sv, 1) == pt({3}));
  CHECK(project(pt({3, 1}), 1, sv, 1) == pt({-3}));
}

TEST_CASE("lift of (1,2) with r=3 puts the appended row in the right slot") {
  const auto sv = make_simplex_vectors(3);
  // Row-major (r-1) x (d+1): first row (1,2,1), second row zero.
  CHECK(lift(pt({1, 2}), 0, sv) == pt({1, 2, 1, 0, 0, 0}));
  CHECK(lift(pt({1, 2}), 1, sv) == pt({0, 0, 0, 1, 2, 1}));
  CHECK(lift(pt({1, 2}), 2, sv) == pt({-1, -2, -1, -1, -2, -1}));
}

TEST_CASE("lifts sum to zero and project is a left inverse") {
  SplitRng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    SplitRng stream = rng.child(trial);
    const int r = 2 + static_cast<int>(stream.below(4));
    const int d = 1 + static_cast<int>(stream.below(3));
    const auto sv = make_simplex_vectors(r);
    const Point x = random_point(stream, d);
    Point sum(static_cast<std::size_t>(r - 1) * (d + 1), Rational(0));
    for (int i = 0; i < r; ++i) {
      const Point y = lift(x, i, sv);
      CHECK(project(y, i, sv, d) == x);
      for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += y[k];
    }
    CHECK(is_zero(sum));
  }
}

TEST_CASE("r-block rows capture the origin and columns live in the lift image") {
  SplitRng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    SplitRng stream = rng.child(trial);
    const int r = 2 + static_cast<int>(stream.below(3));
    const int d = 1 + static_cast<int>(stream.below(2));
    const auto sv = make_simplex_vectors(r);
    std::vector<Point> cls;
    for (int i = 0; i < r; ++i) cls.push_back(random_point(stream, d));
    const auto block = build_r_block(cls, 0, sv);
    for (int i = 0; i < r; ++i) CHECK(captures_origin(block.grid[i]));
    for (int j = 0; j < r; ++j) {
      for (int i = 0; i < r; ++i) {
        const Point back = project(block.grid[i][j], j, sv, d);
        CHECK(lift(back, j, sv) == block.grid[i][j]);  // membership in U_j
      }
    }
  }
  const auto sv = make_simplex_vectors(2);
  CHECK_THROWS_AS(build_r_block({pt({0})}, 0, sv), std::invalid_argument);
}

TEST_CASE("r=2 d=1 block on {(0),(1)} matches the hand computation") {
  const auto sv = make_simplex_vectors(2);
  const auto block = build_r_block({pt({0}), pt({1})}, 0, sv);
  CHECK(block.grid[0][0] == pt({0, 1}));
  CHECK(block.grid[0][1] == pt({0, -1}));
  CHECK(block.grid[1][0] == pt({1, 1}));
  CHECK(block.grid[1][1] == pt({-1, -1}));
}

TEST_CASE("choice and partition conversions invert each other") {
  SplitRng rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    SplitRng stream = rng.child(trial);
    const int r = 2 + static_cast<int>(stream.below(3));
    Configuration config = random_config(stream, 3, r, 2);
    ColorfulChoice choice;
    for (int c = 0; c < 3; ++c) choice.selection.push_back(stream.permutation(r));
    const auto partition = choice_to_partition(choice, config);
    const auto back = partition_to_choice(partition, config);
    CHECK(back.selection == choice.selection);
  }
}

TEST_CASE("identity choice collects j-th points into part j") {
  SplitRng rng(3);
  Configuration config = random_config(rng, 2, 3, 2);
  ColorfulChoice identity;
  identity.selection.assign(2, {0, 1, 2});
  const auto parts = partition_parts(config, choice_to_partition(identity, config));
  for (int j = 0; j < 3; ++j) {
    REQUIRE(parts[j].size() == 2);
    CHECK(parts[j][0] == config.classes[0][j]);
    CHECK(parts[j][1] == config.classes[1][j]);
  }
}

TEST_CASE("capture equivalence on known Tverberg and non-Tverberg partitions") {
  // Two singleton parts at distinct points: false on both sides.
  Configuration config;
  config.d = 1;
  config.r = 2;
  config.classes = {{pt({0}), pt({1})}};
  ColorfulPartition partition;
  partition.assignment = {{0, 1}};
  CHECK(!capture_equivalence_check(config, partition));

  // Nested pairs, anti-aligned: both parts' hulls contain 0.
  Configuration nested;
  nested.d = 1;
  nested.r = 2;
  nested.classes = {{pt({-1}), pt({1})}, {pt({-2}), pt({2})}};
  ColorfulPartition anti;
  anti.assignment = {{0, 1}, {1, 0}};
  CHECK(capture_equivalence_check(nested, anti));
}

TEST_CASE("capture equivalence holds across exhaustive small configurations") {
  SplitRng rng(29);
  int checked = 0;
  for (int trial = 0; trial < 50; ++trial) {
    SplitRng stream = rng.child(trial);
    const int r = 2 + static_cast<int>(stream.below(2));
    const int d = 1 + static_cast<int>(stream.below(2));
    const int N = 1 + static_cast<int>(stream.below(3));
    Configuration config = random_config(stream, N, r, d);

    std::vector<std::vector<int>> perms;
    std::vector<int> p(r);
    for (int i = 0; i < r; ++i) p[i] = i;
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    ColorfulPartition partition;
    partition.assignment.assign(N, perms.front());
    std::function<void(int)> visit = [&](int c) {
      if (c == N) {
        capture_equivalence_check(config, partition);  // throws on mismatch
        ++checked;
        return;
      }
      for (const auto& perm : perms) {
        partition.assignment[c] = perm;
        visit(c + 1);
      }
    };
    visit(0);
  }
  CHECK(checked > 200);
}

TEST_CASE("the machinery holds up at the d=6 envelope") {
  SplitRng rng(53);
  const int d = 6;
  // Lift / project identities at r = 7.
  const auto sv = make_simplex_vectors(7);
  const Point x = random_point(rng, d);
  for (int i = 0; i < 7; ++i) CHECK(project(lift(x, i, sv), i, sv, d) == x);

  // Capture equivalence on a random r=2 configuration in Q^6.
  Configuration config = random_config(rng, 3, 2, d);
  ColorfulPartition partition;
  partition.assignment = {{0, 1}, {1, 0}, {0, 1}};
  CHECK_NOTHROW(capture_equivalence_check(config, partition));

  // Pushdown properties in Q^{(r-1)(d+1)} with r = 3.
  HalfSpace h;
  h.offset = 0;
  h.normal.assign(static_cast<std::size_t>(2) * (d + 1), Rational(0));
  for (auto& v : h.normal) v = q(rng.range(-20, 20), 3);
  const auto family = pushdown_halfspace(h, 3, d);
  CHECK(open_intersection_empty(family));
  CHECK(closed_union_covers_space(family));
}

TEST_CASE("pushdown of the r=2, d=1 coordinate half-space") {
  HalfSpace h;
  h.normal = pt({1, 0});
  h.offset = 0;
  const auto family = pushdown_halfspace(h, 2, 1);
  REQUIRE(family.size() == 2);
  CHECK(family.halfspaces[0].normal == pt({1}));
  CHECK(family.halfspaces[0].offset == 0);
  CHECK(family.halfspaces[1].normal == pt({-1}));
  CHECK(family.halfspaces[1].offset == 0);
}

TEST_CASE("pushdown rejects bad inputs") {
  HalfSpace zero;
  zero.normal = pt({0, 0});
  zero.offset = 0;
  CHECK_THROWS_AS(pushdown_halfspace(zero, 2, 1), std::invalid_argument);
  HalfSpace shifted;
  shifted.normal = pt({1, 0});
  shifted.offset = 1;
  CHECK_THROWS_AS(pushdown_halfspace(shifted, 2, 1), std::invalid_argument);
}

TEST_CASE("pushdown families are empty-intersecting with covering closures") {
  SplitRng rng(37);
  int checked = 0;
  for (int trial = 0; checked < 60; ++trial) {
    REQUIRE(trial < 600);
    SplitRng stream = rng.child(trial);
    const int r = 2 + static_cast<int>(stream.below(3));
    const int d = 1 + static_cast<int>(stream.below(3));
    HalfSpace h;
    h.offset = 0;
    h.normal.assign(static_cast<std::size_t>(r - 1) * (d + 1), Rational(0));
    for (auto& v : h.normal) v = q(stream.range(-20, 20), 3);
    HalfSpaceFamily family;
    try {
      family = pushdown_halfspace(h, r, d);
    } catch (const std::invalid_argument&) {
      continue;
    }
    CHECK(open_intersection_empty(family));
    CHECK(closed_union_covers_space(family));
    ++checked;
  }
}

TEST_CASE("membership commutes with pushdown") {
  SplitRng rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    SplitRng stream = rng.child(trial);
    const int r = 2 + static_cast<int>(stream.below(3));
    const int d = 1 + static_cast<int>(stream.below(2));
    const auto sv = make_simplex_vectors(r);
    HalfSpace h;
    h.offset = 0;
    h.normal.assign(static_cast<std::size_t>(r - 1) * (d + 1), Rational(0));
    for (auto& v : h.normal) v = q(stream.range(-20, 20), 3);
    HalfSpaceFamily family;
    try {
      family = pushdown_halfspace(h, r, d);
    } catch (const std::invalid_argument&) {
      continue;
    }
    for (int i = 0; i < r; ++i) {
      const Point x = random_point(stream, d);
      const Point lifted = lift(x, i, sv);
      const bool upstairs = dot(h.normal, lifted) >= 0;  // closed side
      const bool downstairs =
          dot(family.halfspaces[i].normal, x) >= family.halfspaces[i].offset;
      CHECK(upstairs == downstairs);
    }
  }
}
