#include "tvt/lp.hpp"

#include "helpers.hpp"
#include "tvt/rng.hpp"

#include <doctest.h>

using namespace tvt;
using tvt::test::q;

namespace {

LinearRow row(std::vector<long long> coeffs, Rel rel, long long rhs,
              long long den = 1) {
  LinearRow r;
  for (long long c : coeffs) r.coeffs.push_back(Rational(c));
  r.rel = rel;
  r.rhs = q(rhs, den);
  return r;
}

}  // namespace

TEST_CASE("unit interval is feasible with a verified witness") {
  const std::vector<LinearRow> rows{row({1}, Rel::Ge, 0), row({1}, Rel::Le, 1)};
  const auto res = lp_feasible(rows, 1);
  REQUIRE(res.feasible());
  CHECK(satisfies(rows, res.witness));
}

TEST_CASE("contradictory strict pair is infeasible with certificate") {
  const std::vector<LinearRow> rows{row({1}, Rel::Gt, 0), row({1}, Rel::Lt, 0)};
  const auto res = lp_feasible(rows, 1, true);
  REQUIRE(!res.feasible());
  CHECK(valid_infeasibility_certificate(rows, res.certificate));
}

TEST_CASE("two-variable system with equality and a strict row") {
  const std::vector<LinearRow> rows{
      row({1, 1}, Rel::Eq, 1), row({1, 0}, Rel::Ge, 0), row({0, 1}, Rel::Ge, 0),
      row({1, -1}, Rel::Gt, 0)};
  const auto res = lp_feasible(rows, 2);
  REQUIRE(res.feasible());
  CHECK(res.witness[0] + res.witness[1] == 1);
  CHECK(res.witness[0] > res.witness[1]);
}

TEST_CASE("boundary-only systems are strictly infeasible") {
  // x >= 1 and x <= 1 pin x = 1, so x > 1 fails while x >= 1 holds.
  const std::vector<LinearRow> weak{row({1}, Rel::Ge, 1), row({1}, Rel::Le, 1)};
  CHECK(lp_feasible(weak, 1).feasible());
  const std::vector<LinearRow> strict{row({1}, Rel::Gt, 1), row({1}, Rel::Le, 1)};
  const auto res = lp_feasible(strict, 1, true);
  CHECK(!res.feasible());
  CHECK(valid_infeasibility_certificate(strict, res.certificate));
}

TEST_CASE("unbounded feasible region with strict rows") {
  const std::vector<LinearRow> rows{row({1, 0}, Rel::Gt, 5), row({0, 1}, Rel::Gt, 7)};
  const auto res = lp_feasible(rows, 2);
  REQUIRE(res.feasible());
  CHECK(res.witness[0] > 5);
  CHECK(res.witness[1] > 7);
}

TEST_CASE("dimension mismatch is rejected") {
  std::vector<LinearRow> rows{row({1, 2}, Rel::Ge, 0), row({1}, Rel::Ge, 0)};
  CHECK_THROWS_AS(lp_feasible(rows, 2), std::invalid_argument);
  CHECK_THROWS_AS(lp_feasible({}, 1), std::invalid_argument);
}

TEST_CASE("random systems: witnesses verify, refutations certify") {
  SplitRng rng(20240811);
  int feasible_count = 0, infeasible_count = 0;
  for (int trial = 0; trial < 150; ++trial) {
    SplitRng stream = rng.child(trial);
    const int dim = 1 + static_cast<int>(stream.below(3));
    const int m = 1 + static_cast<int>(stream.below(5));
    std::vector<LinearRow> rows;
    for (int i = 0; i < m; ++i) {
      LinearRow r;
      for (int j = 0; j < dim; ++j)
        r.coeffs.push_back(q(stream.range(-4, 4)));
      const int rel = static_cast<int>(stream.below(5));
      r.rel = rel == 0   ? Rel::Ge
              : rel == 1 ? Rel::Le
              : rel == 2 ? Rel::Gt
              : rel == 3 ? Rel::Lt
                         : Rel::Eq;
      r.rhs = q(stream.range(-4, 4));
      rows.push_back(std::move(r));
    }
    const auto res = lp_feasible(rows, dim, true);
    if (res.feasible()) {
      ++feasible_count;
      CHECK(satisfies(rows, res.witness));
    } else {
      ++infeasible_count;
      CHECK(valid_infeasibility_certificate(rows, res.certificate));
    }
  }
  CHECK(feasible_count > 0);
  CHECK(infeasible_count > 0);
}
