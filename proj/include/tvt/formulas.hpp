// Exact permutation-probability constants and the closed-form tolerance
// bound: fixed-point probabilities, 0/1 hit matrices and their extremal
// minimisers, and certified sqrt/log interval evaluation.
#pragma once

#include "tvt/rational.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace tvt {

// Derangement count D_n via the recurrence D_n = (n-1)(D_{n-1} + D_{n-2}).
Integer derangements(int n);

// Probability that a uniform permutation of r elements has a fixed point.
Rational fixed_point_probability(int r);

// The same constant by inclusion-exclusion, 1 - sum (-1)^k / k!.
Rational fixed_point_probability_inclusion_exclusion(int r);

// r x r 0/1 matrix with the two structural conditions: every column holds a
// one, and some d+1 rows already cover all columns.
struct HitMatrix {
  int r = 0;
  std::vector<std::vector<int>> entries;
  std::vector<int> cover_rows;  // witness for the row-cover condition

  bool every_column_covered() const;
  // Finds (and stores) at most d+1 rows covering all columns; false if none.
  bool find_cover_rows(int d);
  std::vector<int> row_counts() const;  // ones per row
};

// The minimising shape: a single one per column, ones confined to the first
// d+1 rows, row counts floor(r/(d+1)) or ceil(r/(d+1)), larger counts first.
HitMatrix extremal_matrix(int r, int d);

enum class HitProbabilityMode { Enumerate, Rook };

// Probability that a uniform permutation sigma meets a one at some
// (i, sigma(i)). Enumerate averages the indicator over all r! permutations
// (r <= 10); Rook requires at most one 1 per column and evaluates
// 1 - [sum_k (-1)^k e_k(row counts) (r-k)!] / r! via elementary symmetric
// polynomials. The two agree wherever both apply.
Rational hit_probability(const HitMatrix& matrix, HitProbabilityMode mode);

// Minimal hit probability over the structural matrix class for r > d+1,
// attained at the extremal matrix.
Rational min_column_hit_probability(int r, int d);

// Complementary avoidance probability of the extremal matrix,
// 1 - min_column_hit_probability.
Rational extremal_avoidance_probability(int r, int d);

struct MatrixSearchResult {
  Rational minimum;
  HitMatrix argmin;
  bool exhaustive = false;
  Integer matrices_checked;
};

// Minimum of hit_probability over all matrices satisfying both structural
// conditions: exhaustive for r <= 4 (2^(r^2) candidates), seeded random
// search beyond, flagged accordingly.
MatrixSearchResult min_hit_over_valid_matrices(int r, int d,
                                               std::uint64_t seed = 0,
                                               long long random_trials = 20000);

// Outward-rounded rational bounds, lo <= value <= hi, at 64 fractional bits.
struct Interval {
  Rational lo, hi;
};

Interval ln_interval(const Rational& x);    // x > 1
Interval sqrt_interval(const Rational& x);  // x >= 0

struct BoundInputs {
  long long N = 0;
  int r = 0;
  int d = 0;
  long long f = 0;  // split capacity
};

struct ToleranceBound {
  long long t = 0;          // floor of a certified lower bound on the true value
  Rational linear_part;     // N - (1-c) f - 1, exact
  Interval root_term;       // sqrt((d+1)(r-1) f ln(N r^2) / 2)
  Rational constant;        // c = fixed-point probability or the matrix minimum
};

// Evaluates N - (1-c) f - sqrt((d+1)(r-1) f ln(N r^2) / 2) - 1 with
// c = fixed_point_probability(r) when r <= d+1 and the matrix minimum
// otherwise. The root term uses its certified upper bound, so the returned
// t is always a valid choice (possibly negative, meaning no guarantee).
ToleranceBound tolerance_bound(const BoundInputs& inputs);

}  // namespace tvt
