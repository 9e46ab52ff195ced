#include "tvt/formulas.hpp"

#include "tvt/rng.hpp"

#include <algorithm>
#include <functional>

namespace tvt {

Integer derangements(int n) {
  if (n < 0) throw std::invalid_argument("derangements of negative count");
  Integer prev2 = 1, prev1 = 0;  // D_0, D_1
  if (n == 0) return prev2;
  if (n == 1) return prev1;
  Integer cur = 0;
  for (int k = 2; k <= n; ++k) {
    cur = Integer(k - 1) * (prev1 + prev2);
    prev2 = prev1;
    prev1 = cur;
  }
  return cur;
}

Rational fixed_point_probability(int r) {
  if (r < 1) throw std::invalid_argument("fixed-point probability needs r >= 1");
  return 1 - Rational(derangements(r)) / factorial(r);
}

Rational fixed_point_probability_inclusion_exclusion(int r) {
  if (r < 1) throw std::invalid_argument("fixed-point probability needs r >= 1");
  Rational avoid = 0;
  for (int k = 0; k <= r; ++k) {
    const Rational term = Rational(1) / factorial(k);
    avoid += (k % 2 == 0) ? term : -term;
  }
  return 1 - avoid;
}

bool HitMatrix::every_column_covered() const {
  for (int j = 0; j < r; ++j) {
    bool covered = false;
    for (int i = 0; i < r && !covered; ++i) covered = entries[i][j] != 0;
    if (!covered) return false;
  }
  return true;
}

bool HitMatrix::find_cover_rows(int d) {
  const int limit = std::min(d + 1, r);
  for (int size = 1; size <= limit; ++size) {
    std::vector<int> subset;
    std::function<bool(int)> search = [&](int start) {
      if (static_cast<int>(subset.size()) == size) {
        for (int j = 0; j < r; ++j) {
          bool covered = false;
          for (int i : subset) covered |= entries[i][j] != 0;
          if (!covered) return false;
        }
        return true;
      }
      for (int i = start; i < r; ++i) {
        subset.push_back(i);
        if (search(i + 1)) return true;
        subset.pop_back();
      }
      return false;
    };
    if (search(0)) {
      cover_rows = subset;
      return true;
    }
  }
  cover_rows.clear();
  return false;
}

std::vector<int> HitMatrix::row_counts() const {
  std::vector<int> counts(r, 0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) counts[i] += entries[i][j] != 0;
  return counts;
}

HitMatrix extremal_matrix(int r, int d) {
  if (r <= d + 1)
    throw std::invalid_argument("extremal matrix defined for r > d+1");
  HitMatrix m;
  m.r = r;
  m.entries.assign(r, std::vector<int>(r, 0));
  const int rows = d + 1;
  const int base = r / rows;
  const int extra = r % rows;  // first `extra` rows take one more column
  int col = 0;
  for (int i = 0; i < rows; ++i) {
    const int take = base + (i < extra ? 1 : 0);
    for (int k = 0; k < take; ++k) m.entries[i][col++] = 1;
    m.cover_rows.push_back(i);
  }
  return m;
}

namespace {

Rational hit_probability_enumerate(const HitMatrix& m) {
  if (m.r > 10) throw std::invalid_argument("enumeration limited to r <= 10");
  std::vector<int> sigma(m.r);
  for (int i = 0; i < m.r; ++i) sigma[i] = i;
  long long hits = 0, total = 0;
  do {
    ++total;
    for (int i = 0; i < m.r; ++i) {
      if (m.entries[i][sigma[i]]) {
        ++hits;
        break;
      }
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return Rational(hits) / total;
}

Rational hit_probability_rook(const HitMatrix& m) {
  for (int j = 0; j < m.r; ++j) {
    int ones = 0;
    for (int i = 0; i < m.r; ++i) ones += m.entries[i][j] != 0;
    if (ones > 1)
      throw std::invalid_argument("rook mode needs at most one 1 per column");
  }
  // With at most one 1 per column, k non-attacking rooks on the ones are a
  // choice of k distinct rows, one 1 from each: e_k of the row counts.
  const auto counts = m.row_counts();
  std::vector<Integer> e(static_cast<std::size_t>(m.r) + 1, Integer(0));
  e[0] = 1;
  for (int c : counts) {
    if (c == 0) continue;
    for (int k = m.r; k >= 1; --k) e[k] += e[k - 1] * c;
  }
  Integer avoiders = 0;
  for (int k = 0; k <= m.r; ++k) {
    const Integer term = e[k] * factorial(m.r - k);
    avoiders += (k % 2 == 0) ? term : -term;
  }
  return 1 - Rational(avoiders) / factorial(m.r);
}

}  // namespace

Rational hit_probability(const HitMatrix& matrix, HitProbabilityMode mode) {
  if (matrix.r < 1 || static_cast<int>(matrix.entries.size()) != matrix.r)
    throw std::invalid_argument("malformed hit matrix");
  for (const auto& row : matrix.entries)
    if (static_cast<int>(row.size()) != matrix.r)
      throw std::invalid_argument("malformed hit matrix");
  return mode == HitProbabilityMode::Enumerate ? hit_probability_enumerate(matrix)
                                               : hit_probability_rook(matrix);
}

Rational min_column_hit_probability(int r, int d) {
  return hit_probability(extremal_matrix(r, d), HitProbabilityMode::Rook);
}

Rational extremal_avoidance_probability(int r, int d) {
  return 1 - min_column_hit_probability(r, d);
}

MatrixSearchResult min_hit_over_valid_matrices(int r, int d, std::uint64_t seed,
                                               long long random_trials) {
  if (r <= d + 1)
    throw std::invalid_argument("matrix minimisation defined for r > d+1");
  MatrixSearchResult out;
  out.matrices_checked = 0;

  auto consider = [&](HitMatrix& m) {
    if (!m.every_column_covered()) return;
    if (!m.find_cover_rows(d)) return;
    out.matrices_checked += 1;
    const Rational p = hit_probability(m, HitProbabilityMode::Enumerate);
    if (out.argmin.r == 0 || p < out.minimum) {
      out.minimum = p;
      out.argmin = m;
    }
  };

  if (r <= 4) {
    const std::uint64_t total = std::uint64_t(1) << (r * r);
    HitMatrix m;
    m.r = r;
    m.entries.assign(r, std::vector<int>(r, 0));
    for (std::uint64_t bits = 0; bits < total; ++bits) {
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
          m.entries[i][j] = (bits >> (i * r + j)) & 1;
      consider(m);
    }
    out.exhaustive = true;
    return out;
  }

  // Random search: sample a row pattern per column, occasionally extra ones.
  SplitRng rng(seed);
  HitMatrix m;
  m.r = r;
  for (long long t = 0; t < random_trials; ++t) {
    m.entries.assign(r, std::vector<int>(r, 0));
    for (int j = 0; j < r; ++j)
      m.entries[rng.below(static_cast<std::uint64_t>(r))][j] = 1;
    const int extras = static_cast<int>(rng.below(3));
    for (int k = 0; k < extras; ++k)
      m.entries[rng.below(static_cast<std::uint64_t>(r))]
               [rng.below(static_cast<std::uint64_t>(r))] = 1;
    consider(m);
  }
  out.exhaustive = false;
  return out;
}

namespace {

constexpr int kFracBits = 64;

Rational round_down(const Rational& x) {
  const Integer scale = Integer(1) << kFracBits;
  Integer n = numerator(x) * scale;
  const Integer d = denominator(x);
  Integer q = n / d;
  if (q * d > n) q -= 1;  // floor for negatives
  return Rational(q, scale);
}

Rational round_up(const Rational& x) {
  const Integer scale = Integer(1) << kFracBits;
  Integer n = numerator(x) * scale;
  const Integer d = denominator(x);
  Integer q = n / d;
  if (q * d < n) q += 1;
  return Rational(q, scale);
}

// 2 atanh(z) = ln((1+z)/(1-z)) as an interval, for 0 <= z < 1/2.
Interval two_atanh_interval(const Rational& z) {
  // Partial sums are lower bounds; the geometric tail bounds the rest.
  const Rational z2 = z * z;
  Rational term = z;  // z^(2k+1)
  Rational sum = 0;
  int k = 0;
  const Rational eps = Rational(1, Integer(1) << (kFracBits + 16));
  Rational tail;
  while (true) {
    sum += term / (2 * k + 1);
    term *= z2;
    ++k;
    tail = (term / (2 * k + 1)) / (1 - z2);
    if (tail < eps) break;
    if (k > 100000) throw InternalError("atanh series failed to converge");
  }
  return {round_down(2 * sum), round_up(2 * (sum + tail))};
}

Interval ln2_interval() {
  return two_atanh_interval(Rational(1, 3));  // ln 2 = 2 atanh(1/3)
}

}  // namespace

Interval ln_interval(const Rational& x) {
  if (x <= 1) throw std::invalid_argument("ln interval needs x > 1");
  // Reduce to m in [1, 2): x = m 2^e.
  Rational m = x;
  long long e = 0;
  while (m >= 2) {
    m /= 2;
    ++e;
  }
  const Interval l2 = ln2_interval();
  const Interval lm = m == 1 ? Interval{Rational(0), Rational(0)}
                             : two_atanh_interval((m - 1) / (m + 1));
  return {round_down(l2.lo * e + lm.lo), round_up(l2.hi * e + lm.hi)};
}

Interval sqrt_interval(const Rational& x) {
  if (x < 0) throw std::invalid_argument("sqrt of negative value");
  if (x == 0) return {Rational(0), Rational(0)};
  const Integer scale = Integer(1) << kFracBits;
  const Integer scale2 = scale * scale;
  // lo = floor(sqrt(floor(x 2^128))) / 2^64, hi = (floor(sqrt(ceil)) + 1) / 2^64.
  Integer n_lo = numerator(x) * scale2 / denominator(x);
  Integer n_hi = n_lo + 1;
  const Integer s_lo = boost::multiprecision::sqrt(n_lo);
  const Integer s_hi = boost::multiprecision::sqrt(n_hi) + 1;
  return {Rational(s_lo, scale), Rational(s_hi, scale)};
}

ToleranceBound tolerance_bound(const BoundInputs& inputs) {
  if (inputs.N < 1 || inputs.r < 2 || inputs.d < 1)
    throw std::invalid_argument("bound needs N >= 1, r >= 2, d >= 1");
  if (inputs.f < 0 || inputs.f > inputs.N)
    throw std::invalid_argument("split capacity must lie in [0, N]");

  ToleranceBound out;
  out.constant = inputs.r <= inputs.d + 1
                     ? fixed_point_probability(inputs.r)
                     : min_column_hit_probability(inputs.r, inputs.d);
  out.linear_part = Rational(inputs.N) - (1 - out.constant) * inputs.f - 1;

  if (inputs.f == 0) {
    out.root_term = {Rational(0), Rational(0)};
  } else {
    const Rational arg_count = Rational(inputs.N) * inputs.r * inputs.r;
    const Interval ln = ln_interval(arg_count);
    const Rational factor =
        Rational((inputs.d + 1) * (inputs.r - 1)) * inputs.f / 2;
    const Interval lo_sq = sqrt_interval(factor * ln.lo);
    const Interval hi_sq = sqrt_interval(factor * ln.hi);
    out.root_term = {lo_sq.lo, hi_sq.hi};
  }

  const Rational bound = out.linear_part - out.root_term.hi;
  Integer t = numerator(bound) / denominator(bound);
  if (Rational(t) > bound) t -= 1;  // floor
  out.t = static_cast<long long>(t);
  return out;
}

}  // namespace tvt
