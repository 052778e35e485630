#pragma once

// Test-only reference computations. Nothing here calls into the library's
// numeric code paths; the helpers work on plain nested vectors.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <random>
#include <vector>

namespace ophits_test {

using Matrix = std::vector<std::vector<double>>;

inline Matrix multiply_by_transpose(const Matrix& w) {
  const std::size_t n = w.size();
  Matrix m(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m[i][j] += w[i][k] * w[j][k];
  return m;
}

/// Principal eigenvector of W * W^T by plain power iteration on the explicit
/// product matrix, started from `seed`, until successive unit vectors differ
/// by less than tol in max norm.
inline std::vector<double> principal_hub_vector(const Matrix& w, std::vector<double> seed, double tol = 1e-12,
                                                std::size_t max_iter = 1'000'000) {
  const Matrix m = multiply_by_transpose(w);
  const std::size_t n = w.size();
  auto normalize = [](std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x * x;
    s = std::sqrt(s);
    for (double& x : v) x /= s;
  };
  normalize(seed);
  std::vector<double> next(n);
  for (std::size_t it = 0; it < max_iter; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      next[i] = 0;
      for (std::size_t j = 0; j < n; ++j) next[i] += m[i][j] * seed[j];
    }
    normalize(next);
    double diff = 0;
    for (std::size_t i = 0; i < n; ++i) diff = std::max(diff, std::abs(next[i] - seed[i]));
    seed.swap(next);
    if (diff < tol) break;
  }
  return seed;
}

/// Positions sorted by descending score, ties by ascending position.
inline std::vector<std::size_t> descending_order(const std::vector<double>& s) {
  std::vector<std::size_t> idx(s.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return s[a] > s[b] || (s[a] == s[b] && a < b); });
  return idx;
}

/// True if `order` agrees with the oracle ranking at every rank whose oracle
/// score is separated from both neighbours by more than `gap`.
inline bool agrees_where_separated(const std::vector<std::size_t>& order, const std::vector<double>& oracle,
                                   double gap = 1e-9) {
  const auto ref = descending_order(oracle);
  for (std::size_t r = 0; r < ref.size(); ++r) {
    const bool sep_before = r == 0 || oracle[ref[r - 1]] - oracle[ref[r]] > gap;
    const bool sep_after = r + 1 == ref.size() || oracle[ref[r]] - oracle[ref[r + 1]] > gap;
    if (sep_before && sep_after && order[r] != ref[r]) return false;
  }
  return true;
}

struct RandomInstance {
  Matrix weights;
  std::vector<double> priors;
};

/// Strictly positive off-diagonal weights in [0.01, 1], zero diagonal, priors in [0.05, 0.95].
inline RandomInstance random_instance(std::mt19937& rng, std::size_t n) {
  std::uniform_real_distribution<double> w(0.01, 1.0);
  std::uniform_real_distribution<double> p(0.05, 0.95);
  RandomInstance inst;
  inst.weights.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) inst.weights[i][j] = w(rng);
  for (std::size_t i = 0; i < n; ++i) inst.priors.push_back(p(rng));
  return inst;
}

}  // namespace ophits_test
