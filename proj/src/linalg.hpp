#pragma once

#include <vector>

#include "thresholds/rational.hpp"

namespace thresholds::detail {

using Matrix = std::vector<std::vector<Rational>>;

// Basis of {v : M v = 0}, by exact Gauss-Jordan elimination.
std::vector<std::vector<Rational>> nullspace(Matrix m, std::size_t ncols);

std::size_t rank(Matrix m, std::size_t ncols);

// Volume of the convex hull of the points in R^d (0 when not full-dimensional).
Rational convex_hull_volume(std::vector<std::vector<Rational>> points, std::size_t d);

// Calls f with every k-subset of {0..n-1} as an index vector.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace thresholds::detail
