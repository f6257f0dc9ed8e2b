#pragma once

#include <cstddef>
#include <utility>

#include "zpd/matrix.hpp"

namespace zpd {

/// Bijection between ordered pairs (i,j), i<j<n, and flat coordinates of
/// L∧L, with flat dimension n(n-1)/2.
struct WedgeIndex {
  std::size_t n = 0;

  explicit WedgeIndex(std::size_t n_) : n(n_) {}

  std::size_t dim() const { return n * (n - 1) / 2; }

  std::size_t flat(std::size_t i, std::size_t j) const {
    // lexicographic on (i,j) with i<j
    return i * n - i * (i + 1) / 2 + (j - i - 1);
  }

  std::pair<std::size_t, std::size_t> unflat(std::size_t f) const {
    std::size_t i = 0, rowlen = n - 1;
    while (f >= rowlen) { f -= rowlen; ++i; --rowlen; }
    return {i, i + 1 + f};
  }
};

/// Coordinates of x∧y: entry at flat(i,j) is x_i y_j - x_j y_i.
Vec wedge_coords(const Vec& x, const Vec& y, const WedgeIndex& w);

}  // namespace zpd
