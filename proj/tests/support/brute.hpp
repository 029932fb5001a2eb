#pragma once

// Test-only oracles, deliberately independent of the library's sparse
// elimination path: plain dense Gaussian elimination over Q, and a dense
// nullity count. Used to freeze expected values in the unit tests.

#include <vector>

#include "core/numeric.hpp"

namespace brute {

using weyl::Rat;

// Rank of a dense rational matrix by textbook row reduction.
inline size_t dense_rank(std::vector<std::vector<Rat>> a) {
  if (a.empty()) return 0;
  size_t rows = a.size(), cols = a[0].size();
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      Rat f = a[r][c] / a[rank][c];
      for (size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace brute
