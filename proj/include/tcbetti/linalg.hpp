#pragma once

#include <cstdint>
#include <vector>

#include "tcbetti/polynomial.hpp"

namespace tcb {

// Result of Gaussian elimination with pivot tracking. The submatrix on
// pivot_rows x pivot_cols (0-based, original indices) is nonsingular.
struct PivotInfo {
  int rank = 0;
  std::vector<int> pivot_rows;
  std::vector<int> pivot_cols;
};

// Row-major dense matrices.
PivotInfo eliminate_mod(std::vector<std::uint64_t> a, int rows, int cols,
                        std::uint64_t prime);
PivotInfo eliminate_exact(std::vector<Rational> a, int rows, int cols);

int rank_exact(std::vector<Rational> a, int rows, int cols);

}  // namespace tcb
