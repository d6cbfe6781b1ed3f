#include "tcbetti/linalg.hpp"

#include <numeric>
#include <utility>

namespace tcb {

namespace {

template <class T, class IsZero, class Reduce>
PivotInfo eliminate(std::vector<T>& a, int rows, int cols, IsZero is_zero,
                    Reduce reduce) {
  PivotInfo info;
  std::vector<int> row_id(static_cast<std::size_t>(rows));
  std::iota(row_id.begin(), row_id.end(), 0);
  auto at = [&](int r, int c) -> T& {
    return a[static_cast<std::size_t>(r * cols + c)];
  };
  int pr = 0;
  for (int c = 0; c < cols && pr < rows; ++c) {
    int found = -1;
    for (int r = pr; r < rows; ++r) {
      if (!is_zero(at(r, c))) {
        found = r;
        break;
      }
    }
    if (found < 0) continue;
    if (found != pr) {
      for (int k = 0; k < cols; ++k) std::swap(at(found, k), at(pr, k));
      std::swap(row_id[static_cast<std::size_t>(found)],
                row_id[static_cast<std::size_t>(pr)]);
    }
    for (int r = pr + 1; r < rows; ++r) {
      if (!is_zero(at(r, c))) reduce(a, cols, pr, r, c);
    }
    info.pivot_rows.push_back(row_id[static_cast<std::size_t>(pr)]);
    info.pivot_cols.push_back(c);
    ++pr;
  }
  info.rank = pr;
  return info;
}

}  // namespace

PivotInfo eliminate_mod(std::vector<std::uint64_t> a, int rows, int cols,
                        std::uint64_t prime) {
  return eliminate(
      a, rows, cols, [](std::uint64_t v) { return v == 0; },
      [prime](std::vector<std::uint64_t>& m, int ncols, int pivot, int target,
              int c) {
        auto at = [&](int r, int k) -> std::uint64_t& {
          return m[static_cast<std::size_t>(r * ncols + k)];
        };
        std::uint64_t inv = pow_mod(at(pivot, c), prime - 2, prime);
        std::uint64_t factor = mul_mod(at(target, c), inv, prime);
        for (int k = c; k < ncols; ++k) {
          std::uint64_t sub = mul_mod(factor, at(pivot, k), prime);
          at(target, k) = (at(target, k) + prime - sub) % prime;
        }
      });
}

PivotInfo eliminate_exact(std::vector<Rational> a, int rows, int cols) {
  return eliminate(
      a, rows, cols, [](const Rational& v) { return v == 0; },
      [](std::vector<Rational>& m, int ncols, int pivot, int target, int c) {
        auto at = [&](int r, int k) -> Rational& {
          return m[static_cast<std::size_t>(r * ncols + k)];
        };
        Rational factor = at(target, c) / at(pivot, c);
        for (int k = c; k < ncols; ++k) {
          if (at(pivot, k) != 0) at(target, k) -= factor * at(pivot, k);
        }
      });
}

int rank_exact(std::vector<Rational> a, int rows, int cols) {
  return eliminate_exact(std::move(a), rows, cols).rank;
}

}  // namespace tcb
