#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tcbetti/polynomial.hpp"

namespace tcb {

class PolyMatrix {
 public:
  PolyMatrix(int rows, int cols, int nvars);
  PolyMatrix(int nvars, std::vector<std::vector<Polynomial>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int nvars() const { return nvars_; }

  // 0-based access.
  const Polynomial& at(int r, int c) const {
    return entries_[static_cast<std::size_t>(r * cols_ + c)];
  }
  Polynomial& at(int r, int c) {
    return entries_[static_cast<std::size_t>(r * cols_ + c)];
  }

  bool is_zero() const;
  PolyMatrix operator*(const PolyMatrix& other) const;
  // Submatrix from 0-based index lists, taken in the order given.
  PolyMatrix select(const std::vector<int>& rows,
                    const std::vector<int>& cols) const;
  // Largest total degree of any entry in each row; zero rows give 0.
  std::vector<int> row_degrees() const;

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

 private:
  int rows_;
  int cols_;
  int nvars_;
  std::vector<Polynomial> entries_;
};

Polynomial determinant(const PolyMatrix& m);

// Minor on 1-based row and column indices, each taken in increasing order.
Polynomial minor(const PolyMatrix& m, std::vector<int> rows,
                 std::vector<int> cols);

// Witness for rank(): 1-based rows/cols of a nonzero maximal minor.
struct RankResult {
  int rank = 0;
  std::vector<int> witness_rows;
  std::vector<int> witness_cols;
  Polynomial witness_minor;
  // How the vanishing of all (rank+1)-minors was established.
  std::string upper_bound_proof;
};

// Above this many (r+1)-minors the vanishing proof switches from symbolic
// determinants to exact evaluation on an interpolation grid.
inline constexpr std::size_t kSymbolicMinorLimit = 200;

RankResult rank_with_witness(const PolyMatrix& m);
int rank(const PolyMatrix& m);

struct IndexedMinor {
  std::vector<int> rows;  // 1-based
  std::vector<int> cols;  // 1-based
  Polynomial value;
};

// All nonzero r x r minors in lexicographic (rows, cols) order; r must equal
// rank(m).
std::vector<IndexedMinor> maximal_minors(const PolyMatrix& m, int r);
// Same enumeration without the rank check.
std::vector<IndexedMinor> nonzero_minors(const PolyMatrix& m, int r);

struct RegularSequenceCertificate {
  bool found = false;
  int length = 0;
  std::vector<std::size_t> indices;  // into the generator list
  std::vector<Polynomial> witnesses;
  std::string kind;  // "nonzero", "pure-powers", "coprime-monomial"
};

// Length 1: any nonzero element. Length >= 2: pure powers of pairwise
// distinct variables, or for length 2 a coprime pair where at least one
// side is a monomial (the irreducible factors of a monomial are variables,
// so coprimality reduces to a divisibility check). Anything else is reported
// as not found, which is inconclusive rather than a proof of small depth.
RegularSequenceCertificate regular_sequence_certificate(
    const std::vector<Polynomial>& gens, int length);

}  // namespace tcb
