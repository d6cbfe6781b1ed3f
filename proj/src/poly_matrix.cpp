#include "tcbetti/poly_matrix.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "tcbetti/error.hpp"
#include "tcbetti/linalg.hpp"

namespace tcb {

PolyMatrix::PolyMatrix(int rows, int cols, int nvars)
    : rows_(rows), cols_(cols), nvars_(nvars) {
  if (rows < 0 || cols < 0) {
    throw Error(ErrorCode::InvalidArgument, "negative matrix dimension");
  }
  entries_.assign(static_cast<std::size_t>(rows * cols), Polynomial(nvars));
}

PolyMatrix::PolyMatrix(int nvars, std::vector<std::vector<Polynomial>> rows)
    : rows_(static_cast<int>(rows.size())),
      cols_(rows.empty() ? 0 : static_cast<int>(rows[0].size())),
      nvars_(nvars) {
  entries_.reserve(static_cast<std::size_t>(rows_ * cols_));
  for (auto& row : rows) {
    if (static_cast<int>(row.size()) != cols_) {
      throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    }
    for (auto& e : row) {
      if (e.nvars() != nvars) {
        throw Error(ErrorCode::DimensionMismatch,
                    "matrix entry has the wrong variable count");
      }
      entries_.push_back(std::move(e));
    }
  }
}

bool PolyMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Polynomial& p) { return p.is_zero(); });
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& other) const {
  if (cols_ != other.rows_ || nvars_ != other.nvars_) {
    throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  }
  PolyMatrix out(rows_, other.cols_, nvars_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < other.cols_; ++j) {
      Polynomial acc(nvars_);
      for (int k = 0; k < cols_; ++k) {
        const auto& a = at(i, k);
        const auto& b = other.at(k, j);
        if (a.is_zero() || b.is_zero()) continue;
        acc += a * b;
      }
      out.at(i, j) = std::move(acc);
    }
  }
  return out;
}

PolyMatrix PolyMatrix::select(const std::vector<int>& rows,
                              const std::vector<int>& cols) const {
  PolyMatrix out(static_cast<int>(rows.size()), static_cast<int>(cols.size()),
                 nvars_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      out.at(static_cast<int>(i), static_cast<int>(j)) = at(rows[i], cols[j]);
    }
  }
  return out;
}

std::vector<int> PolyMatrix::row_degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(rows_), 0);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      deg[static_cast<std::size_t>(i)] =
          std::max(deg[static_cast<std::size_t>(i)], at(i, j).total_degree());
    }
  }
  return deg;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.nvars_ == b.nvars_ &&
         a.entries_ == b.entries_;
}

namespace {

// Cofactor expansion along whichever remaining row or column has the fewest
// nonzero entries.
Polynomial det_rec(const PolyMatrix& m, const std::vector<int>& rows,
                   const std::vector<int>& cols) {
  std::size_t n = rows.size();
  if (n == 0) return Polynomial::constant(m.nvars(), 1);
  if (n == 1) return m.at(rows[0], cols[0]);

  std::size_t best = 0;
  bool best_is_row = true;
  std::size_t best_count = n + 1;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t count = 0;
    for (std::size_t j = 0; j < n; ++j) count += !m.at(rows[i], cols[j]).is_zero();
    if (count < best_count) {
      best_count = count;
      best = i;
      best_is_row = true;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) count += !m.at(rows[i], cols[j]).is_zero();
    if (count < best_count) {
      best_count = count;
      best = j;
      best_is_row = false;
    }
  }
  Polynomial acc(m.nvars());
  if (best_count == 0) return acc;

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t i = best_is_row ? best : k;
    std::size_t j = best_is_row ? k : best;
    const Polynomial& e = m.at(rows[i], cols[j]);
    if (e.is_zero()) continue;
    std::vector<int> sub_rows;
    std::vector<int> sub_cols;
    for (std::size_t a = 0; a < n; ++a) {
      if (a != i) sub_rows.push_back(rows[a]);
      if (a != j) sub_cols.push_back(cols[a]);
    }
    Polynomial cof = det_rec(m, sub_rows, sub_cols);
    if (cof.is_zero()) continue;
    Polynomial term = e * cof;
    if ((i + j) % 2 == 1) {
      acc -= term;
    } else {
      acc += term;
    }
  }
  return acc;
}

std::vector<int> iota_vec(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
  return v;
}

// Calls f on every k-subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_subset(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    f(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  }
  return r;
}

std::vector<int> to_one_based(const std::vector<int>& v) {
  std::vector<int> out = v;
  for (auto& x : out) ++x;
  return out;
}

constexpr std::uint64_t kRankPrime = 2305843009213693951ULL;  // 2^61 - 1

}  // namespace

Polynomial determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::NotSquare, "determinant of a " +
                                          std::to_string(m.rows()) + "x" +
                                          std::to_string(m.cols()) + " matrix");
  }
  return det_rec(m, iota_vec(m.rows()), iota_vec(m.cols()));
}

Polynomial minor(const PolyMatrix& m, std::vector<int> rows,
                 std::vector<int> cols) {
  if (rows.size() != cols.size()) {
    throw Error(ErrorCode::SizeMismatch, "minor needs as many rows as columns");
  }
  std::sort(rows.begin(), rows.end());
  std::sort(cols.begin(), cols.end());
  for (auto& r : rows) {
    if (r < 1 || r > m.rows()) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "row index " + std::to_string(r) + " out of range");
    }
    --r;
  }
  for (auto& c : cols) {
    if (c < 1 || c > m.cols()) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "column index " + std::to_string(c) + " out of range");
    }
    --c;
  }
  if (std::adjacent_find(rows.begin(), rows.end()) != rows.end() ||
      std::adjacent_find(cols.begin(), cols.end()) != cols.end()) {
    throw Error(ErrorCode::IndexOutOfRange, "repeated minor index");
  }
  return det_rec(m, rows, cols);
}

namespace {

std::vector<std::uint64_t> eval_matrix_mod(const PolyMatrix& m,
                                           const std::vector<std::uint64_t>& pt) {
  std::vector<std::uint64_t> out;
  out.reserve(static_cast<std::size_t>(m.rows() * m.cols()));
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      out.push_back(m.at(i, j).eval_mod(pt, kRankPrime));
    }
  }
  return out;
}

std::vector<Rational> eval_matrix_exact(const PolyMatrix& m,
                                        const std::vector<Rational>& pt) {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(m.rows() * m.cols()));
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out.push_back(m.at(i, j).eval(pt));
  }
  return out;
}

// Searches for a nonzero (r+1)-minor. Returns true and fills rows/cols when
// one exists; returns false after proving that every (r+1)-minor vanishes.
bool find_larger_minor(const PolyMatrix& m, int r, std::vector<int>& rows,
                       std::vector<int>& cols, std::string& proof) {
  int k = r + 1;
  if (k > m.rows() || k > m.cols()) {
    proof = "no minors of size " + std::to_string(k) + " exist";
    return false;
  }
  std::size_t count = binomial(m.rows(), k) * binomial(m.cols(), k);
  if (count <= kSymbolicMinorLimit) {
    bool hit = false;
    for_each_subset(m.rows(), k, [&](const std::vector<int>& rs) {
      if (hit) return;
      for_each_subset(m.cols(), k, [&](const std::vector<int>& cs) {
        if (hit) return;
        if (!det_rec(m, rs, cs).is_zero()) {
          rows = rs;
          cols = cs;
          hit = true;
        }
      });
    });
    if (!hit) {
      proof = "all " + std::to_string(count) + " minors of size " +
              std::to_string(k) + " vanish symbolically";
    }
    return hit;
  }

  // Each (r+1)-minor has degree at most D in every variable, where D is the
  // sum of the k largest row degrees; vanishing on {0..D}^n forces zero.
  auto deg = m.row_degrees();
  std::sort(deg.begin(), deg.end(), std::greater<>());
  int bound = 0;
  for (int i = 0; i < k; ++i) bound += deg[static_cast<std::size_t>(i)];
  int n = m.nvars();
  std::vector<int> digits(static_cast<std::size_t>(n), 0);
  std::size_t points = 0;
  while (true) {
    std::vector<Rational> pt;
    for (int d : digits) pt.emplace_back(d);
    auto info = eliminate_exact(eval_matrix_exact(m, pt), m.rows(), m.cols());
    ++points;
    if (info.rank > r) {
      // The pivot submatrix restricted to k rows/cols stays nonsingular.
      rows.assign(info.pivot_rows.begin(), info.pivot_rows.begin() + k);
      cols.assign(info.pivot_cols.begin(), info.pivot_cols.begin() + k);
      auto sub = m.select(rows, cols);
      auto sub_info = eliminate_exact(eval_matrix_exact(sub, pt), k, k);
      if (sub_info.rank == k) {
        std::sort(rows.begin(), rows.end());
        std::sort(cols.begin(), cols.end());
        return true;
      }
      // Fall back to a symbolic scan at this size.
      bool hit = false;
      for_each_subset(m.rows(), k, [&](const std::vector<int>& rs) {
        if (hit) return;
        for_each_subset(m.cols(), k, [&](const std::vector<int>& cs) {
          if (hit) return;
          if (!det_rec(m, rs, cs).is_zero()) {
            rows = rs;
            cols = cs;
            hit = true;
          }
        });
      });
      return hit;
    }
    int pos = 0;
    while (pos < n && digits[static_cast<std::size_t>(pos)] == bound) {
      digits[static_cast<std::size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == n) break;
    ++digits[static_cast<std::size_t>(pos)];
  }
  proof = "all minors of size " + std::to_string(k) + " vanish on a grid of " +
          std::to_string(points) + " points (degree bound " +
          std::to_string(bound) + ")";
  return false;
}

}  // namespace

RankResult rank_with_witness(const PolyMatrix& m) {
  RankResult result;
  result.witness_minor = Polynomial::constant(m.nvars(), 1);
  if (m.rows() == 0 || m.cols() == 0 || m.is_zero()) {
    std::string why;
    std::vector<int> rs;
    std::vector<int> cs;
    result.upper_bound_proof = "zero matrix";
    return result;
  }

  // Candidate rank from a few pseudo-random evaluations modulo a prime.
  std::mt19937_64 rng(0x5eedULL);
  PivotInfo best;
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<std::uint64_t> pt;
    for (int v = 0; v < m.nvars(); ++v) pt.push_back(rng() % kRankPrime);
    auto info = eliminate_mod(eval_matrix_mod(m, pt), m.rows(), m.cols(),
                              kRankPrime);
    if (info.rank > best.rank) best = info;
  }
  std::vector<int> rows = best.pivot_rows;
  std::vector<int> cols = best.pivot_cols;
  std::sort(rows.begin(), rows.end());
  std::sort(cols.begin(), cols.end());
  int r = best.rank;
  Polynomial witness = det_rec(m, rows, cols);
  if (witness.is_zero()) {
    // A nonzero value at a point cannot come from the zero polynomial, so
    // this only happens if evaluation is broken; restart from scratch.
    r = 0;
    rows.clear();
    cols.clear();
    witness = Polynomial::constant(m.nvars(), 1);
  }
  std::string proof;
  std::vector<int> bigger_rows;
  std::vector<int> bigger_cols;
  while (find_larger_minor(m, r, bigger_rows, bigger_cols, proof)) {
    rows = bigger_rows;
    cols = bigger_cols;
    witness = det_rec(m, rows, cols);
    r = static_cast<int>(rows.size());
  }
  result.rank = r;
  result.witness_rows = to_one_based(rows);
  result.witness_cols = to_one_based(cols);
  result.witness_minor = std::move(witness);
  result.upper_bound_proof = proof;
  return result;
}

int rank(const PolyMatrix& m) { return rank_with_witness(m).rank; }

std::vector<IndexedMinor> nonzero_minors(const PolyMatrix& m, int r) {
  std::vector<IndexedMinor> out;
  if (r == 0) {
    out.push_back({{}, {}, Polynomial::constant(m.nvars(), 1)});
    return out;
  }
  for_each_subset(m.rows(), r, [&](const std::vector<int>& rs) {
    for_each_subset(m.cols(), r, [&](const std::vector<int>& cs) {
      Polynomial d = det_rec(m, rs, cs);
      if (!d.is_zero()) out.push_back({to_one_based(rs), to_one_based(cs), d});
    });
  });
  return out;
}

std::vector<IndexedMinor> maximal_minors(const PolyMatrix& m, int r) {
  int actual = rank(m);
  if (r != actual) {
    throw Error(ErrorCode::RankMismatch, "requested minors of size " +
                                             std::to_string(r) +
                                             " but the rank is " +
                                             std::to_string(actual));
  }
  return nonzero_minors(m, r);
}

namespace {

bool coprime_with_monomial(const Polynomial& mono, const Polynomial& g) {
  Monomial content = g.monomial_content();
  const Monomial& a = mono.leading().mono;
  for (int v = 0; v < mono.nvars(); ++v) {
    if (a[v] > 0 && content[v] > 0) return false;
  }
  return true;
}

}  // namespace

RegularSequenceCertificate regular_sequence_certificate(
    const std::vector<Polynomial>& gens, int length) {
  if (length < 1) {
    throw Error(ErrorCode::InvalidArgument,
                "regular sequence length must be positive");
  }
  RegularSequenceCertificate cert;
  cert.length = length;
  if (length == 1) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (!gens[i].is_zero() && !gens[i].is_constant()) {
        cert.found = true;
        cert.kind = "nonzero";
        cert.indices = {i};
        cert.witnesses = {gens[i]};
        return cert;
      }
    }
    return cert;
  }

  // Pure powers of distinct variables, lowest exponent per variable.
  std::map<int, std::size_t> by_var;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    auto [v, e] = gens[i].pure_power();
    if (e == 0) continue;
    auto it = by_var.find(v);
    if (it == by_var.end() || gens[it->second].pure_power().second > e) {
      by_var[v] = i;
    }
  }
  if (static_cast<int>(by_var.size()) >= length) {
    std::vector<std::size_t> picks;
    for (auto& [v, i] : by_var) picks.push_back(i);
    std::sort(picks.begin(), picks.end());
    picks.resize(static_cast<std::size_t>(length));
    cert.found = true;
    cert.kind = "pure-powers";
    for (auto i : picks) {
      cert.indices.push_back(i);
      cert.witnesses.push_back(gens[i]);
    }
    return cert;
  }

  if (length == 2) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i].is_constant()) continue;
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        if (gens[j].is_constant()) continue;
        bool ok = false;
        if (gens[i].is_monomial()) {
          ok = coprime_with_monomial(gens[i], gens[j]);
        } else if (gens[j].is_monomial()) {
          ok = coprime_with_monomial(gens[j], gens[i]);
        }
        if (ok) {
          cert.found = true;
          cert.kind = "coprime-monomial";
          cert.indices = {i, j};
          cert.witnesses = {gens[i], gens[j]};
          return cert;
        }
      }
    }
  }
  return cert;
}

}  // namespace tcb
