#include "tcbetti/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

#include "tcbetti/error.hpp"

namespace tcb {

namespace {

// Least element of each residue class mod m in <gens>, by Dijkstra over
// residues. Entries stay at max() for residues that are never reached.
std::vector<long long> residue_minima(std::span<const long long> gens,
                                      long long m) {
  constexpr long long kInf = std::numeric_limits<long long>::max();
  std::vector<long long> dist(static_cast<std::size_t>(m), kInf);
  using Item = std::pair<long long, long long>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[0] = 0;
  queue.push({0, 0});
  while (!queue.empty()) {
    auto [d, r] = queue.top();
    queue.pop();
    if (d != dist[static_cast<std::size_t>(r)]) continue;
    for (long long g : gens) {
      long long nd = d + g;
      long long nr = nd % m;
      if (nd < dist[static_cast<std::size_t>(nr)]) {
        dist[static_cast<std::size_t>(nr)] = nd;
        queue.push({nd, nr});
      }
    }
  }
  return dist;
}

}  // namespace

NumericalSemigroup::NumericalSemigroup(std::vector<long long> generators)
    : generators_(std::move(generators)) {
  if (generators_.empty()) {
    throw Error(ErrorCode::InvalidArgument, "semigroup needs generators");
  }
  long long g = 0;
  for (long long n : generators_) {
    if (n <= 0) {
      throw Error(ErrorCode::InvalidArgument, "generators must be positive");
    }
    g = std::gcd(g, n);
  }
  if (g != 1) {
    throw Error(ErrorCode::InvalidArgument,
                "generators have gcd " + std::to_string(g) + ", not 1");
  }
  multiplicity_ = *std::min_element(generators_.begin(), generators_.end());
  apery_mult_ = residue_minima(generators_, multiplicity_);
  frobenius_ = *std::max_element(apery_mult_.begin(), apery_mult_.end()) -
               multiplicity_;
}

bool NumericalSemigroup::contains(long long x) const {
  if (x < 0) return false;
  return x >= apery_mult_[static_cast<std::size_t>(x % multiplicity_)];
}

std::vector<std::vector<long long>> NumericalSemigroup::factorizations(
    long long s) const {
  std::vector<std::vector<long long>> out;
  if (s < 0) return out;
  std::vector<long long> u(generators_.size(), 0);
  // Depth-first with u_i <= rest / n_i; the last coordinate is forced.
  std::function<void(std::size_t, long long)> rec = [&](std::size_t i,
                                                         long long rest) {
    long long n = generators_[i];
    if (i + 1 == generators_.size()) {
      if (rest % n == 0) {
        u[i] = rest / n;
        out.push_back(u);
      }
      return;
    }
    for (long long k = 0; k * n <= rest; ++k) {
      u[i] = k;
      rec(i + 1, rest - k * n);
    }
    u[i] = 0;
  };
  rec(0, s);
  return out;
}

std::set<long long> NumericalSemigroup::length_set(long long s) const {
  if (!contains(s)) {
    throw Error(ErrorCode::NotInSemigroup,
                std::to_string(s) + " is not in the semigroup");
  }
  std::set<long long> lengths;
  for (const auto& u : factorizations(s)) {
    lengths.insert(std::accumulate(u.begin(), u.end(), 0LL));
  }
  return lengths;
}

std::vector<long long> NumericalSemigroup::apery_set(long long s) const {
  if (s <= 0 || !contains(s)) {
    throw Error(ErrorCode::NotInSemigroup,
                "Apery set base " + std::to_string(s) +
                    " must be a positive element of the semigroup");
  }
  return residue_minima(generators_, s);
}

std::vector<long long> NumericalSemigroup::gaps() const {
  std::vector<long long> out;
  for (long long x = 1; x <= frobenius_; ++x) {
    if (!contains(x)) out.push_back(x);
  }
  return out;
}

bool NumericalSemigroup::is_pseudo_symmetric() const {
  if (frobenius_ <= 0 || frobenius_ % 2 != 0) return false;
  for (long long x : gaps()) {
    if (2 * x == frobenius_) continue;
    if (!contains(frobenius_ - x)) return false;
  }
  return true;
}

bool NumericalSemigroup::is_symmetric() const {
  if (frobenius_ < 0 || frobenius_ % 2 == 0) return false;
  for (long long x : gaps()) {
    if (!contains(frobenius_ - x)) return false;
  }
  return true;
}

bool NumericalSemigroup::is_homogeneous() const {
  for (long long x : apery_mult_) {
    if (x == 0) continue;
    if (length_set(x).size() != 1) return false;
  }
  return true;
}

bool NumericalSemigroup::is_minimally_generated() const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    long long target = generators_[i];
    std::vector<char> reach(static_cast<std::size_t>(target) + 1, 0);
    reach[0] = 1;
    for (long long x = 1; x <= target; ++x) {
      for (std::size_t j = 0; j < generators_.size(); ++j) {
        if (j == i || generators_[j] > x) continue;
        if (reach[static_cast<std::size_t>(x - generators_[j])]) {
          reach[static_cast<std::size_t>(x)] = 1;
          break;
        }
      }
    }
    if (reach[static_cast<std::size_t>(target)]) return false;
  }
  return true;
}

}  // namespace tcb
