#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <vector>

namespace tcb {

// A numerical semigroup <n1,...,nk> with gcd 1. Membership is answered from
// the Apery set of the multiplicity, which is computed once on construction;
// the object is immutable afterwards and safe to share across threads.
class NumericalSemigroup {
 public:
  explicit NumericalSemigroup(std::vector<long long> generators);

  const std::vector<long long>& generators() const { return generators_; }
  long long multiplicity() const { return multiplicity_; }

  bool contains(long long x) const;

  // All (u1..uk) with sum u_i n_i = s, u_i >= 0, in lexicographic order.
  std::vector<std::vector<long long>> factorizations(long long s) const;
  // {sum u_i} over all factorizations; throws NotInSemigroup.
  std::set<long long> length_set(long long s) const;
  // Least element of each residue class mod s, indexed by residue.
  std::vector<long long> apery_set(long long s) const;

  long long frobenius() const { return frobenius_; }
  std::vector<long long> gaps() const;

  bool is_pseudo_symmetric() const;
  bool is_symmetric() const;
  bool is_homogeneous() const;
  // No generator lies in the semigroup spanned by the others.
  bool is_minimally_generated() const;

 private:
  std::vector<long long> generators_;
  long long multiplicity_;
  std::vector<long long> apery_mult_;
  long long frobenius_;
};

}  // namespace tcb
