#pragma once

#include <map>
#include <utility>
#include <vector>

#include "tcbetti/groebner.hpp"
#include "tcbetti/komeda.hpp"
#include "tcbetti/polynomial.hpp"

namespace tcb {

// Betti numbers of A/I keyed by homological index and multidegree.
struct MultigradedBettiTable {
  int nvars = 0;
  std::map<std::pair<int, Monomial>, long long> entries;

  // beta_i summed over multidegrees, for i = 0..nvars.
  std::vector<long long> totals() const;
  // (i, total degree) -> beta_ij
  std::map<std::pair<int, int>, long long> graded() const;
};

struct MonomialBettiResult {
  MultigradedBettiTable table;
  // beta_0..beta_3; a nonzero beta_4 (four variables) throws.
  BettiSequence betti;
};

// Drops generators divisible by another one; duplicates collapse.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

// Koszul homology of A/I one multidegree at a time. By default only lcms of
// subsets of the minimal generators are visited; full_box walks every
// multidegree below the overall lcm instead (slow, for cross-checks).
// Throws NotMonomial if some generator has more than one term.
MultigradedBettiTable multigraded_betti(const std::vector<Polynomial>& gens,
                                        int nvars, bool full_box = false);
MonomialBettiResult monomial_betti(const std::vector<Polynomial>& gens,
                                   int nvars, bool full_box = false);

// Coefficients of K(t), where HS(A/I) = K(t) / (1 - t)^nvars; index = degree.
std::vector<long long> hilbert_numerator(const std::vector<Polynomial>& gens,
                                         int nvars);
std::vector<long long> hilbert_numerator(const std::vector<Monomial>& gens);

struct GradedBettiResult {
  std::map<std::pair<int, int>, long long> graded;  // (i, j) -> beta_ij
  BettiSequence betti;
};

// Graded Betti numbers of A/I for a homogeneous ideal, from the Koszul
// strands on standard monomials of a grevlex Groebner basis. Only the (i, j)
// where the initial ideal has a nonzero Betti number are computed; the result
// must satisfy the Euler identity against the Hilbert numerator of the
// initial ideal, otherwise CutoffExceeded.
GradedBettiResult graded_betti_general(const IdealPresentation& ideal);

// Sum_ij (-1)^i beta_ij t^j as a coefficient vector.
std::vector<long long> euler_characteristic(
    const std::map<std::pair<int, int>, long long>& graded);

}  // namespace tcb
