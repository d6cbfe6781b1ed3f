#pragma once

#include <array>
#include <string>
#include <vector>

#include "tcbetti/polynomial.hpp"
#include "tcbetti/semigroup.hpp"

namespace tcb {

// Komeda's parameterization of 4-generated pseudo-symmetric semigroups:
// alpha_i > 1, 0 < alpha21 < alpha1 - 1.
struct KomedaParams {
  int alpha21 = 0;
  int alpha1 = 0;
  int alpha2 = 0;
  int alpha3 = 0;
  int alpha4 = 0;

  bool operator==(const KomedaParams&) const = default;
  std::string to_string() const;
};

struct BettiSequence {
  std::array<long long, 4> beta{};

  long long operator[](std::size_t i) const { return beta[i]; }
  long long alternating_sum() const {
    return beta[0] - beta[1] + beta[2] - beta[3];
  }
  bool operator==(const BettiSequence&) const = default;
  std::string to_string() const;
};

enum class Subcase {
  Homogeneous,
  N2Lt,  // mult n2, alpha1 < alpha4
  N2Gt,  // mult n2, alpha1 > alpha4
  N3Lt,  // mult n3, alpha2 < alpha21 + 1
  N4Lt,  // mult n4, alpha3 < alpha1 - alpha21
  // Not covered by the Betti formula; kept so that classification is total.
  N3Gt,  // mult n3, alpha2 > alpha21 + 1
  N4Gt,  // mult n4, alpha3 > alpha1 - alpha21
};

const char* subcase_name(Subcase s);

struct CaseTag {
  int multiplicity_index = 1;  // 1..4
  Subcase subcase = Subcase::Homogeneous;

  bool operator==(const CaseTag&) const = default;
  // "HOMOGENEOUS", "N2_LT", ...
  std::string name() const { return subcase_name(subcase); }
};

// Raw formulas, no validation; order is (n1, n2, n3, n4), not sorted.
std::array<long long, 4> semigroup_generators(const KomedaParams& p);

// What to do when n1..n4 share a factor g > 1. Divide keeps the tuple and
// works with the numerical semigroup generated by n / g; the toric ideal is
// the same for both.
enum class CommonFactor { Reject, Divide };

// Throws InvalidParams naming the violated constraint.
KomedaParams validate_params(const KomedaParams& p,
                             CommonFactor policy = CommonFactor::Reject);

long long common_factor(const KomedaParams& p);

struct KomedaSemigroup {
  std::array<long long, 4> n{};  // as given by the formulas
  long long factor = 1;           // gcd of n
  NumericalSemigroup semigroup;   // generated by n / factor
};
KomedaSemigroup semigroup_from_params(
    const KomedaParams& p, CommonFactor policy = CommonFactor::Reject);

// 1-based index of the unique smallest n_i; throws AmbiguousMultiplicity.
int multiplicity_index(const KomedaParams& p);

CaseTag classify_case(const KomedaParams& p);
BettiSequence betti_formula(const CaseTag& tag);
bool is_homogeneous_criterion(const KomedaParams& p);

// S-degree of a monomial in X1..X4.
long long s_degree(const Monomial& m, const std::array<long long, 4>& n);

// f1..f5 in variables X1..X4.
std::vector<Polynomial> toric_generators(const KomedaParams& p);

// The two extra standard basis elements and the alternative f4.
Polynomial f6_n2(const KomedaParams& p);        // X1^(a1+a21) - X2^a2 X3 X4^(a4-2)
Polynomial f6_n3(const KomedaParams& p);        // X1^(a1-1) X4 - X2^(a2-1) X3^a3
Polynomial f4_alternative(const KomedaParams& p);  // X4^a4 - X2^(a2-2) X3^(2a3-1)

struct StandardBasisCandidates {
  std::vector<std::vector<Polynomial>> candidates;
  // Homogeneous subcases: the Betti sequence comes from the formula only.
  bool formula_only = false;
};

// Throws NoBasisStated for multiplicity n1 and for N3_GT/N4_GT.
StandardBasisCandidates standard_basis_candidates(const KomedaParams& p,
                                                  const CaseTag& tag);

// 1-based labels of the three variables kept after X_i -> 0.
std::array<int, 3> surviving_variables(int multiplicity_index);

// The projected initial ideal generators for the four non-homogeneous
// subcases, in three variables; throws NoGStarStated otherwise.
std::vector<Polynomial> projected_generators(const KomedaParams& p,
                                             const CaseTag& tag);

struct ProjectionDiagnostic {
  std::vector<Polynomial> stated;
  std::vector<std::vector<Polynomial>> recomputed;  // per candidate
  std::vector<bool> matches;                        // per candidate
  bool all_match() const;
};

// Recomputes pi_i(f*) over every standard basis candidate and compares it to
// the stated list as ideals.
ProjectionDiagnostic check_projected_generators(const KomedaParams& p,
                                                const CaseTag& tag);

}  // namespace tcb
