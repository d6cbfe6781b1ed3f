#include "tcbetti/komeda.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tcbetti/error.hpp"
#include "tcbetti/groebner.hpp"

namespace tcb {

std::string KomedaParams::to_string() const {
  std::ostringstream os;
  os << '(' << alpha21 << ',' << alpha1 << ',' << alpha2 << ',' << alpha3
     << ',' << alpha4 << ')';
  return os.str();
}

std::string BettiSequence::to_string() const {
  std::ostringstream os;
  os << '(' << beta[0] << ',' << beta[1] << ',' << beta[2] << ',' << beta[3]
     << ')';
  return os.str();
}

const char* subcase_name(Subcase s) {
  switch (s) {
    case Subcase::Homogeneous: return "HOMOGENEOUS";
    case Subcase::N2Lt: return "N2_LT";
    case Subcase::N2Gt: return "N2_GT";
    case Subcase::N3Lt: return "N3_LT";
    case Subcase::N4Lt: return "N4_LT";
    case Subcase::N3Gt: return "N3_GT";
    case Subcase::N4Gt: return "N4_GT";
  }
  return "?";
}

std::array<long long, 4> semigroup_generators(const KomedaParams& p) {
  long long a21 = p.alpha21, a1 = p.alpha1, a2 = p.alpha2, a3 = p.alpha3,
            a4 = p.alpha4;
  return {
      a2 * a3 * (a4 - 1) + 1,
      a21 * a3 * a4 + (a1 - a21 - 1) * (a3 - 1) + a3,
      a1 * a4 + (a1 - a21 - 1) * (a2 - 1) * (a4 - 1) - a4 + 1,
      a1 * a2 * (a3 - 1) + a21 * (a2 - 1) + a2,
  };
}

KomedaParams validate_params(const KomedaParams& p, CommonFactor policy) {
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::InvalidParams,
                "invalid parameters " + p.to_string() + ": " + why);
  };
  const std::pair<int, const char*> alphas[] = {{p.alpha1, "alpha1"},
                                                {p.alpha2, "alpha2"},
                                                {p.alpha3, "alpha3"},
                                                {p.alpha4, "alpha4"}};
  for (auto [a, name] : alphas) {
    if (a <= 1) fail(std::string(name) + " > 1 is violated");
  }
  if (p.alpha21 <= 0) fail("alpha21 > 0 is violated");
  if (p.alpha21 >= p.alpha1 - 1) fail("alpha21 < alpha1 - 1 is violated");
  auto n = semigroup_generators(p);
  long long g = 0;
  for (long long x : n) g = std::gcd(g, x);
  if (g != 1 && policy == CommonFactor::Reject) {
    fail("gcd(n1,n2,n3,n4) = " + std::to_string(g) + " is not 1");
  }
  std::vector<long long> reduced;
  for (long long x : n) reduced.push_back(x / g);
  NumericalSemigroup s(std::move(reduced));
  if (!s.is_minimally_generated()) {
    fail("n1..n4 do not minimally generate the semigroup");
  }
  return p;
}

long long common_factor(const KomedaParams& p) {
  long long g = 0;
  for (long long x : semigroup_generators(p)) g = std::gcd(g, x);
  return g;
}

KomedaSemigroup semigroup_from_params(const KomedaParams& p,
                                      CommonFactor policy) {
  validate_params(p, policy);
  auto n = semigroup_generators(p);
  long long g = common_factor(p);
  std::vector<long long> reduced;
  for (long long x : n) reduced.push_back(x / g);
  return {n, g, NumericalSemigroup(std::move(reduced))};
}

int multiplicity_index(const KomedaParams& p) {
  auto n = semigroup_generators(p);
  auto it = std::min_element(n.begin(), n.end());
  if (std::count(n.begin(), n.end(), *it) > 1) {
    throw Error(ErrorCode::AmbiguousMultiplicity,
                "two generators share the minimal value " + std::to_string(*it));
  }
  return static_cast<int>(it - n.begin()) + 1;
}

CaseTag classify_case(const KomedaParams& p) {
  CaseTag tag;
  tag.multiplicity_index = multiplicity_index(p);
  switch (tag.multiplicity_index) {
    case 1:
      tag.subcase = Subcase::Homogeneous;
      break;
    case 2:
      tag.subcase = p.alpha1 == p.alpha4  ? Subcase::Homogeneous
                    : p.alpha1 < p.alpha4 ? Subcase::N2Lt
                                          : Subcase::N2Gt;
      break;
    case 3: {
      int pivot = p.alpha21 + 1;
      tag.subcase = p.alpha2 == pivot  ? Subcase::Homogeneous
                    : p.alpha2 < pivot ? Subcase::N3Lt
                                       : Subcase::N3Gt;
      break;
    }
    default: {
      int pivot = p.alpha1 - p.alpha21;
      tag.subcase = p.alpha3 == pivot  ? Subcase::Homogeneous
                    : p.alpha3 < pivot ? Subcase::N4Lt
                                       : Subcase::N4Gt;
      break;
    }
  }
  return tag;
}

BettiSequence betti_formula(const CaseTag& tag) {
  switch (tag.subcase) {
    case Subcase::Homogeneous: return {{1, 5, 6, 2}};
    case Subcase::N2Lt: return {{1, 5, 7, 3}};
    case Subcase::N2Gt: return {{1, 6, 9, 4}};
    case Subcase::N3Lt: return {{1, 6, 8, 3}};
    case Subcase::N4Lt: return {{1, 5, 7, 3}};
    case Subcase::N3Gt:
    case Subcase::N4Gt:
      break;
  }
  throw Error(ErrorCode::UnsupportedCase,
              std::string("no Betti formula for case ") + tag.name());
}

bool is_homogeneous_criterion(const KomedaParams& p) {
  switch (multiplicity_index(p)) {
    case 1: return true;
    case 2: return p.alpha1 == p.alpha4;
    case 3: return p.alpha2 == p.alpha21 + 1;
    default: return p.alpha3 == p.alpha1 - p.alpha21;
  }
}

long long s_degree(const Monomial& m, const std::array<long long, 4>& n) {
  long long d = 0;
  for (int i = 0; i < 4; ++i) d += m[i] * n[static_cast<std::size_t>(i)];
  return d;
}

namespace {

Monomial x(int e1, int e2, int e3, int e4) {
  for (int e : {e1, e2, e3, e4}) {
    if (e < 0) {
      throw Error(ErrorCode::NegativeExponent, "negative exponent in a generator");
    }
  }
  return Monomial{e1, e2, e3, e4};
}

Polynomial binomial(const Monomial& a, const Monomial& b) {
  return Polynomial::monomial(4, a) - Polynomial::monomial(4, b);
}

}  // namespace

std::vector<Polynomial> toric_generators(const KomedaParams& p) {
  int a21 = p.alpha21, a1 = p.alpha1, a2 = p.alpha2, a3 = p.alpha3,
      a4 = p.alpha4;
  return {
      binomial(x(a1, 0, 0, 0), x(0, 0, 1, a4 - 1)),
      binomial(x(0, a2, 0, 0), x(a21, 0, 0, 1)),
      binomial(x(0, 0, a3, 0), x(a1 - a21 - 1, 1, 0, 0)),
      binomial(x(0, 0, 0, a4), x(1, a2 - 1, a3 - 1, 0)),
      binomial(x(a21 + 1, 0, a3 - 1, 0), x(0, 1, 0, a4 - 1)),
  };
}

Polynomial f6_n2(const KomedaParams& p) {
  return binomial(x(p.alpha1 + p.alpha21, 0, 0, 0),
                  x(0, p.alpha2, 1, p.alpha4 - 2));
}

Polynomial f6_n3(const KomedaParams& p) {
  return binomial(x(p.alpha1 - 1, 0, 0, 1), x(0, p.alpha2 - 1, p.alpha3, 0));
}

Polynomial f4_alternative(const KomedaParams& p) {
  return binomial(x(0, 0, 0, p.alpha4),
                  x(0, p.alpha2 - 2, 2 * p.alpha3 - 1, 0));
}

StandardBasisCandidates standard_basis_candidates(const KomedaParams& p,
                                                  const CaseTag& tag) {
  if (tag.multiplicity_index == 1) {
    throw Error(ErrorCode::NoBasisStated,
                "no standard basis is stated when n1 is the multiplicity");
  }
  auto f = toric_generators(p);
  StandardBasisCandidates out;
  switch (tag.subcase) {
    case Subcase::Homogeneous:
      out.candidates = {f};
      out.formula_only = true;
      break;
    case Subcase::N2Lt:
    case Subcase::N4Lt:
      out.candidates = {f};
      break;
    case Subcase::N2Gt: {
      auto g = f;
      g.push_back(f6_n2(p));
      out.candidates = {g};
      break;
    }
    case Subcase::N3Lt: {
      auto first = f;
      first.push_back(f6_n3(p));
      auto second = f;
      second[3] = f4_alternative(p);
      second.push_back(f6_n3(p));
      out.candidates = {first, second};
      break;
    }
    case Subcase::N3Gt:
    case Subcase::N4Gt:
      throw Error(ErrorCode::NoBasisStated,
                  std::string("no standard basis is stated for ") + tag.name());
  }
  return out;
}

std::array<int, 3> surviving_variables(int multiplicity_index) {
  std::array<int, 3> out{};
  std::size_t j = 0;
  for (int v = 1; v <= 4; ++v) {
    if (v != multiplicity_index) out[j++] = v;
  }
  return out;
}

std::vector<Polynomial> projected_generators(const KomedaParams& p,
                                             const CaseTag& tag) {
  int a21 = p.alpha21, a1 = p.alpha1, a2 = p.alpha2, a3 = p.alpha3,
      a4 = p.alpha4;
  std::vector<Monomial> gens;
  switch (tag.subcase) {
    case Subcase::N2Lt:
      gens = {x(a1, 0, 0, 0), x(a21, 0, 0, 1), x(0, 0, a3, 0),
              x(0, 0, 0, a4), x(a21 + 1, 0, a3 - 1, 0)};
      break;
    case Subcase::N2Gt:
      gens = {x(0, 0, 1, a4 - 1), x(a21, 0, 0, 1),       x(0, 0, a3, 0),
              x(0, 0, 0, a4),     x(a21 + 1, 0, a3 - 1, 0), x(a1 + a21, 0, 0, 0)};
      break;
    case Subcase::N3Lt:
      gens = {x(a1, 0, 0, 0),          x(0, a2, 0, 0), x(a1 - a21 - 1, 1, 0, 0),
              x(0, 0, 0, a4),          x(0, 1, 0, a4 - 1),
              x(a1 - 1, 0, 0, 1)};
      break;
    case Subcase::N4Lt:
      gens = {x(a1, 0, 0, 0), x(0, a2, 0, 0), x(0, 0, a3, 0),
              x(1, a2 - 1, a3 - 1, 0), x(a21 + 1, 0, a3 - 1, 0)};
      break;
    default:
      throw Error(ErrorCode::NoGStarStated,
                  std::string("no projected generators are stated for ") +
                      tag.name() + " with multiplicity n" +
                      std::to_string(tag.multiplicity_index));
  }
  std::vector<Polynomial> out;
  for (const auto& m : gens) {
    out.push_back(
        Polynomial::monomial(4, m).drop_variable(tag.multiplicity_index - 1));
  }
  return out;
}

bool ProjectionDiagnostic::all_match() const {
  return !matches.empty() &&
         std::all_of(matches.begin(), matches.end(), [](bool b) { return b; });
}

ProjectionDiagnostic check_projected_generators(const KomedaParams& p,
                                                const CaseTag& tag) {
  ProjectionDiagnostic diag;
  diag.stated = projected_generators(p, tag);
  IdealPresentation stated(3, diag.stated);
  for (const auto& candidate : standard_basis_candidates(p, tag).candidates) {
    std::vector<Polynomial> projected;
    for (const auto& f : candidate) {
      Polynomial g = f.initial_form().drop_variable(tag.multiplicity_index - 1);
      if (!g.is_zero()) projected.push_back(std::move(g));
    }
    bool same = GroebnerEngine::ideal_equal(IdealPresentation(3, projected),
                                            stated);
    diag.recomputed.push_back(std::move(projected));
    diag.matches.push_back(same);
  }
  return diag;
}

}  // namespace tcb
