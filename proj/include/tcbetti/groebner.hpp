#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tcbetti/polynomial.hpp"

namespace tcb {

enum class OrderKind {
  GradedRevLex,    // global; optionally weighted
  NegDegRevLex,    // local: lower total degree is larger
  Elimination,     // global; one variable's exponent first, then grevlex
};

class TermOrder {
 public:
  static TermOrder grevlex(int nvars);
  // Weighted degree first, then reverse lex where priority[0] is the largest
  // variable and priority.back() the smallest.
  static TermOrder weighted_grevlex(std::vector<long long> weights,
                                    std::vector<int> priority);
  static TermOrder local(int nvars);
  static TermOrder elimination(int nvars, int eliminated);

  OrderKind kind() const { return kind_; }
  int nvars() const { return nvars_; }
  bool is_global() const { return kind_ != OrderKind::NegDegRevLex; }

  // Negative, zero or positive.
  int compare(const Monomial& a, const Monomial& b) const;

 private:
  TermOrder(OrderKind kind, int nvars);

  OrderKind kind_;
  int nvars_;
  std::vector<long long> weights_;
  std::vector<int> priority_;
  int eliminated_ = -1;
};

// An ideal given by generators. The flags are set only by the engine after
// the corresponding criterion has been checked.
class IdealPresentation {
 public:
  IdealPresentation(int nvars, std::vector<Polynomial> generators);

  int nvars() const { return nvars_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  bool is_groebner() const { return order_.has_value(); }
  const std::optional<TermOrder>& groebner_order() const { return order_; }
  bool is_standard_basis() const { return standard_basis_; }
  bool is_homogeneous() const;

 private:
  friend class GroebnerEngine;

  int nvars_;
  std::vector<Polynomial> generators_;
  std::optional<TermOrder> order_;
  bool standard_basis_ = false;
};

struct EngineOptions {
  // Mora safeguard: a standard basis element of total degree above
  // cap_factor * (largest input degree) aborts with DegreeCapExceeded.
  int mora_degree_cap_factor = 4;
};

class GroebnerEngine {
 public:
  // Reduced Groebner basis, monic, sorted by decreasing leading monomial.
  static IdealPresentation groebner_basis(const IdealPresentation& ideal,
                                          const TermOrder& order);
  static IdealPresentation groebner_basis(const IdealPresentation& ideal);

  // Full normal form with respect to a Groebner basis under `order`.
  static Polynomial normal_form(const Polynomial& f,
                                std::span<const Polynomial> basis,
                                const TermOrder& order);
  // Mora's weak normal form under the local order.
  static Polynomial mora_normal_form(const Polynomial& f,
                                     std::span<const Polynomial> basis);

  // Independent re-check that every S-polynomial reduces to zero.
  static bool verify_groebner(std::span<const Polynomial> basis,
                              const TermOrder& order);
  static bool verify_standard_basis(std::span<const Polynomial> basis);

  static bool ideal_contains(const IdealPresentation& ideal,
                             const Polynomial& f);
  static bool ideal_equal(const IdealPresentation& a,
                          const IdealPresentation& b);

  static IdealPresentation local_standard_basis(
      const IdealPresentation& ideal, const EngineOptions& options = {});
  static IdealPresentation tangent_cone_ideal(
      const IdealPresentation& ideal, const EngineOptions& options = {});

  // (I : x_v), via (I cap <x_v>) / x_v with a tag variable.
  static IdealPresentation quotient_by_variable(const IdealPresentation& ideal,
                                                int var);
  // (I : x_v^inf) for ideals homogeneous under `weights` (all ones for the
  // standard grading).
  static IdealPresentation saturate_by_variable(
      const IdealPresentation& ideal, int var,
      std::span<const long long> weights);

  // Kernel of X_i -> t^{n_i}.
  static IdealPresentation toric_ideal(std::span<const long long> n);
};

// Integer basis of {u : u . n = 0}, size-reduced.
std::vector<std::vector<long long>> lattice_kernel_basis(
    std::span<const long long> n);

struct KomedaParams;

struct CmCheckResult {
  bool cohen_macaulay = false;
  int variable = 0;  // 1-based multiplicity variable tested for regularity
  IdealPresentation tangent_cone{4, {}};
  std::string justification;
};

// The tangent cone of the monomial curve is Cohen-Macaulay iff the
// multiplicity variable is a nonzerodivisor on A/I*, i.e. (I* : X_i) = I*.
CmCheckResult cm_check(const KomedaParams& params);
CmCheckResult cm_check_ideal(const IdealPresentation& tangent_cone,
                             int variable);

}  // namespace tcb
