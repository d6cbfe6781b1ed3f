#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tcbetti/komeda.hpp"
#include "tcbetti/poly_matrix.hpp"

namespace tcb {

// A finite free complex 0 -> F_L -> ... -> F_1 -> F_0 given by its maps
// maps[0] = phi_1 (r0 x r1), maps[1] = phi_2 (r1 x r2), ...
struct Resolution {
  int nvars = 3;
  std::vector<std::string> var_names;
  std::vector<int> ranks;  // r0, r1, ..., rL
  std::vector<PolyMatrix> maps;
  std::optional<CaseTag> tag;
  std::optional<KomedaParams> params;
  // Entries changed from the printed matrices, one line each.
  std::vector<std::string> corrections;

  int length() const { return static_cast<int>(maps.size()); }
  const PolyMatrix& phi(int i) const {
    return maps[static_cast<std::size_t>(i - 1)];
  }
  PolyMatrix& phi(int i) { return maps[static_cast<std::size_t>(i - 1)]; }
  std::string format(const Polynomial& p) const;
};

// Checks shapes and builds the rank list; throws DimensionMismatch.
Resolution make_chain(int nvars, std::vector<std::string> var_names,
                      std::vector<PolyMatrix> maps);

enum class Transcription {
  Corrected,  // printed matrices with the sign errata applied
  AsPrinted,
};

// The displayed complexes over the three surviving variables. Throws
// UnsupportedCase for tags without a displayed resolution and
// NegativeExponent naming the entry if an exponent goes below zero.
Resolution build_resolution(const KomedaParams& p, const CaseTag& tag,
                            Transcription transcription = Transcription::Corrected);

struct ComplexCheck {
  bool is_complex = false;
  // First nonzero entry of some phi_i * phi_(i+1), when there is one.
  int product_index = 0;  // i
  int row = 0;            // 1-based
  int col = 0;
  Polynomial entry;
};
ComplexCheck check_complex(const Resolution& res);
bool verify_complex(const Resolution& res);

// No entry has a nonzero constant term.
bool is_minimal(const Resolution& res);

struct RankCheck {
  int index = 0;  // exactness at F_index
  long long expected = 0;
  long long actual = 0;
  bool passed = false;
};

struct BuchsbaumEisenbudReport {
  bool complex = false;
  std::vector<RankResult> ranks;  // per phi_i
  std::vector<RankCheck> rank_checks;
  bool ranks_pass = false;
  std::vector<RegularSequenceCertificate> certificates;  // per phi_i
  bool certificates_pass = false;
  std::string verdict;  // "exact", "inconclusive", "not-a-complex", "not-exact"
};

// Condition (a): rank phi_i + rank phi_(i+1) = r_i for i >= 1, and
// rank phi_1 = r_0. Condition (b): the ideal of rank(phi_i)-minors holds a
// regular sequence of length i, certified by nonzero / pure-power / coprime
// witnesses only. A failed rank check gives "not-exact"; ranks that pass
// with a missing certificate give "inconclusive".
BuchsbaumEisenbudReport buchsbaum_eisenbud_check(const Resolution& res);

struct MinorComparison {
  int map_index = 0;  // i of phi_i
  std::vector<int> rows;  // 1-based
  std::vector<int> cols;
  Polynomial expected;
  Polynomial computed;
  std::string outcome;  // "match", "match up to sign", "mismatch"
};

struct MinorReport {
  std::vector<MinorComparison> comparisons;
  bool all_pass() const;  // match or match up to sign
  int hard_mismatches() const;
};

// The named minors with their closed forms, per case; UnsupportedCase if the
// resolution carries no case tag with stated minors.
MinorReport spot_check_minors(const Resolution& res);

struct ResolutionAudit {
  ComplexCheck complex;
  bool minimal = false;
  BuchsbaumEisenbudReport be;
  std::optional<MinorReport> minors;
};

ResolutionAudit audit_resolution(const Resolution& res);

// (1, r1, r2, r3); NotVerified unless the audit shows a complex, minimal
// entries and an "exact" verdict, or the chain is not of length 3 from a
// cyclic module.
BettiSequence betti_from_resolution(const Resolution& res,
                                    const ResolutionAudit& audit);

// Matrix-chain text: `vars k`, then blocks `matrix RxC` followed by R lines
// of C `;`-separated polynomials in x1..xk. Blank lines and lines starting
// with `#` are ignored. Errors are ParseError with a 1-based line/column.
Resolution parse_matrix_chain(std::string_view text);
// Writes in the same format with variables renamed to x1..xk.
std::string format_matrix_chain(const Resolution& res);

}  // namespace tcb
