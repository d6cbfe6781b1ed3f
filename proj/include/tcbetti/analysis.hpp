#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tcbetti/komeda.hpp"
#include "tcbetti/resolution.hpp"

namespace tcb {

enum class OutputFormat { Text, Json, Csv };

struct InstanceOptions {
  bool oracle = false;
  bool resolutions = false;
  bool homogeneity = true;
  CommonFactor common_factor = CommonFactor::Reject;
};

struct InstanceReport {
  KomedaParams params;
  std::array<long long, 4> n{};
  long long factor = 1;
  CaseTag tag;
  bool pseudo_symmetric = false;
  bool minimally_generated = false;
  std::optional<bool> homog_criterion;
  std::optional<bool> homog_apery;

  bool cm = false;
  std::string cm_justification;
  std::vector<Polynomial> tangent_cone;

  // Absent for N3_GT / N4_GT.
  std::optional<BettiSequence> formula;

  bool oracle_run = false;
  std::optional<bool> toric_equals_f;
  std::optional<BettiSequence> oracle;
  std::string oracle_method;
  // Tangent cone of <f1..f5> when that ideal is not the toric ideal.
  std::optional<BettiSequence> f_oracle;
  // Initial forms of a stated standard basis generate I*.
  std::optional<bool> standard_basis_ok;
  // The stated projected generators agree with the recomputation.
  std::optional<bool> projection_ok;

  bool resolution_run = false;
  std::string resolution_verdict;  // empty when not run or not applicable
  std::optional<BettiSequence> resolution_betti;
  std::optional<Resolution> resolution;
  std::optional<ResolutionAudit> audit;

  std::vector<std::string> notes;
  // Each entry is one disagreement; empty means everything checked agrees.
  std::vector<std::string> mismatches;
};

// Throws InvalidParams (and the other komeda errors) before computing.
InstanceReport analyze_instance(const KomedaParams& p,
                                const InstanceOptions& options);

struct Table1Row {
  KomedaParams params;
  std::array<long long, 4> n{};
  BettiSequence beta;
};

// The published table, cell for cell.
const std::vector<Table1Row>& table1_expected();
// Comma-separated rows a21,a1,a2,a3,a4,n1,n2,n3,n4,b0,b1,b2,b3; `#` starts a
// comment line. Throws ParseError.
std::vector<Table1Row> parse_table1_fixture(std::string_view text);

struct Table1Entry {
  Table1Row expected;
  InstanceReport report;
  std::vector<std::string> diffs;  // cell-level, empty when the row matches
};

struct Table1Report {
  std::vector<Table1Entry> rows;
  bool all_match() const;
};

Table1Report run_table1(const std::vector<Table1Row>& expected);

struct IntRange {
  int lo = 0;
  int hi = -1;
};

struct ScanConfig {
  // alpha21, alpha1, alpha2, alpha3, alpha4
  std::array<IntRange, 5> ranges{};
  bool run_oracle = false;
  bool run_resolutions = false;
  bool run_homogeneity = true;
  int jobs = 1;
  int safety_cap = 8;
};

// Every alpha_i in [2, max] and alpha21 in [1, max].
ScanConfig scan_config_up_to(int max_alpha);
// Throws InvalidArgument for inverted ranges, bounds above the cap, or a
// nonpositive worker count.
void validate_scan_config(const ScanConfig& config);

struct ScanSkips {
  long long considered = 0;  // tuples meeting the alpha inequalities
  long long common_factor = 0;
  long long not_minimal = 0;
};

// Valid tuples in lexicographic (alpha21, alpha1, ..., alpha4) order.
std::vector<KomedaParams> scan_tuples(const ScanConfig& config,
                                      ScanSkips* skips = nullptr);

struct ScanSummary {
  ScanSkips skips;
  long long valid = 0;
  long long processed = 0;
  bool interrupted = false;
  std::array<long long, 7> by_case{};  // indexed by Subcase
  long long cm = 0;
  long long non_cm = 0;
  long long cm_without_formula = 0;
  long long homog_agree = 0;
  long long homog_disagree = 0;
  long long oracle_agree = 0;
  long long oracle_disagree = 0;
  long long resolution_exact = 0;
  long long resolution_inconclusive = 0;
  long long resolution_failed = 0;
  long long resolution_betti_agree = 0;
  long long minors_up_to_sign = 0;
  long long instances_with_mismatch = 0;
  long long errors = 0;

  bool clean() const;
};

// Rows are passed to `emit` in tuple order whatever the worker count. Once
// `cancelled` returns true no new tuples are started; rows already finished
// in an unbroken prefix are still emitted and the summary is marked
// interrupted.
using ScanEmitter = std::function<void(const InstanceReport&)>;
ScanSummary run_scan(const ScanConfig& config, const ScanEmitter& emit,
                     const std::function<bool()>& cancelled = {});

// Formatting. All of these are deterministic (no timings).
std::string format_instance(const InstanceReport& r, OutputFormat f);
std::string format_table1(const Table1Report& t, OutputFormat f);

const char* csv_header();
std::string csv_row(const InstanceReport& r);
std::string json_row(const InstanceReport& r);  // one JSON object, no newline
std::string text_row(const InstanceReport& r);  // one line
std::string format_summary(const ScanSummary& s, OutputFormat f);

struct AuditResult {
  Resolution chain;
  ResolutionAudit audit;
};
// Parses a matrix-chain file and audits it; throws ParseError.
AuditResult audit_chain_text(std::string_view text);
std::string format_audit(const AuditResult& a, OutputFormat f);
std::string format_resolution_audit(const Resolution& res,
                                    const ResolutionAudit& audit);

}  // namespace tcb
