#include <sstream>

#include <json.hpp>

#include "tcbetti/analysis.hpp"

namespace tcb {

using json = nlohmann::ordered_json;

namespace {

const std::vector<std::string>& curve_names() {
  static const std::vector<std::string> names = {"X1", "X2", "X3", "X4"};
  return names;
}

std::string tuple_string(const std::array<long long, 4>& n) {
  std::ostringstream os;
  os << '(' << n[0] << ',' << n[1] << ',' << n[2] << ',' << n[3] << ')';
  return os.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

json betti_json(const std::optional<BettiSequence>& b) {
  if (!b) return nullptr;
  return json(b->beta);
}

std::string opt_betti(const std::optional<BettiSequence>& b) {
  return b ? b->to_string() : "-";
}

json minor_json(const Resolution& res, const MinorComparison& c) {
  return {{"map", c.map_index},
          {"rows", c.rows},
          {"cols", c.cols},
          {"expected", res.format(c.expected)},
          {"computed", res.format(c.computed)},
          {"outcome", c.outcome}};
}

json audit_json(const Resolution& res, const ResolutionAudit& a) {
  json j;
  j["variables"] = res.var_names;
  j["free_ranks"] = res.ranks;
  j["corrections"] = res.corrections;
  j["complex"] = a.complex.is_complex;
  if (!a.complex.is_complex) {
    j["first_nonzero_product"] = {{"product", a.complex.product_index},
                                  {"row", a.complex.row},
                                  {"col", a.complex.col},
                                  {"entry", res.format(a.complex.entry)}};
  }
  j["minimal"] = a.minimal;
  json ranks = json::array();
  for (const auto& r : a.be.ranks) {
    ranks.push_back({{"rank", r.rank},
                     {"witness_rows", r.witness_rows},
                     {"witness_cols", r.witness_cols},
                     {"witness_minor", res.format(r.witness_minor)},
                     {"upper_bound", r.upper_bound_proof}});
  }
  j["ranks"] = ranks;
  json checks = json::array();
  for (const auto& c : a.be.rank_checks) {
    checks.push_back({{"index", c.index},
                      {"expected", c.expected},
                      {"actual", c.actual},
                      {"passed", c.passed}});
  }
  j["rank_checks"] = checks;
  json certs = json::array();
  for (std::size_t i = 0; i < a.be.certificates.size(); ++i) {
    const auto& c = a.be.certificates[i];
    json w = json::array();
    for (const auto& p : c.witnesses) w.push_back(res.format(p));
    certs.push_back({{"map", i + 1},
                     {"length", i + 1},
                     {"found", c.found},
                     {"kind", c.kind},
                     {"witnesses", w}});
  }
  j["certificates"] = certs;
  if (a.minors) {
    json m = json::array();
    for (const auto& c : a.minors->comparisons) m.push_back(minor_json(res, c));
    j["named_minors"] = m;
  }
  j["verdict"] = a.be.verdict;
  return j;
}

json instance_json(const InstanceReport& r) {
  json j;
  const auto& p = r.params;
  j["alpha"] = {p.alpha21, p.alpha1, p.alpha2, p.alpha3, p.alpha4};
  j["n"] = r.n;
  if (r.factor != 1) j["common_factor"] = r.factor;
  j["mult_index"] = r.tag.multiplicity_index;
  j["case"] = r.tag.name();
  j["pseudo_symmetric"] = r.pseudo_symmetric;
  j["minimally_generated"] = r.minimally_generated;
  j["homog_criterion"] = r.homog_criterion ? json(*r.homog_criterion) : json(nullptr);
  j["homog_apery"] = r.homog_apery ? json(*r.homog_apery) : json(nullptr);
  j["cm"] = r.cm;
  j["formula_betti"] = betti_json(r.formula);
  if (r.oracle_run) {
    j["toric_equals_f"] = r.toric_equals_f ? json(*r.toric_equals_f) : json(nullptr);
    j["oracle_betti"] = betti_json(r.oracle);
    j["oracle_method"] = r.oracle_method;
    if (r.f_oracle) j["f_oracle_betti"] = betti_json(r.f_oracle);
    j["standard_basis_ok"] =
        r.standard_basis_ok ? json(*r.standard_basis_ok) : json(nullptr);
    j["projection_ok"] = r.projection_ok ? json(*r.projection_ok) : json(nullptr);
  }
  if (r.resolution_run) {
    j["resolution_verdict"] = r.resolution_verdict;
    j["resolution_betti"] = betti_json(r.resolution_betti);
  }
  j["notes"] = r.notes;
  j["mismatches"] = r.mismatches;
  return j;
}

}  // namespace

std::string format_resolution_audit(const Resolution& res,
                                    const ResolutionAudit& a) {
  std::ostringstream os;
  os << "variables:";
  for (const auto& v : res.var_names) os << ' ' << v;
  os << "\nfree ranks:";
  for (int r : res.ranks) os << ' ' << r;
  os << '\n';
  for (const auto& c : res.corrections) os << "erratum: " << c << '\n';
  for (int i = 1; i <= res.length(); ++i) {
    const auto& m = res.phi(i);
    os << "phi" << i << " (" << m.rows() << 'x' << m.cols() << "):\n";
    for (int r = 0; r < m.rows(); ++r) {
      os << "  [";
      for (int c = 0; c < m.cols(); ++c) {
        if (c) os << ", ";
        os << res.format(m.at(r, c));
      }
      os << "]\n";
    }
  }
  if (a.complex.is_complex) {
    os << "complex: yes (all consecutive products vanish)\n";
  } else {
    os << "complex: no, phi" << a.complex.product_index << "*phi"
       << a.complex.product_index + 1 << " has entry (" << a.complex.row << ','
       << a.complex.col << ") = " << res.format(a.complex.entry) << '\n';
  }
  os << "minimal: " << yes_no(a.minimal) << " (no entry with a constant term)\n";
  for (std::size_t i = 0; i < a.be.ranks.size(); ++i) {
    const auto& r = a.be.ranks[i];
    os << "rank phi" << i + 1 << " = " << r.rank;
    if (r.rank > 0) {
      os << ", witness rows";
      for (int x : r.witness_rows) os << ' ' << x;
      os << " cols";
      for (int x : r.witness_cols) os << ' ' << x;
      os << " minor " << res.format(r.witness_minor);
    }
    os << "; " << r.upper_bound_proof << '\n';
  }
  for (const auto& c : a.be.rank_checks) {
    if (c.index == 0) {
      os << "condition (a) at F0: rank phi1 = " << c.actual << ", r0 = "
         << c.expected;
    } else {
      os << "condition (a) at F" << c.index << ": rank phi" << c.index
         << " + rank phi" << c.index + 1 << " = " << c.actual << ", r"
         << c.index << " = " << c.expected;
    }
    os << (c.passed ? "  ok" : "  FAILED") << '\n';
  }
  for (std::size_t i = 0; i < a.be.certificates.size(); ++i) {
    const auto& c = a.be.certificates[i];
    os << "condition (b) for phi" << i + 1 << ", length " << i + 1 << ": ";
    if (c.found) {
      os << c.kind << ':';
      for (const auto& w : c.witnesses) os << ' ' << res.format(w);
    } else {
      os << "no certificate";
    }
    os << '\n';
  }
  if (a.minors) {
    for (const auto& c : a.minors->comparisons) {
      os << "named minor phi" << c.map_index << " rows";
      for (int x : c.rows) os << ' ' << x;
      os << " cols";
      for (int x : c.cols) os << ' ' << x;
      os << ": " << res.format(c.computed) << " vs " << res.format(c.expected)
         << "  " << c.outcome << '\n';
    }
  }
  os << "verdict: " << a.be.verdict << '\n';
  return os.str();
}

std::string format_instance(const InstanceReport& r, OutputFormat f) {
  if (f == OutputFormat::Json) return instance_json(r).dump(2) + "\n";
  if (f == OutputFormat::Csv) {
    return std::string(csv_header()) + "\n" + csv_row(r) + "\n";
  }
  std::ostringstream os;
  os << "alpha (a21,a1,a2,a3,a4) = " << r.params.to_string() << '\n';
  os << "n = " << tuple_string(r.n) << '\n';
  os << "multiplicity: n" << r.tag.multiplicity_index << " = "
     << r.n[static_cast<std::size_t>(r.tag.multiplicity_index - 1)] << '\n';
  os << "case: " << r.tag.name() << '\n';
  os << "pseudo-symmetric: " << yes_no(r.pseudo_symmetric)
     << ", minimally generated: " << yes_no(r.minimally_generated) << '\n';
  if (r.homog_criterion) {
    os << "homogeneous: criterion " << yes_no(*r.homog_criterion)
       << ", Apery set " << yes_no(*r.homog_apery) << '\n';
  }
  os << "Cohen-Macaulay tangent cone: " << yes_no(r.cm) << '\n';
  os << "  " << r.cm_justification << '\n';
  os << "tangent cone ideal:";
  for (const auto& g : r.tangent_cone) os << "\n  " << g.to_string(curve_names());
  os << '\n';
  os << "beta (formula): " << opt_betti(r.formula) << '\n';
  if (r.oracle_run) {
    os << "toric ideal = <f1..f5>: "
       << (r.toric_equals_f ? yes_no(*r.toric_equals_f) : "-") << '\n';
    os << "beta (oracle";
    if (!r.oracle_method.empty()) os << ", " << r.oracle_method;
    os << "): " << opt_betti(r.oracle) << '\n';
    if (r.f_oracle) {
      os << "beta (oracle on <f1..f5>): " << r.f_oracle->to_string() << '\n';
    }
    if (r.standard_basis_ok) {
      os << "stated standard basis generates I*: "
         << yes_no(*r.standard_basis_ok) << '\n';
    }
    if (r.projection_ok) {
      os << "stated projection matches: " << yes_no(*r.projection_ok) << '\n';
    }
  }
  if (r.resolution_run) {
    os << "beta (resolution): " << opt_betti(r.resolution_betti) << ", verdict "
       << r.resolution_verdict << '\n';
    if (r.resolution && r.audit) {
      std::istringstream audit(format_resolution_audit(*r.resolution, *r.audit));
      std::string line;
      while (std::getline(audit, line)) os << "  " << line << '\n';
    }
  }
  for (const auto& n : r.notes) os << "note: " << n << '\n';
  for (const auto& m : r.mismatches) os << "MISMATCH: " << m << '\n';
  return os.str();
}

const char* csv_header() {
  return "alpha21,alpha1,alpha2,alpha3,alpha4,n1,n2,n3,n4,mult_index,case,cm,"
         "homog_criterion,homog_apery,beta0,beta1,beta2,beta3,oracle_beta0,"
         "oracle_beta1,oracle_beta2,oracle_beta3,resolution_verdict";
}

std::string csv_row(const InstanceReport& r) {
  std::ostringstream os;
  const auto& p = r.params;
  os << p.alpha21 << ',' << p.alpha1 << ',' << p.alpha2 << ',' << p.alpha3
     << ',' << p.alpha4;
  for (long long x : r.n) os << ',' << x;
  os << ',' << r.tag.multiplicity_index << ',' << r.tag.name() << ','
     << (r.cm ? "true" : "false");
  auto opt_bool = [&](const std::optional<bool>& b) {
    os << ',';
    if (b) os << (*b ? "true" : "false");
  };
  opt_bool(r.homog_criterion);
  opt_bool(r.homog_apery);
  auto betti = [&](const std::optional<BettiSequence>& b) {
    for (int i = 0; i < 4; ++i) {
      os << ',';
      if (b) os << b->beta[static_cast<std::size_t>(i)];
    }
  };
  betti(r.formula);
  betti(r.oracle);
  os << ',' << (r.resolution_run ? r.resolution_verdict : "n/a");
  return os.str();
}

std::string json_row(const InstanceReport& r) { return instance_json(r).dump(); }

std::string text_row(const InstanceReport& r) {
  std::ostringstream os;
  os << r.params.to_string() << " n=" << tuple_string(r.n) << " mult=n"
     << r.tag.multiplicity_index << ' ' << r.tag.name()
     << " cm=" << yes_no(r.cm);
  if (r.homog_criterion) {
    os << " homog=" << yes_no(*r.homog_criterion) << '/'
       << yes_no(*r.homog_apery);
  }
  os << " beta=" << opt_betti(r.formula);
  if (r.oracle_run) os << " oracle=" << opt_betti(r.oracle);
  if (r.resolution_run) {
    os << " resolution=" << r.resolution_verdict;
  }
  for (const auto& m : r.mismatches) os << " !! " << m;
  return os.str();
}

std::string format_summary(const ScanSummary& s, OutputFormat f) {
  json j;
  j["considered"] = s.skips.considered;
  j["skipped_common_factor"] = s.skips.common_factor;
  j["skipped_not_minimal"] = s.skips.not_minimal;
  j["valid"] = s.valid;
  j["processed"] = s.processed;
  j["interrupted"] = s.interrupted;
  json cases;
  for (int c = 0; c < 7; ++c) {
    cases[subcase_name(static_cast<Subcase>(c))] =
        s.by_case[static_cast<std::size_t>(c)];
  }
  j["cases"] = cases;
  j["cm"] = s.cm;
  j["non_cm"] = s.non_cm;
  j["cm_without_formula"] = s.cm_without_formula;
  j["homogeneity_agree"] = s.homog_agree;
  j["homogeneity_disagree"] = s.homog_disagree;
  j["oracle_agree"] = s.oracle_agree;
  j["oracle_disagree"] = s.oracle_disagree;
  j["resolution_exact"] = s.resolution_exact;
  j["resolution_inconclusive"] = s.resolution_inconclusive;
  j["resolution_failed"] = s.resolution_failed;
  j["resolution_betti_agree"] = s.resolution_betti_agree;
  j["minors_up_to_sign"] = s.minors_up_to_sign;
  j["instances_with_mismatch"] = s.instances_with_mismatch;
  j["errors"] = s.errors;
  if (f == OutputFormat::Json) return j.dump(2);
  std::ostringstream os;
  for (const auto& [k, v] : j.items()) {
    if (v.is_object()) {
      for (const auto& [ck, cv] : v.items()) {
        os << "case " << ck << ": " << cv.dump() << '\n';
      }
    } else {
      os << k << ": " << v.dump() << '\n';
    }
  }
  return os.str();
}

std::string format_table1(const Table1Report& t, OutputFormat f) {
  if (f == OutputFormat::Json) {
    json rows = json::array();
    for (const auto& e : t.rows) {
      json row = instance_json(e.report);
      row["expected_n"] = e.expected.n;
      row["expected_betti"] = e.expected.beta.beta;
      row["diffs"] = e.diffs;
      rows.push_back(row);
    }
    json j = {{"rows", rows}, {"all_match", t.all_match()}};
    return j.dump(2) + "\n";
  }
  if (f == OutputFormat::Csv) {
    std::ostringstream os;
    os << csv_header()
       << ",expected_n1,expected_n2,expected_n3,expected_n4,expected_beta0,"
          "expected_beta1,expected_beta2,expected_beta3,match\n";
    for (const auto& e : t.rows) {
      os << csv_row(e.report);
      for (long long x : e.expected.n) os << ',' << x;
      for (long long x : e.expected.beta.beta) os << ',' << x;
      os << ',' << (e.diffs.empty() ? "true" : "false") << '\n';
    }
    return os.str();
  }
  std::ostringstream os;
  os << "row  alpha          n                  case         expected    "
        "formula     oracle      resolution  status\n";
  int i = 0;
  for (const auto& e : t.rows) {
    const auto& r = e.report;
    auto pad = [](std::string s, std::size_t w) {
      if (s.size() < w) s.append(w - s.size(), ' ');
      return s;
    };
    os << pad(std::to_string(++i), 5) << pad(r.params.to_string(), 15)
       << pad(tuple_string(r.n), 19) << pad(r.tag.name(), 13)
       << pad(e.expected.beta.to_string(), 12) << pad(opt_betti(r.formula), 12)
       << pad(opt_betti(r.oracle), 12)
       << pad(r.resolution_run ? opt_betti(r.resolution_betti) : "-", 12)
       << (e.diffs.empty() ? "match" : "MISMATCH") << '\n';
  }
  i = 0;
  for (const auto& e : t.rows) {
    ++i;
    for (const auto& d : e.diffs) os << "row " << i << ": " << d << '\n';
    for (const auto& n : e.report.notes) os << "row " << i << " note: " << n << '\n';
    if (e.report.f_oracle) {
      os << "row " << i << " note: oracle on <f1..f5> gives "
         << e.report.f_oracle->to_string() << '\n';
    }
  }
  long long matched = 0;
  for (const auto& e : t.rows) matched += e.diffs.empty() ? 1 : 0;
  os << matched << '/' << t.rows.size() << " rows match\n";
  return os.str();
}

std::string format_audit(const AuditResult& a, OutputFormat f) {
  if (f == OutputFormat::Json) {
    return audit_json(a.chain, a.audit).dump(2) + "\n";
  }
  return format_resolution_audit(a.chain, a.audit);
}

}  // namespace tcb
