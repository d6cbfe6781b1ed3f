#include "tcbetti/analysis.hpp"

#include <algorithm>
#include <condition_variable>
#include <map>
#include <mutex>
#include <thread>

#include "tcbetti/betti_oracle.hpp"
#include "tcbetti/error.hpp"
#include "tcbetti/groebner.hpp"

namespace tcb {

namespace {

bool has_displayed_resolution(Subcase s) {
  return s == Subcase::N2Lt || s == Subcase::N2Gt || s == Subcase::N3Lt ||
         s == Subcase::N4Lt;
}

// Betti numbers of A/I* through the projection X_k -> 0, valid when X_k is
// a nonzerodivisor.
BettiSequence projected_betti(const IdealPresentation& cone, int k,
                              std::string* method) {
  std::vector<Polynomial> proj;
  bool monomial = true;
  for (const auto& g : cone.generators()) {
    Polynomial h = g.drop_variable(k - 1);
    if (h.is_zero()) continue;
    monomial = monomial && h.is_monomial();
    proj.push_back(std::move(h));
  }
  if (monomial) {
    if (method) *method = "monomial_betti";
    return monomial_betti(proj, 3).betti;
  }
  if (method) *method = "graded_betti_general";
  return graded_betti_general(IdealPresentation(3, std::move(proj))).betti;
}

void run_oracle(const KomedaParams& p, const IdealPresentation& toric,
                const IdealPresentation& cone, InstanceReport& r) {
  r.oracle_run = true;
  IdealPresentation f(4, toric_generators(p));
  r.toric_equals_f = GroebnerEngine::ideal_equal(f, toric);
  if (!*r.toric_equals_f) {
    r.notes.push_back("<f1..f5> is strictly smaller than the toric ideal");
  }
  if (!r.cm) return;
  try {
    r.oracle = projected_betti(cone, r.tag.multiplicity_index, &r.oracle_method);
  } catch (const Error& e) {
    r.mismatches.push_back(std::string("oracle failed: ") + e.what());
  }
  if (!*r.toric_equals_f) {
    try {
      auto fcone = GroebnerEngine::tangent_cone_ideal(f);
      if (cm_check_ideal(fcone, r.tag.multiplicity_index).cohen_macaulay) {
        r.f_oracle = projected_betti(fcone, r.tag.multiplicity_index, nullptr);
      } else {
        r.notes.push_back("tangent cone of <f1..f5> is not Cohen-Macaulay");
      }
    } catch (const Error& e) {
      r.notes.push_back(std::string("oracle on <f1..f5> failed: ") + e.what());
    }
  }
  if (r.tag.multiplicity_index == 1 || r.tag.subcase == Subcase::N3Gt ||
      r.tag.subcase == Subcase::N4Gt) {
    return;
  }
  auto candidates = standard_basis_candidates(p, r.tag);
  if (candidates.formula_only) return;
  bool any = false;
  for (const auto& cand : candidates.candidates) {
    std::vector<Polynomial> forms;
    for (const auto& g : cand) forms.push_back(g.initial_form());
    if (GroebnerEngine::ideal_equal(IdealPresentation(4, forms), cone)) {
      any = true;
      break;
    }
  }
  r.standard_basis_ok = any;
  if (!any) {
    r.mismatches.push_back(
        "initial forms of the stated standard basis do not generate I*");
  }
  auto diag = check_projected_generators(p, r.tag);
  r.projection_ok = diag.all_match();
  if (!*r.projection_ok) {
    r.mismatches.push_back(
        "stated projected generators differ from the recomputed projection");
  }
}

// Resolution problems count as disagreements only where the Betti formula
// applies, i.e. for Cohen-Macaulay tangent cones.
void run_resolution(const KomedaParams& p, InstanceReport& r) {
  r.resolution_run = true;
  auto& problems = r.cm ? r.mismatches : r.notes;
  try {
    Resolution res = build_resolution(p, r.tag);
    ResolutionAudit audit = audit_resolution(res);
    r.resolution_verdict = audit.be.verdict;
    if (!audit.complex.is_complex) {
      problems.push_back("displayed maps do not form a complex");
    } else if (!audit.minimal) {
      problems.push_back("a resolution entry has a constant term");
    } else if (audit.be.verdict != "exact") {
      problems.push_back("resolution verdict " + audit.be.verdict);
    } else {
      r.resolution_betti = betti_from_resolution(res, audit);
    }
    if (audit.minors && audit.minors->hard_mismatches() > 0) {
      problems.push_back(std::to_string(audit.minors->hard_mismatches()) +
                             " named minor(s) differ from the closed form");
    }
    for (const auto& c : res.corrections) {
      r.notes.push_back("erratum applied: " + c);
    }
    r.resolution = std::move(res);
    r.audit = std::move(audit);
  } catch (const Error& e) {
    r.resolution_verdict = "error";
    problems.push_back(std::string("resolution: ") + e.what());
  }
}

}  // namespace

InstanceReport analyze_instance(const KomedaParams& p,
                                const InstanceOptions& options) {
  KomedaSemigroup ks = semigroup_from_params(p, options.common_factor);
  InstanceReport r;
  r.params = p;
  r.n = ks.n;
  r.factor = ks.factor;
  if (ks.factor != 1) {
    r.notes.push_back("n1..n4 share the factor " + std::to_string(ks.factor) +
                      "; semigroup checks use n/" + std::to_string(ks.factor));
  }
  r.tag = classify_case(p);
  r.pseudo_symmetric = ks.semigroup.is_pseudo_symmetric();
  r.minimally_generated = ks.semigroup.is_minimally_generated();
  if (!r.pseudo_symmetric) {
    r.notes.push_back("the semigroup is not pseudo-symmetric");
  }
  if (options.homogeneity) {
    r.homog_criterion = is_homogeneous_criterion(p);
    r.homog_apery = ks.semigroup.is_homogeneous();
    if (*r.homog_criterion != *r.homog_apery) {
      r.mismatches.push_back("homogeneity criterion disagrees with the Apery set");
    }
  }
  if (r.tag.subcase != Subcase::N3Gt && r.tag.subcase != Subcase::N4Gt) {
    r.formula = betti_formula(r.tag);
  }

  auto toric = GroebnerEngine::toric_ideal(ks.n);
  auto cone = GroebnerEngine::tangent_cone_ideal(toric);
  auto cm = cm_check_ideal(cone, r.tag.multiplicity_index);
  r.cm = cm.cohen_macaulay;
  r.cm_justification = cm.justification;
  r.tangent_cone = cone.generators();

  if (options.oracle) run_oracle(p, toric, cone, r);
  if (options.resolutions && has_displayed_resolution(r.tag.subcase)) {
    run_resolution(p, r);
  }

  if (r.cm && r.formula) {
    if (r.oracle && *r.oracle != *r.formula) {
      r.mismatches.push_back("oracle " + r.oracle->to_string() +
                             " differs from formula " + r.formula->to_string());
    }
    if (r.resolution_betti && *r.resolution_betti != *r.formula) {
      r.mismatches.push_back("resolution " + r.resolution_betti->to_string() +
                             " differs from formula " + r.formula->to_string());
    }
  }
  if (r.cm && !r.formula) {
    r.notes.push_back("Cohen-Macaulay, but no Betti formula covers " +
                      r.tag.name());
  }
  return r;
}

const std::vector<Table1Row>& table1_expected() {
  static const std::vector<Table1Row> rows = {
      {{2, 5, 3, 2, 2}, {7, 12, 13, 22}, {{1, 5, 6, 2}}},
      {{2, 4, 4, 2, 4}, {25, 19, 22, 26}, {{1, 5, 6, 2}}},
      {{2, 4, 4, 2, 5}, {33, 23, 28, 26}, {{1, 5, 7, 3}}},
      {{2, 5, 4, 2, 4}, {25, 20, 35, 30}, {{1, 6, 9, 4}}},
      {{1, 3, 2, 3, 3}, {13, 14, 9, 15}, {{1, 5, 6, 2}}},
      {{3, 6, 3, 4, 6}, {61, 82, 51, 63}, {{1, 6, 8, 3}}},
      {{1, 3, 2, 2, 4}, {13, 11, 12, 9}, {{1, 5, 6, 2}}},
      {{1, 4, 2, 2, 4}, {13, 12, 19, 11}, {{1, 5, 7, 3}}},
  };
  return rows;
}

std::vector<Table1Row> parse_table1_fixture(std::string_view text) {
  std::vector<Table1Row> out;
  int line = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view s = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line;
    std::size_t first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || s[first] == '#') continue;
    std::vector<long long> vals;
    std::size_t i = 0;
    while (i <= s.size()) {
      std::size_t comma = s.find(',', i);
      if (comma == std::string_view::npos) comma = s.size();
      std::string_view cell = s.substr(i, comma - i);
      std::size_t b = cell.find_first_not_of(" \t\r");
      std::size_t e = cell.find_last_not_of(" \t\r");
      if (b == std::string_view::npos) {
        throw ParseError("empty cell", line, static_cast<int>(i) + 1);
      }
      long long v = 0;
      for (std::size_t k = b; k <= e; ++k) {
        char ch = cell[k];
        if (ch < '0' || ch > '9' || v > 1000000000LL) {
          throw ParseError("expected a nonnegative integer", line,
                           static_cast<int>(i + k) + 1);
        }
        v = v * 10 + (ch - '0');
      }
      vals.push_back(v);
      i = comma + 1;
    }
    if (vals.size() != 13) {
      throw ParseError("expected 13 cells, found " + std::to_string(vals.size()),
                       line, 1);
    }
    Table1Row row;
    auto v = [&](int k) { return static_cast<int>(vals[static_cast<std::size_t>(k)]); };
    row.params = {v(0), v(1), v(2), v(3), v(4)};
    for (int k = 0; k < 4; ++k) {
      row.n[static_cast<std::size_t>(k)] = vals[static_cast<std::size_t>(5 + k)];
      row.beta.beta[static_cast<std::size_t>(k)] = vals[static_cast<std::size_t>(9 + k)];
    }
    out.push_back(row);
  }
  return out;
}

bool Table1Report::all_match() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const Table1Entry& e) { return e.diffs.empty(); });
}

Table1Report run_table1(const std::vector<Table1Row>& expected) {
  InstanceOptions opt;
  opt.oracle = true;
  opt.resolutions = true;
  opt.common_factor = CommonFactor::Divide;
  Table1Report out;
  for (const auto& row : expected) {
    Table1Entry e;
    e.expected = row;
    e.report = analyze_instance(row.params, opt);
    const auto& r = e.report;
    for (int k = 0; k < 4; ++k) {
      auto uk = static_cast<std::size_t>(k);
      if (r.n[uk] != row.n[uk]) {
        e.diffs.push_back("n" + std::to_string(k + 1) + ": expected " +
                          std::to_string(row.n[uk]) + ", computed " +
                          std::to_string(r.n[uk]));
      }
    }
    auto compare = [&](const char* what, const std::optional<BettiSequence>& b) {
      if (!b) {
        e.diffs.push_back(std::string("beta (") + what + "): not computed");
      } else if (*b != row.beta) {
        e.diffs.push_back(std::string("beta (") + what + "): expected " +
                          row.beta.to_string() + ", computed " + b->to_string());
      }
    };
    compare("formula", r.formula);
    compare("oracle", r.oracle);
    if (r.resolution_run) compare("resolution", r.resolution_betti);
    if (!r.cm) e.diffs.push_back("tangent cone is not Cohen-Macaulay");
    for (const auto& m : r.mismatches) {
      bool covered = m.rfind("oracle (", 0) == 0 || m.rfind("resolution (", 0) == 0;
      if (!covered) e.diffs.push_back(m);
    }
    out.rows.push_back(std::move(e));
  }
  return out;
}

ScanConfig scan_config_up_to(int max_alpha) {
  ScanConfig c;
  c.ranges[0] = {1, max_alpha};
  for (std::size_t i = 1; i < 5; ++i) c.ranges[i] = {2, max_alpha};
  return c;
}

void validate_scan_config(const ScanConfig& config) {
  static const char* names[] = {"alpha21", "alpha1", "alpha2", "alpha3",
                                "alpha4"};
  for (std::size_t i = 0; i < 5; ++i) {
    const auto& r = config.ranges[i];
    if (r.lo > r.hi) {
      throw Error(ErrorCode::InvalidArgument,
                  std::string("empty range for ") + names[i]);
    }
    if (r.lo < 0 || r.hi > config.safety_cap) {
      throw Error(ErrorCode::InvalidArgument,
                  std::string("range for ") + names[i] + " exceeds the cap " +
                      std::to_string(config.safety_cap));
    }
  }
  if (config.jobs < 1) {
    throw Error(ErrorCode::InvalidArgument, "worker count must be positive");
  }
}

std::vector<KomedaParams> scan_tuples(const ScanConfig& config,
                                      ScanSkips* skips) {
  validate_scan_config(config);
  ScanSkips local;
  std::vector<KomedaParams> out;
  const auto& R = config.ranges;
  for (int a21 = R[0].lo; a21 <= R[0].hi; ++a21)
    for (int a1 = R[1].lo; a1 <= R[1].hi; ++a1)
      for (int a2 = R[2].lo; a2 <= R[2].hi; ++a2)
        for (int a3 = R[3].lo; a3 <= R[3].hi; ++a3)
          for (int a4 = R[4].lo; a4 <= R[4].hi; ++a4) {
            KomedaParams p{a21, a1, a2, a3, a4};
            if (a21 <= 0 || a21 >= a1 - 1 || a1 <= 1 || a2 <= 1 || a3 <= 1 ||
                a4 <= 1) {
              continue;
            }
            ++local.considered;
            if (common_factor(p) != 1) {
              ++local.common_factor;
              continue;
            }
            try {
              validate_params(p);
            } catch (const Error&) {
              ++local.not_minimal;
              continue;
            }
            out.push_back(p);
          }
  if (skips) *skips = local;
  return out;
}

bool ScanSummary::clean() const {
  return homog_disagree == 0 && oracle_disagree == 0 &&
         instances_with_mismatch == 0 && errors == 0;
}

namespace {

void tally(ScanSummary& s, const InstanceReport& r) {
  ++s.processed;
  ++s.by_case[static_cast<std::size_t>(r.tag.subcase)];
  if (r.cm) {
    ++s.cm;
    if (!r.formula) ++s.cm_without_formula;
  } else {
    ++s.non_cm;
  }
  if (r.homog_criterion && r.homog_apery) {
    if (*r.homog_criterion == *r.homog_apery) {
      ++s.homog_agree;
    } else {
      ++s.homog_disagree;
    }
  }
  if (r.oracle && r.formula && r.cm) {
    if (*r.oracle == *r.formula) {
      ++s.oracle_agree;
    } else {
      ++s.oracle_disagree;
    }
  }
  if (r.resolution_run) {
    if (r.resolution_verdict == "exact") {
      ++s.resolution_exact;
    } else if (r.resolution_verdict == "inconclusive") {
      ++s.resolution_inconclusive;
    } else {
      ++s.resolution_failed;
    }
    if (r.resolution_betti && r.formula && *r.resolution_betti == *r.formula) {
      ++s.resolution_betti_agree;
    }
    if (r.audit && r.audit->minors) {
      for (const auto& c : r.audit->minors->comparisons) {
        if (c.outcome == "match up to sign") ++s.minors_up_to_sign;
      }
    }
  }
  if (!r.mismatches.empty()) ++s.instances_with_mismatch;
}

}  // namespace

ScanSummary run_scan(const ScanConfig& config, const ScanEmitter& emit,
                     const std::function<bool()>& cancelled) {
  ScanSummary summary;
  auto tuples = scan_tuples(config, &summary.skips);
  summary.valid = static_cast<long long>(tuples.size());
  InstanceOptions opt;
  opt.oracle = config.run_oracle;
  opt.resolutions = config.run_resolutions;
  opt.homogeneity = config.run_homogeneity;

  std::mutex mu;
  std::condition_variable ready;
  std::map<std::size_t, std::optional<InstanceReport>> done;  // nullopt: error
  std::size_t next_task = 0;
  std::size_t workers_left = 0;

  auto worker = [&] {
    for (;;) {
      std::size_t idx;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (next_task >= tuples.size() || (cancelled && cancelled())) break;
        idx = next_task++;
      }
      std::optional<InstanceReport> r;
      try {
        r = analyze_instance(tuples[idx], opt);
      } catch (const Error& e) {
        InstanceReport bad;
        bad.params = tuples[idx];
        bad.n = semigroup_generators(tuples[idx]);
        bad.mismatches.push_back(std::string("error: ") + e.what());
        r = std::move(bad);
      }
      {
        std::lock_guard<std::mutex> lock(mu);
        done[idx] = std::move(r);
      }
      ready.notify_all();
    }
    {
      std::lock_guard<std::mutex> lock(mu);
      --workers_left;
    }
    ready.notify_all();
  };

  std::size_t nworkers =
      std::min<std::size_t>(static_cast<std::size_t>(config.jobs),
                            std::max<std::size_t>(tuples.size(), 1));
  workers_left = nworkers;
  std::vector<std::thread> pool;
  for (std::size_t i = 0; i < nworkers; ++i) pool.emplace_back(worker);

  std::size_t next_emit = 0;
  for (;;) {
    std::optional<InstanceReport> r;
    {
      std::unique_lock<std::mutex> lock(mu);
      ready.wait(lock, [&] {
        return done.count(next_emit) > 0 || workers_left == 0;
      });
      auto it = done.find(next_emit);
      if (it == done.end()) break;
      r = std::move(it->second);
      done.erase(it);
    }
    if (r->mismatches.size() == 1 &&
        r->mismatches.front().rfind("error: ", 0) == 0) {
      ++summary.errors;
      ++summary.processed;
      ++summary.instances_with_mismatch;
    } else {
      tally(summary, *r);
    }
    emit(*r);
    ++next_emit;
  }
  for (auto& t : pool) t.join();
  summary.interrupted = next_emit < tuples.size();
  return summary;
}

AuditResult audit_chain_text(std::string_view text) {
  AuditResult out;
  out.chain = parse_matrix_chain(text);
  out.audit = audit_resolution(out.chain);
  return out;
}

}  // namespace tcb
