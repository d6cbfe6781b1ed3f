#include "tcbetti/resolution.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "tcbetti/error.hpp"

namespace tcb {

std::string Resolution::format(const Polynomial& p) const {
  return p.to_string(var_names);
}

Resolution make_chain(int nvars, std::vector<std::string> var_names,
                      std::vector<PolyMatrix> maps) {
  Resolution res;
  res.nvars = nvars;
  res.var_names = std::move(var_names);
  if (maps.empty()) {
    throw Error(ErrorCode::DimensionMismatch, "a chain needs at least one map");
  }
  res.ranks.push_back(maps.front().rows());
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (maps[i].nvars() != nvars) {
      throw Error(ErrorCode::DimensionMismatch,
                  "matrix " + std::to_string(i + 1) +
                      " has the wrong number of variables");
    }
    if (maps[i].rows() != res.ranks.back()) {
      throw Error(ErrorCode::DimensionMismatch,
                  "matrix " + std::to_string(i + 1) + " has " +
                      std::to_string(maps[i].rows()) + " rows, expected " +
                      std::to_string(res.ranks.back()));
    }
    res.ranks.push_back(maps[i].cols());
  }
  res.maps = std::move(maps);
  return res;
}

namespace {

// An entry c * X1^e1 X2^e2 X3^e3 X4^e4 of a displayed matrix; c = 0 is a
// blank.
struct Entry {
  int coeff = 0;
  std::array<int, 4> exps{};
};

constexpr Entry O{};

Entry X(int c, int e1, int e2, int e3, int e4) { return {c, {e1, e2, e3, e4}}; }

using Rows = std::vector<std::vector<Entry>>;

PolyMatrix to_matrix(const Rows& rows, int killed, const char* name) {
  int nr = static_cast<int>(rows.size());
  int nc = static_cast<int>(rows.front().size());
  PolyMatrix m(nr, nc, 3);
  for (int r = 0; r < nr; ++r) {
    for (int c = 0; c < nc; ++c) {
      const Entry& e = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (e.coeff == 0) continue;
      for (int v = 0; v < 4; ++v) {
        if (e.exps[static_cast<std::size_t>(v)] < 0) {
          throw Error(ErrorCode::NegativeExponent,
                      std::string(name) + " entry (" + std::to_string(r + 1) +
                          "," + std::to_string(c + 1) +
                          ") has a negative exponent of X" +
                          std::to_string(v + 1));
        }
      }
      Monomial mono{e.exps[0], e.exps[1], e.exps[2], e.exps[3]};
      m.at(r, c) =
          Polynomial::monomial(4, mono, e.coeff).drop_variable(killed - 1);
    }
  }
  return m;
}

Polynomial closed_form(int c, int e1, int e2, int e3, int e4, int killed) {
  return Polynomial::monomial(4, Monomial{e1, e2, e3, e4}, c)
      .drop_variable(killed - 1);
}

struct Family {
  Rows phi1, phi2, phi3;
};

Family family_n2_lt(int a21, int a1, int, int a3, int a4) {
  return {
      {{X(1, a1, 0, 0, 0), X(1, a21, 0, 0, 1), X(1, 0, 0, a3, 0),
        X(1, 0, 0, 0, a4), X(1, a21 + 1, 0, a3 - 1, 0)}},
      {
          {O, X(1, 0, 0, 0, 1), O, O, X(1, 0, 0, a3 - 1, 0), O, O},
          {O, X(-1, a1 - a21, 0, 0, 0), X(1, 1, 0, a3 - 1, 0),
           X(1, 0, 0, 0, a4 - 1), O, O, X(-1, 0, 0, a3, 0)},
          {X(1, a21 + 1, 0, 0, 0), O, O, O, O, X(1, 0, 0, 0, a4),
           X(1, a21, 0, 0, 1)},
          {O, O, O, X(-1, a21, 0, 0, 0), O, X(-1, 0, 0, a3, 0), O},
          {X(-1, 0, 0, 1, 0), O, X(-1, 0, 0, 0, 1), O,
           X(-1, a1 - a21 - 1, 0, 0, 0), O, O},
      },
      {
          {X(-1, 0, 0, 0, 1), O, O},
          {O, X(1, 0, 0, a3 - 1, 0), O},
          {X(1, 0, 0, 1, 0), X(1, a1 - a21 - 1, 0, 0, 0), O},
          {O, O, X(-1, 0, 0, a3, 0)},
          {O, X(-1, 0, 0, 0, 1), O},
          {O, O, X(1, a21, 0, 0, 0)},
          {X(1, 1, 0, 0, 0), O, X(-1, 0, 0, 0, a4 - 1)},
      },
  };
}

Family family_n2_gt(int a21, int a1, int, int a3, int a4, bool as_printed) {
  // Printed with +X4 at phi3(2,1), which leaves phi2 * phi3 nonzero at rows 3
  // and 5 of column 1; -X4 is the only single-entry fix.
  int s21 = as_printed ? 1 : -1;
  return {
      {{X(1, 0, 0, 1, a4 - 1), X(1, a21, 0, 0, 1), X(1, 0, 0, a3, 0),
        X(1, 0, 0, 0, a4), X(1, a21 + 1, 0, a3 - 1, 0),
        X(1, a1 + a21, 0, 0, 0)}},
      {
          {X(-1, 0, 0, 0, 1), O, O, O, O, X(1, a21, 0, 0, 0), O,
           X(1, 0, 0, a3 - 1, 0), O},
          {O, O, X(-1, a1, 0, 0, 0), X(-1, 1, 0, a3 - 1, 0),
           X(-1, 0, 0, 0, a4 - 1), X(-1, 0, 0, 1, a4 - 2), O, O,
           X(1, 0, 0, a3, 0)},
          {O, X(-1, a21 + 1, 0, 0, 0), O, O, O, O, O, X(-1, 0, 0, 0, a4 - 1),
           X(-1, a21, 0, 0, 1)},
          {X(1, 0, 0, 1, 0), O, O, O, X(1, a21, 0, 0, 0), O, O, O, O},
          {O, X(1, 0, 0, 1, 0), O, X(1, 0, 0, 0, 1), O, O,
           X(-1, a1 - 1, 0, 0, 0), O, O},
          {O, O, X(1, 0, 0, 0, 1), O, O, O, X(1, 0, 0, a3 - 1, 0), O, O},
      },
      {
          {O, X(-1, a21, 0, 0, 0), O, O},
          {X(s21, 0, 0, 0, 1), O, O, O},
          {O, O, X(-1, 0, 0, a3 - 1, 0), O},
          {X(1, 0, 0, 1, 0), O, X(1, a1 - 1, 0, 0, 0), O},
          {O, X(1, 0, 0, 1, 0), O, O},
          {O, X(-1, 0, 0, 0, 1), O, X(-1, 0, 0, a3 - 1, 0)},
          {O, O, X(1, 0, 0, 0, 1), O},
          {O, O, O, X(1, a21, 0, 0, 0)},
          {X(1, 1, 0, 0, 0), O, O, X(-1, 0, 0, 0, a4 - 2)},
      },
  };
}

Family family_n3_lt(int a21, int a1, int a2, int, int a4) {
  return {
      {{X(1, a1, 0, 0, 0), X(1, 0, a2, 0, 0), X(1, a1 - a21 - 1, 1, 0, 0),
        X(1, 0, 0, 0, a4), X(1, 0, 1, 0, a4 - 1), X(1, a1 - 1, 0, 0, 1)}},
      {
          {O, X(-1, 0, 0, 0, 1), O, O, O, O, X(1, 0, 1, 0, 0), O},
          {O, O, X(1, a1 - a21 - 1, 0, 0, 0), O, X(-1, 0, 0, 0, a4 - 1), O,
           O, O},
          {X(-1, 0, 0, 0, a4 - 1), O, X(-1, 0, a2 - 1, 0, 0), O, O,
           X(-1, a21, 0, 0, 1), X(-1, a21 + 1, 0, 0, 0), O},
          {O, O, O, X(1, 0, 1, 0, 0), O, O, O, X(1, a1 - 1, 0, 0, 0)},
          {X(1, a1 - a21 - 1, 0, 0, 0), O, O, X(-1, 0, 0, 0, 1),
           X(1, 0, a2 - 1, 0, 0), O, O, O},
          {O, X(1, 1, 0, 0, 0), O, O, O, X(1, 0, 1, 0, 0), O,
           X(-1, 0, 0, 0, a4 - 1)},
      },
      {
          {O, X(-1, 0, a2 - 1, 0, 0), X(-1, a21, 0, 0, 1)},
          {X(-1, 0, 1, 0, 0), O, O},
          {O, X(1, 0, 0, 0, a4 - 1), O},
          {O, O, X(-1, a1 - 1, 0, 0, 0)},
          {O, X(1, a1 - a21 - 1, 0, 0, 0), O},
          {X(1, 1, 0, 0, 0), O, X(1, 0, 0, 0, a4 - 1)},
          {X(-1, 0, 0, 0, 1), O, O},
          {O, O, X(1, 0, 1, 0, 0)},
      },
  };
}

Family family_n4_lt(int a21, int a1, int a2, int a3, int) {
  return {
      {{X(1, a1, 0, 0, 0), X(1, 0, a2, 0, 0), X(1, 0, 0, a3, 0),
        X(1, 1, a2 - 1, a3 - 1, 0), X(1, a21 + 1, 0, a3 - 1, 0)}},
      {
          {O, X(1, 0, a2, 0, 0), O, O, X(1, 0, 0, a3 - 1, 0), O, O},
          {O, X(-1, a1, 0, 0, 0), X(-1, 1, 0, a3 - 1, 0), O, O, O,
           X(-1, 0, 0, a3, 0)},
          {X(-1, a21 + 1, 0, 0, 0), O, O, O, O, X(-1, 1, a2 - 1, 0, 0),
           X(1, 0, a2, 0, 0)},
          {O, O, X(1, 0, 1, 0, 0), X(-1, a21, 0, 0, 0), O, X(1, 0, 0, 1, 0),
           O},
          {X(1, 0, 0, 1, 0), O, O, X(1, 0, a2 - 1, 0, 0),
           X(-1, a1 - a21 - 1, 0, 0, 0), O, O},
      },
      {
          {O, X(-1, 0, a2 - 1, 0, 0), O},
          {O, O, X(-1, 0, 0, a3 - 1, 0)},
          {X(-1, 0, 0, 1, 0), O, X(1, a1 - 1, 0, 0, 0)},
          {O, X(1, 0, 0, 1, 0), X(1, a1 - a21 - 1, 1, 0, 0)},
          {O, O, X(1, 0, a2, 0, 0)},
          {X(1, 0, 1, 0, 0), X(1, a21, 0, 0, 0), O},
          {X(1, 1, 0, 0, 0), O, O},
      },
  };
}

}  // namespace

Resolution build_resolution(const KomedaParams& p, const CaseTag& tag,
                            Transcription transcription) {
  bool as_printed = transcription == Transcription::AsPrinted;
  int a21 = p.alpha21, a1 = p.alpha1, a2 = p.alpha2, a3 = p.alpha3,
      a4 = p.alpha4;
  std::vector<std::string> res_notes;
  Family fam;
  switch (tag.subcase) {
    case Subcase::N2Lt: fam = family_n2_lt(a21, a1, a2, a3, a4); break;
    case Subcase::N2Gt:
      fam = family_n2_gt(a21, a1, a2, a3, a4, as_printed);
      if (!as_printed) res_notes.push_back("phi3(2,1) = -X4 (printed as X4)");
      break;
    case Subcase::N3Lt: fam = family_n3_lt(a21, a1, a2, a3, a4); break;
    case Subcase::N4Lt: fam = family_n4_lt(a21, a1, a2, a3, a4); break;
    default:
      throw Error(ErrorCode::UnsupportedCase,
                  "no displayed resolution for case " + tag.name());
  }
  int killed = tag.multiplicity_index;
  std::vector<std::string> names;
  for (int v : surviving_variables(killed)) {
    names.push_back("X" + std::to_string(v));
  }
  Resolution res = make_chain(3, std::move(names),
                              {to_matrix(fam.phi1, killed, "phi1"),
                               to_matrix(fam.phi2, killed, "phi2"),
                               to_matrix(fam.phi3, killed, "phi3")});
  res.tag = tag;
  res.params = p;
  res.corrections = std::move(res_notes);
  return res;
}

ComplexCheck check_complex(const Resolution& res) {
  ComplexCheck out;
  for (int i = 1; i < res.length(); ++i) {
    PolyMatrix prod = res.phi(i) * res.phi(i + 1);
    for (int r = 0; r < prod.rows(); ++r) {
      for (int c = 0; c < prod.cols(); ++c) {
        if (!prod.at(r, c).is_zero()) {
          out.product_index = i;
          out.row = r + 1;
          out.col = c + 1;
          out.entry = prod.at(r, c);
          return out;
        }
      }
    }
  }
  out.is_complex = true;
  return out;
}

bool verify_complex(const Resolution& res) {
  return check_complex(res).is_complex;
}

bool is_minimal(const Resolution& res) {
  for (const auto& m : res.maps) {
    for (int r = 0; r < m.rows(); ++r) {
      for (int c = 0; c < m.cols(); ++c) {
        if (m.at(r, c).has_constant_term()) return false;
      }
    }
  }
  return true;
}

BuchsbaumEisenbudReport buchsbaum_eisenbud_check(const Resolution& res) {
  BuchsbaumEisenbudReport out;
  out.complex = verify_complex(res);
  if (!out.complex) {
    out.verdict = "not-a-complex";
    return out;
  }
  int len = res.length();
  for (int i = 1; i <= len; ++i) out.ranks.push_back(rank_with_witness(res.phi(i)));
  auto rank_of = [&](int i) -> long long {
    if (i < 1 || i > len) return 0;
    return out.ranks[static_cast<std::size_t>(i - 1)].rank;
  };
  out.rank_checks.push_back(
      {0, res.ranks[0], rank_of(1), rank_of(1) == res.ranks[0]});
  for (int i = 1; i <= len; ++i) {
    long long expected = res.ranks[static_cast<std::size_t>(i)];
    long long actual = rank_of(i) + rank_of(i + 1);
    out.rank_checks.push_back({i, expected, actual, expected == actual});
  }
  out.ranks_pass = std::all_of(out.rank_checks.begin(), out.rank_checks.end(),
                               [](const RankCheck& c) { return c.passed; });
  out.certificates_pass = true;
  for (int i = 1; i <= len; ++i) {
    int r = static_cast<int>(rank_of(i));
    RegularSequenceCertificate cert;
    if (r > 0) {
      std::vector<Polynomial> gens;
      for (auto& m : nonzero_minors(res.phi(i), r)) {
        gens.push_back(std::move(m.value));
      }
      cert = regular_sequence_certificate(gens, i);
    }
    out.certificates_pass = out.certificates_pass && cert.found;
    out.certificates.push_back(std::move(cert));
  }
  if (!out.ranks_pass) {
    out.verdict = "not-exact";
  } else if (!out.certificates_pass) {
    out.verdict = "inconclusive";
  } else {
    out.verdict = "exact";
  }
  return out;
}

bool MinorReport::all_pass() const { return hard_mismatches() == 0; }

int MinorReport::hard_mismatches() const {
  return static_cast<int>(
      std::count_if(comparisons.begin(), comparisons.end(),
                    [](const MinorComparison& c) { return c.outcome == "mismatch"; }));
}

namespace {

struct NamedMinor {
  int map_index;
  std::vector<int> rows;
  std::vector<int> cols;  // empty: all columns
  Polynomial expected;
};

std::vector<NamedMinor> named_minors(const KomedaParams& p, const CaseTag& tag) {
  int a21 = p.alpha21, a1 = p.alpha1, a2 = p.alpha2, a3 = p.alpha3,
      a4 = p.alpha4;
  int k = tag.multiplicity_index;
  auto f = [&](int c, int e1, int e2, int e3, int e4) {
    return closed_form(c, e1, e2, e3, e4, k);
  };
  switch (tag.subcase) {
    case Subcase::N2Lt:
      return {
          {2, {1, 2, 4, 5}, {1, 5, 6, 7}, f(-1, 0, 0, 3 * a3, 0)},
          {2, {2, 3, 4, 5}, {1, 2, 4, 5}, f(1, 2 * a1, 0, 0, 0)},
          {3, {1, 5, 7}, {}, f(-1, 0, 0, 0, 1 + a4)},
          {3, {2, 3, 4}, {}, f(1, 0, 0, 2 * a3, 0)},
          {3, {3, 6, 7}, {}, f(1, a1, 0, 0, 0)},
      };
    case Subcase::N2Gt:
      return {
          {2, {1, 2, 3, 5, 6}, {1, 3, 4, 5, 8}, f(-1, 0, 0, 0, 1 + 2 * a4)},
          {2, {1, 2, 4, 5, 6}, {1, 2, 7, 8, 9}, f(-1, 0, 0, 3 * a3, 0)},
          {3, {1, 4, 8, 9}, {}, f(1, 2 * a21 + a1, 0, 0, 0)},
          {3, {3, 4, 5, 6}, {}, f(1, 0, 0, 2 * a3, 0)},
          {3, {2, 6, 7, 9}, {}, f(-1, 0, 0, 0, 1 + a4)},
      };
    case Subcase::N3Lt:
      return {
          {2, {1, 2, 3, 5, 6}, {1, 2, 4, 5, 8}, f(-1, 0, 0, 0, 3 * a4 - 1)},
          {2, {2, 3, 4, 5, 6}, {1, 2, 3, 7, 8}, f(-1, 3 * a1 - a21 - 1, 0, 0, 0)},
          {3, {1, 2, 8}, {}, f(-1, 0, a2 + 1, 0, 0)},
          {3, {3, 6, 7}, {}, f(-1, 0, 0, 0, 2 * a4 - 1)},
          {3, {4, 5, 6}, {}, f(1, 2 * a1 - a21 - 1, 0, 0, 0)},
      };
    case Subcase::N4Lt:
      return {
          {2, {1, 3, 4, 5}, {2, 3, 4, 7}, f(1, 0, 3 * a2, 0, 0)},
          {2, {2, 3, 4, 5}, {1, 2, 4, 5}, f(-1, 2 * a1 + a21, 0, 0, 0)},
          {3, {1, 5, 6}, {}, f(-1, 0, 2 * a2, 0, 0)},
          {3, {2, 3, 4}, {}, f(1, 0, 0, 1 + a3, 0)},
          {3, {3, 6, 7}, {}, f(-1, a1 + a21, 0, 0, 0)},
      };
    default:
      throw Error(ErrorCode::UnsupportedCase,
                  "no named minors for case " + tag.name());
  }
}

}  // namespace

MinorReport spot_check_minors(const Resolution& res) {
  if (!res.tag || !res.params) {
    throw Error(ErrorCode::UnsupportedCase,
                "named minors need a resolution built from parameters");
  }
  MinorReport out;
  for (auto& nm : named_minors(*res.params, *res.tag)) {
    const PolyMatrix& m = res.phi(nm.map_index);
    if (nm.cols.empty()) {
      for (int c = 1; c <= m.cols(); ++c) nm.cols.push_back(c);
    }
    MinorComparison cmp;
    cmp.map_index = nm.map_index;
    cmp.rows = nm.rows;
    cmp.cols = nm.cols;
    cmp.computed = minor(m, nm.rows, nm.cols);
    cmp.expected = nm.expected;
    if (cmp.computed == cmp.expected) {
      cmp.outcome = "match";
    } else if (cmp.computed == -cmp.expected) {
      cmp.outcome = "match up to sign";
    } else {
      cmp.outcome = "mismatch";
    }
    out.comparisons.push_back(std::move(cmp));
  }
  return out;
}

ResolutionAudit audit_resolution(const Resolution& res) {
  ResolutionAudit out;
  out.complex = check_complex(res);
  out.minimal = is_minimal(res);
  out.be = buchsbaum_eisenbud_check(res);
  if (res.tag && res.params) out.minors = spot_check_minors(res);
  return out;
}

BettiSequence betti_from_resolution(const Resolution& res,
                                    const ResolutionAudit& audit) {
  if (!audit.complex.is_complex || !audit.minimal ||
      audit.be.verdict != "exact") {
    throw Error(ErrorCode::NotVerified,
                "the resolution has not been verified as minimal and exact");
  }
  if (res.length() != 3 || res.ranks[0] != 1) {
    throw Error(ErrorCode::NotVerified,
                "a Betti sequence needs a length-3 resolution of a cyclic module");
  }
  return {{1, res.ranks[1], res.ranks[2], res.ranks[3]}};
}

namespace {

std::string_view strip(std::string_view s, std::size_t* lead = nullptr) {
  std::size_t b = 0;
  while (b < s.size() && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  std::size_t e = s.size();
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  if (lead) *lead = b;
  return s.substr(b, e - b);
}

bool parse_int(std::string_view s, int* out) {
  if (s.empty() || s.size() > 6) return false;
  int v = 0;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return false;
    v = v * 10 + (ch - '0');
  }
  *out = v;
  return true;
}

}  // namespace

Resolution parse_matrix_chain(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> lines;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    ++lineno;
    std::string_view line = text.substr(pos, nl - pos);
    std::string_view body = strip(line);
    if (!body.empty() && body.front() != '#') lines.emplace_back(lineno, line);
    pos = nl + 1;
  }
  std::size_t at = 0;
  auto fail = [](const std::string& what, int line, int col) -> ParseError {
    return ParseError(what, line, col);
  };
  if (lines.empty()) throw fail("empty input, expected `vars k`", lineno, 1);

  auto [vline, vtext] = lines[at++];
  std::size_t lead = 0;
  std::string_view head = strip(vtext, &lead);
  int nvars = 0;
  if (head.substr(0, 5) != "vars " ||
      !parse_int(strip(head.substr(5)), &nvars)) {
    throw fail("expected `vars k`", vline, static_cast<int>(lead) + 1);
  }
  if (nvars < 1 || nvars > kMaxVars) {
    throw fail("variable count must be between 1 and " +
                   std::to_string(kMaxVars),
               vline, static_cast<int>(lead) + 6);
  }
  std::vector<PolyMatrix> maps;
  std::vector<int> header_lines;
  while (at < lines.size()) {
    auto [mline, mtext] = lines[at++];
    std::string_view h = strip(mtext, &lead);
    int rows = 0, cols = 0;
    std::size_t x = h.find('x', 7);
    if (h.substr(0, 7) != "matrix " || x == std::string_view::npos ||
        !parse_int(strip(h.substr(7, x - 7)), &rows) ||
        !parse_int(strip(h.substr(x + 1)), &cols) || rows == 0 || cols == 0) {
      throw fail("expected `matrix ROWSxCOLS`", mline,
                 static_cast<int>(lead) + 1);
    }
    PolyMatrix m(rows, cols, nvars);
    for (int r = 0; r < rows; ++r) {
      if (at >= lines.size()) {
        throw fail("matrix ends after " + std::to_string(r) + " of " +
                       std::to_string(rows) + " rows",
                   lineno, 1);
      }
      auto [rline, rtext] = lines[at++];
      std::size_t start = 0;
      for (int c = 0; c < cols; ++c) {
        std::size_t semi = rtext.find(';', start);
        bool last = c == cols - 1;
        if (last && semi != std::string_view::npos) {
          throw fail("row has more than " + std::to_string(cols) + " entries",
                     rline, static_cast<int>(semi) + 1);
        }
        if (!last && semi == std::string_view::npos) {
          throw fail("row has " + std::to_string(c + 1) + " entries, expected " +
                         std::to_string(cols),
                     rline, static_cast<int>(rtext.size()) + 1);
        }
        std::size_t end = last ? rtext.size() : semi;
        std::string_view cell = rtext.substr(start, end - start);
        try {
          m.at(r, c) = Polynomial::parse(cell, nvars);
        } catch (const ParseError& e) {
          throw fail(e.what(), rline, static_cast<int>(start) + e.column());
        }
        start = end + 1;
      }
    }
    maps.push_back(std::move(m));
    header_lines.push_back(mline);
  }
  if (maps.empty()) throw fail("no matrices after `vars`", lineno, 1);
  for (std::size_t i = 1; i < maps.size(); ++i) {
    if (maps[i].rows() != maps[i - 1].cols()) {
      throw fail("matrix " + std::to_string(i + 1) + " has " +
                     std::to_string(maps[i].rows()) + " rows but matrix " +
                     std::to_string(i) + " has " +
                     std::to_string(maps[i - 1].cols()) + " columns",
                 header_lines[i], 1);
    }
  }
  return make_chain(nvars, default_var_names(nvars), std::move(maps));
}

std::string format_matrix_chain(const Resolution& res) {
  std::ostringstream os;
  os << "vars " << res.nvars << '\n';
  for (const auto& m : res.maps) {
    os << "matrix " << m.rows() << 'x' << m.cols() << '\n';
    for (int r = 0; r < m.rows(); ++r) {
      for (int c = 0; c < m.cols(); ++c) {
        if (c) os << "; ";
        os << m.at(r, c).to_string();
      }
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace tcb
