#include <doctest.h>

#include <string>
#include <vector>

#include "tcbetti/error.hpp"
#include "tcbetti/groebner.hpp"
#include "tcbetti/komeda.hpp"
#include "tcbetti/resolution.hpp"

using namespace tcb;

namespace {

Polynomial P(const char* s) { return Polynomial::parse(s, 3); }

struct Row {
  KomedaParams p;
  std::vector<int> ranks;
};

// Reference rows carrying an explicit resolution, with (rank phi1..phi3).
const Row kRows[] = {
    {{2, 4, 4, 2, 5}, {1, 4, 3}},
    {{2, 5, 4, 2, 4}, {1, 5, 4}},
    {{3, 6, 3, 4, 6}, {1, 5, 3}},
    {{1, 4, 2, 2, 4}, {1, 4, 3}},
};

Resolution resolution_for(const KomedaParams& p,
                          Transcription t = Transcription::Corrected) {
  return build_resolution(p, classify_case(p), t);
}

// Entry-by-entry products with plain polynomial arithmetic.
bool products_vanish(const Resolution& res) {
  for (int i = 1; i < res.length(); ++i) {
    const auto& a = res.phi(i);
    const auto& b = res.phi(i + 1);
    if (a.cols() != b.rows()) return false;
    for (int r = 0; r < a.rows(); ++r)
      for (int c = 0; c < b.cols(); ++c) {
        Polynomial s(res.nvars);
        for (int k = 0; k < a.cols(); ++k) s += a.at(r, k) * b.at(k, c);
        if (!s.is_zero()) return false;
      }
  }
  return true;
}

Resolution koszul() {
  PolyMatrix phi1(3, {{P("x1"), P("x2"), P("x3")}});
  PolyMatrix phi2(3, {{P("-x2"), P("-x3"), P("0")},
                      {P("x1"), P("0"), P("-x3")},
                      {P("0"), P("x1"), P("x2")}});
  PolyMatrix phi3(3, {{P("x3")}, {P("-x2")}, {P("x1")}});
  return make_chain(3, {"x1", "x2", "x3"}, {phi1, phi2, phi3});
}

std::vector<KomedaParams> valid_tuples(int max) {
  std::vector<KomedaParams> out;
  for (int a1 = 2; a1 <= max; ++a1)
    for (int a21 = 1; a21 < a1 - 1; ++a21)
      for (int a2 = 2; a2 <= max; ++a2)
        for (int a3 = 2; a3 <= max; ++a3)
          for (int a4 = 2; a4 <= max; ++a4) {
            KomedaParams p{a21, a1, a2, a3, a4};
            try {
              validate_params(p);
              out.push_back(p);
            } catch (const Error&) {
            }
          }
  return out;
}

}  // namespace

TEST_CASE("reference rows: complex, ranks, minors, exactness") {
  for (const auto& row : kRows) {
    auto res = resolution_for(row.p);
    CAPTURE(row.p.to_string());
    CHECK(products_vanish(res));
    auto audit = audit_resolution(res);
    CHECK(audit.complex.is_complex);
    CHECK(audit.minimal);
    std::vector<int> ranks;
    for (const auto& r : audit.be.ranks) ranks.push_back(r.rank);
    CHECK(ranks == row.ranks);
    CHECK(audit.be.verdict == "exact");
    REQUIRE(audit.minors.has_value());
    CHECK(audit.minors->hard_mismatches() == 0);
    CHECK(audit.minors->all_pass());
    CHECK(betti_from_resolution(res, audit) == betti_formula(classify_case(row.p)));
  }
}

TEST_CASE("the first map generates the projected tangent cone") {
  for (const auto& p : valid_tuples(4)) {
    auto tag = classify_case(p);
    if (tag.subcase != Subcase::N2Lt && tag.subcase != Subcase::N2Gt &&
        tag.subcase != Subcase::N3Lt && tag.subcase != Subcase::N4Lt)
      continue;
    auto cm = cm_check(p);
    if (!cm.cohen_macaulay) continue;
    CAPTURE(p.to_string());
    auto res = resolution_for(p);
    std::vector<Polynomial> projected;
    for (const auto& g : cm.tangent_cone.generators()) {
      auto d = g.drop_variable(tag.multiplicity_index - 1);
      if (!d.is_zero()) projected.push_back(d);
    }
    std::vector<Polynomial> image;
    for (int c = 0; c < res.phi(1).cols(); ++c) image.push_back(res.phi(1).at(0, c));
    CHECK(GroebnerEngine::ideal_equal(IdealPresentation(3, image),
                                      IdealPresentation(3, projected)));
  }
}

TEST_CASE("a single sign flip breaks the complex") {
  int flips = 0;
  for (const auto& row : kRows) {
    auto base = resolution_for(row.p);
    REQUIRE(verify_complex(base));
    for (int i = 1; i <= base.length(); ++i)
      for (int r = 0; r < base.phi(i).rows(); ++r)
        for (int c = 0; c < base.phi(i).cols(); ++c) {
          if (base.phi(i).at(r, c).is_zero()) continue;
          auto mutated = base;
          mutated.phi(i).at(r, c) = -mutated.phi(i).at(r, c);
          CAPTURE(row.p.to_string());
          CAPTURE(i);
          CAPTURE(r);
          CAPTURE(c);
          CHECK_FALSE(verify_complex(mutated));
          CHECK(audit_resolution(mutated).be.verdict == "not-a-complex");
          ++flips;
        }
  }
  CHECK(flips > 50);
}

TEST_CASE("printed N2_GT third map is not a complex") {
  KomedaParams p{2, 5, 4, 2, 4};
  auto printed = resolution_for(p, Transcription::AsPrinted);
  CHECK_FALSE(verify_complex(printed));
  auto check = check_complex(printed);
  CHECK(check.product_index == 2);
  CHECK_FALSE(check.entry.is_zero());
  auto corrected = resolution_for(p);
  CHECK(verify_complex(corrected));
  CHECK(corrected.corrections.size() == 1);
}

TEST_CASE("only the four explicit families are built") {
  CHECK_THROWS_AS(resolution_for({2, 5, 3, 2, 2}), Error);
  CHECK_THROWS_AS(resolution_for({1, 3, 3, 3, 3}), Error);
}

TEST_CASE("Koszul complex audits as exact") {
  auto k = koszul();
  auto audit = audit_resolution(k);
  CHECK(audit.be.verdict == "exact");
  CHECK(audit.minimal);
  CHECK(betti_from_resolution(k, audit) == BettiSequence{{1, 3, 3, 1}});
}

TEST_CASE("non-minimal and non-exact chains") {
  PolyMatrix phi1(3, {{P("x1"), P("x1")}});
  PolyMatrix phi2(3, {{P("1")}, {P("-1")}});
  auto chain = make_chain(3, {"x1", "x2", "x3"}, {phi1, phi2});
  CHECK(verify_complex(chain));
  CHECK_FALSE(is_minimal(chain));
  auto audit = audit_resolution(chain);
  CHECK_THROWS_AS(betti_from_resolution(chain, audit), Error);

  // x1 * x2 = 0 is a complex but misses the kernel of phi1 = (x1, x2).
  PolyMatrix a(3, {{P("x1*x2")}});
  PolyMatrix b(3, {{P("0")}});
  auto zero_tail = make_chain(3, {"x1", "x2", "x3"}, {a, b});
  CHECK(audit_resolution(zero_tail).be.verdict != "exact");
  CHECK_THROWS_AS(make_chain(3, {"x1", "x2", "x3"}, {phi1, a}), Error);
}

TEST_CASE("matrix-chain round trip") {
  for (const auto& row : kRows) {
    auto res = resolution_for(row.p);
    auto text = format_matrix_chain(res);
    auto back = parse_matrix_chain(text);
    REQUIRE(back.length() == res.length());
    for (int i = 1; i <= res.length(); ++i) CHECK(back.phi(i) == res.phi(i));
    CHECK(audit_resolution(back).be.verdict == "exact");
  }
}

TEST_CASE("matrix-chain parse errors report line and column") {
  auto location = [](const std::string& text) {
    try {
      parse_matrix_chain(text);
    } catch (const ParseError& e) {
      return std::pair<int, int>{e.line(), e.column()};
    }
    return std::pair<int, int>{-1, -1};
  };
  CHECK(location("vars 3\nmatrix 1x3\nx1; x2; x3 $ 2\n") == std::pair<int, int>{3, 12});
  CHECK(location("vars 3\nmatrix 1x3\nx1; x2\n").first == 3);
  CHECK(location("vars three\n").first == 1);
  CHECK(location("# comment\n\nvars 3\nmatrix 1x2\nx1; x9\n").first == 5);
  // phi1 has 2 columns, phi2 has 3 rows.
  CHECK(location("vars 3\nmatrix 1x2\nx1; x2\nmatrix 3x1\nx1\nx2\nx3\n").first == 4);
}
