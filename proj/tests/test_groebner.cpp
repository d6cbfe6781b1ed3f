#include <doctest.h>

#include <algorithm>
#include <functional>
#include <vector>

#include "tcbetti/error.hpp"
#include "tcbetti/groebner.hpp"
#include "tcbetti/komeda.hpp"

using namespace tcb;

namespace {

Polynomial P(const char* s, int nvars = 4) { return Polynomial::parse(s, nvars); }

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

// Test-side grevlex leading term and naive multivariate division.
const Term& lead(const Polynomial& f) {
  const Term* best = &f.terms()[0];
  for (const auto& t : f.terms())
    if (grevlex_compare(t.mono, best->mono, f.nvars()) > 0) best = &t;
  return *best;
}

Polynomial reduce(Polynomial f, const std::vector<Polynomial>& g) {
  Polynomial rem(f.nvars());
  while (!f.is_zero()) {
    Term lt = lead(f);
    bool divided = false;
    for (const auto& h : g) {
      const Term& lh = lead(h);
      if (lh.mono.divides(lt.mono)) {
        f -= h.times_monomial(lt.mono / lh.mono, lt.coeff / lh.coeff);
        divided = true;
        break;
      }
    }
    if (!divided) {
      Polynomial t = Polynomial::monomial(f.nvars(), lt.mono, lt.coeff);
      rem += t;
      f -= t;
    }
  }
  return rem;
}

bool s_pairs_reduce_to_zero(const std::vector<Polynomial>& g) {
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      const Term& a = lead(g[i]);
      const Term& b = lead(g[j]);
      Monomial l = Monomial::lcm(a.mono, b.mono);
      Polynomial s = g[i].times_monomial(l / a.mono, 1 / a.coeff) -
                     g[j].times_monomial(l / b.mono, 1 / b.coeff);
      if (!reduce(s, g).is_zero()) return false;
    }
  return true;
}

// Number of monomials outside the initial ideal; -1 if infinite.
long long count_standard_monomials(const std::vector<Polynomial>& gb, int nvars) {
  std::vector<Monomial> leads;
  for (const auto& g : gb) leads.push_back(lead(g).mono);
  std::vector<int> cap(static_cast<std::size_t>(nvars), -1);
  for (const auto& m : leads)
    if (m.support_size() == 1)
      for (int v = 0; v < nvars; ++v)
        if (m[v] > 0) {
          int& c = cap[static_cast<std::size_t>(v)];
          c = c < 0 ? m[v] : std::min(c, m[v]);
        }
  for (int c : cap)
    if (c < 0) return -1;
  long long count = 0;
  Monomial m;
  std::function<void(int)> walk = [&](int v) {
    if (v == nvars) {
      for (const auto& l : leads)
        if (l.divides(m)) return;
      ++count;
      return;
    }
    for (int e = 0; e < cap[static_cast<std::size_t>(v)]; ++e) {
      m[v] = e;
      walk(v + 1);
    }
    m[v] = 0;
  };
  walk(0);
  return count;
}

}  // namespace

TEST_CASE("S-polynomial recertification of computed Groebner bases") {
  std::vector<std::vector<Polynomial>> inputs = {
      {P("x1^2 - x2*x3", 3), P("x2^2 - x1*x3", 3), P("x3^2 - x1*x2", 3)},
      {P("x1^3 - x2", 3), P("x1*x2 - x3^2", 3)},
      {P("x1*x2 - x3*x4"), P("x1^2 - x4^3"), P("x2^3 - x1*x3")},
  };
  for (const auto& p : valid_tuples(3)) inputs.push_back(toric_generators(p));
  for (const auto& gens : inputs) {
    int n = gens.front().nvars();
    auto gb = GroebnerEngine::groebner_basis(IdealPresentation(n, gens));
    CHECK(s_pairs_reduce_to_zero(gb.generators()));
    CHECK(GroebnerEngine::verify_groebner(gb.generators(), TermOrder::grevlex(n)));
    for (const auto& g : gens) CHECK(reduce(g, gb.generators()).is_zero());
  }
}

TEST_CASE("a non-basis fails recertification") {
  std::vector<Polynomial> g{P("x1^2 - x2", 3), P("x1*x2 - x3", 3)};
  CHECK_FALSE(s_pairs_reduce_to_zero(g));
  CHECK_FALSE(GroebnerEngine::verify_groebner(g, TermOrder::grevlex(3)));
}

TEST_CASE("ideal membership and equality") {
  IdealPresentation i(3, {P("x1^2 - x2*x3", 3), P("x2^2 - x1*x3", 3)});
  CHECK(GroebnerEngine::ideal_contains(i, P("x1^2*x2 - x2^2*x3", 3)));
  CHECK_FALSE(GroebnerEngine::ideal_contains(i, P("x1", 3)));
  IdealPresentation j(3, {P("x2^2 - x1*x3", 3), P("x1^2 - x2*x3 + x2^2 - x1*x3", 3)});
  CHECK(GroebnerEngine::ideal_equal(i, j));
}

TEST_CASE("toric ideals of twisted cubic and Komeda semigroups") {
  std::vector<long long> cubic{3, 4, 5};
  auto t = GroebnerEngine::toric_ideal(cubic);
  IdealPresentation expected(3, {P("x1^3 - x2*x3", 3), P("x2^2 - x1*x3", 3),
                                 P("x3^2 - x1^2*x2", 3)});
  CHECK(GroebnerEngine::ideal_equal(t, expected));
  for (const auto& p : valid_tuples(4)) {
    auto n = semigroup_generators(p);
    auto toric = GroebnerEngine::toric_ideal(n);
    for (const auto& g : toric.generators()) {
      REQUIRE(g.size() == 2);
      CHECK(s_degree(g.terms()[0].mono, n) == s_degree(g.terms()[1].mono, n));
    }
    CHECK(GroebnerEngine::ideal_equal(IdealPresentation(4, toric_generators(p)), toric));
  }
}

TEST_CASE("local standard basis and tangent cone") {
  // Plane cusp: tangent cone of y^2 - x^3 is y^2.
  IdealPresentation cusp(2, {Polynomial::parse("x2^2 - x1^3", 2)});
  auto tc = GroebnerEngine::tangent_cone_ideal(cusp);
  CHECK(GroebnerEngine::ideal_equal(
      tc, IdealPresentation(2, {Polynomial::parse("x2^2", 2)})));
  auto sb = GroebnerEngine::local_standard_basis(
      IdealPresentation(4, toric_generators({2, 4, 4, 2, 5})));
  CHECK(GroebnerEngine::verify_standard_basis(sb.generators()));
}

TEST_CASE("stated projected generators for an N2_LT instance") {
  KomedaParams p{2, 4, 4, 2, 5};
  auto tag = classify_case(p);
  // X1^4, X1^2 X4, X3^2, X4^5, X1^3 X3 with X2 killed; x1, x2, x3 = X1, X3, X4.
  IdealPresentation stated(3, {P("x1^4", 3), P("x1^2*x3", 3), P("x2^2", 3),
                               P("x3^5", 3), P("x1^3*x2", 3)});
  CHECK(GroebnerEngine::ideal_equal(
      IdealPresentation(3, projected_generators(p, tag)), stated));
  auto cm = cm_check(p);
  std::vector<Polynomial> projected;
  for (const auto& g : cm.tangent_cone.generators()) {
    auto d = g.drop_variable(1);
    if (!d.is_zero()) projected.push_back(d);
  }
  CHECK(GroebnerEngine::ideal_equal(IdealPresentation(3, projected), stated));
}

TEST_CASE("Cohen-Macaulay test agrees with the multiplicity count") {
  // A/I* has dimension one and the multiplicity variable is a parameter, so
  // length(A/(I* + X_i)) >= n_min with equality exactly when A/I* is CM.
  int cm_count = 0, total = 0;
  for (const auto& p : valid_tuples(4)) {
    auto n = semigroup_generators(p);
    int mi = multiplicity_index(p);
    auto cm = cm_check(p);
    auto gens = cm.tangent_cone.generators();
    gens.push_back(Polynomial::variable(4, mi - 1));
    auto gb = GroebnerEngine::groebner_basis(IdealPresentation(4, gens));
    long long len = count_standard_monomials(gb.generators(), 4);
    long long e = n[static_cast<std::size_t>(mi - 1)];
    REQUIRE(len >= e);
    CHECK_MESSAGE(cm.cohen_macaulay == (len == e), p.to_string());
    cm_count += cm.cohen_macaulay ? 1 : 0;
    ++total;
  }
  CHECK(cm_count > 0);
  CHECK(cm_count < total);
}
