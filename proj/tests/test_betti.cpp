#include <doctest.h>

#include <functional>
#include <random>
#include <vector>

#include "tcbetti/betti_oracle.hpp"
#include "tcbetti/error.hpp"
#include "tcbetti/groebner.hpp"
#include "tcbetti/komeda.hpp"

using namespace tcb;

namespace {

Polynomial P(const char* s, int nvars = 3) { return Polynomial::parse(s, nvars); }

std::vector<long long> seq(const BettiSequence& b) {
  return {b.beta.begin(), b.beta.end()};
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// dim (A/I)_d for d <= top, counting monomials outside the monomial ideal.
std::vector<long long> hilbert_function(const std::vector<Monomial>& leads,
                                        int nvars, int top) {
  std::vector<long long> h(static_cast<std::size_t>(top) + 1, 0);
  Monomial m;
  std::function<void(int, int)> walk = [&](int v, int left) {
    if (v == nvars - 1) {
      m[v] = left;
      for (const auto& l : leads)
        if (l.divides(m)) return;
      ++h[static_cast<std::size_t>(m.total_degree())];
      return;
    }
    for (int e = 0; e <= left; ++e) {
      m[v] = e;
      walk(v + 1, left - e);
    }
    m[v] = 0;
  };
  for (int d = 0; d <= top; ++d) walk(0, d);
  return h;
}

// (1 - t)^nvars * sum h_d t^d, truncated at degree top.
std::vector<long long> numerator_from_counts(std::vector<long long> h, int nvars) {
  for (int k = 0; k < nvars; ++k)
    for (std::size_t d = h.size() - 1; d > 0; --d) h[d] -= h[d - 1];
  return h;
}

std::vector<long long> padded(std::vector<long long> v, std::size_t n) {
  v.resize(n, 0);
  return v;
}

std::vector<Monomial> leading_monomials(const std::vector<Polynomial>& gens, int nvars) {
  auto gb = GroebnerEngine::groebner_basis(IdealPresentation(nvars, gens));
  std::vector<Monomial> out;
  for (const auto& g : gb.generators()) out.push_back(g.leading().mono);
  return out;
}

void check_euler(const std::vector<Polynomial>& gens, int nvars,
                 const std::map<std::pair<int, int>, long long>& graded) {
  const int top = 40;
  auto leads = leading_monomials(gens, nvars);
  auto counted = numerator_from_counts(hilbert_function(leads, nvars, top), nvars);
  auto euler = euler_characteristic(graded);
  REQUIRE(euler.size() < static_cast<std::size_t>(top));
  CHECK(padded(euler, top + 1) == counted);
  std::vector<Polynomial> lead_polys;
  for (const auto& m : leads) lead_polys.push_back(Polynomial::monomial(nvars, m));
  CHECK(padded(hilbert_numerator(lead_polys, nvars), top + 1) == counted);
}

}  // namespace

TEST_CASE("Koszul complex on three variables") {
  std::vector<Polynomial> m{P("x1"), P("x2"), P("x3")};
  auto r = monomial_betti(m, 3);
  CHECK(seq(r.betti) == std::vector<long long>{1, 3, 3, 1});
  auto g = graded_betti_general(IdealPresentation(3, m));
  CHECK(seq(g.betti) == std::vector<long long>{1, 3, 3, 1});
  CHECK(g.graded.at({3, 3}) == 1);
  CHECK(hilbert_numerator(m, 3) == std::vector<long long>{1, -3, 3, -1});
}

TEST_CASE("small monomial ideals") {
  auto r = monomial_betti({P("x1^2"), P("x1*x2")}, 3);
  CHECK(seq(r.betti) == std::vector<long long>{1, 2, 1, 0});
  // The square of the maximal ideal: Eagon-Northcott, (1,6,8,3).
  auto sq = monomial_betti({P("x1^2"), P("x1*x2"), P("x1*x3"), P("x2^2"),
                            P("x2*x3"), P("x3^2")}, 3);
  CHECK(seq(sq.betti) == std::vector<long long>{1, 6, 8, 3});
  CHECK_THROWS_AS(monomial_betti({P("x1 - x2")}, 3), Error);
}

TEST_CASE("monomial complete intersections have binomial Betti numbers") {
  auto r = monomial_betti({P("x1^3"), P("x2^2"), P("x3^4")}, 3);
  for (int i = 0; i <= 3; ++i) CHECK(r.betti[static_cast<std::size_t>(i)] == binomial(3, i));
}

TEST_CASE("random monomial ideals: Taylor bound, Euler identity, box independence") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> e(0, 3), count(1, 5);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Polynomial> gens;
    int k = count(rng);
    for (int i = 0; i < k; ++i) {
      Monomial m;
      for (int v = 0; v < 3; ++v) m[v] = e(rng);
      if (m.is_one()) m[0] = 1;
      gens.push_back(Polynomial::monomial(3, m));
    }
    auto lattice = monomial_betti(gens, 3);
    auto box = monomial_betti(gens, 3, true);
    CHECK(lattice.betti == box.betti);
    CHECK(lattice.table.entries == box.table.entries);
    std::vector<Monomial> ms;
    for (const auto& g : gens) ms.push_back(g.leading().mono);
    int r = static_cast<int>(minimalize(ms).size());
    CHECK(lattice.betti[1] == r);
    for (int i = 0; i <= 3; ++i)
      CHECK(lattice.betti[static_cast<std::size_t>(i)] <= binomial(r, i));
    CHECK(lattice.betti.alternating_sum() == 0);
    check_euler(gens, 3, lattice.table.graded());
  }
}

TEST_CASE("graded Betti numbers of non-monomial ideals") {
  // Twisted cubic: (1,3,2).
  std::vector<Polynomial> cubic{P("x1*x3 - x2^2"), P("x1*x2 - x3^2"), P("x1^2 - x2*x3")};
  auto c = graded_betti_general(IdealPresentation(3, cubic));
  CHECK(c.graded.at({1, 2}) == 3);
  check_euler(cubic, 3, c.graded);
  // Two quadrics without common factor: complete intersection.
  std::vector<Polynomial> ci{P("x1^2 - x2*x3"), P("x2^2 + x1*x3")};
  auto g = graded_betti_general(IdealPresentation(3, ci));
  CHECK(seq(g.betti) == std::vector<long long>{1, 2, 1, 0});
  CHECK(g.graded.at({2, 4}) == 1);
  check_euler(ci, 3, g.graded);
  CHECK_THROWS_AS(graded_betti_general(IdealPresentation(3, {P("x1 - x2^2")})), Error);
}

TEST_CASE("Euler identity on projected tangent cones") {
  int checked = 0;
  for (int a1 = 3; a1 <= 4; ++a1)
    for (int a21 = 1; a21 < a1 - 1; ++a21)
      for (int a2 = 2; a2 <= 4; ++a2)
        for (int a3 = 2; a3 <= 4; ++a3)
          for (int a4 = 2; a4 <= 4; ++a4) {
            KomedaParams p{a21, a1, a2, a3, a4};
            try {
              validate_params(p);
            } catch (const Error&) {
              continue;
            }
            auto cm = cm_check(p);
            if (!cm.cohen_macaulay) continue;
            int kill = multiplicity_index(p) - 1;
            std::vector<Polynomial> projected;
            for (const auto& g : cm.tangent_cone.generators()) {
              auto d = g.drop_variable(kill);
              if (!d.is_zero()) projected.push_back(d);
            }
            auto r = graded_betti_general(IdealPresentation(3, projected));
            check_euler(projected, 3, r.graded);
            CHECK(r.betti.alternating_sum() == 0);
            ++checked;
          }
  CHECK(checked > 10);
}
