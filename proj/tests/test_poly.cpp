#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "tcbetti/error.hpp"
#include "tcbetti/linalg.hpp"
#include "tcbetti/poly_matrix.hpp"
#include "tcbetti/polynomial.hpp"

using namespace tcb;

namespace {

Polynomial P(const char* s, int nvars = 3) { return Polynomial::parse(s, nvars); }

Polynomial random_poly(std::mt19937& rng, int nvars, int terms, int maxdeg) {
  std::uniform_int_distribution<int> e(0, maxdeg), c(-3, 3);
  Polynomial p(nvars);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    for (int v = 0; v < nvars; ++v) m[v] = e(rng);
    p += Polynomial::monomial(nvars, m, Rational(c(rng)));
  }
  return p;
}

// Permutation expansion, independent of the library's elimination.
Polynomial leibniz(const PolyMatrix& m) {
  int n = m.rows();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial det(m.nvars());
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)])
          ++inversions;
    Polynomial term = Polynomial::constant(m.nvars(), inversions % 2 ? -1 : 1);
    for (int i = 0; i < n; ++i) term *= m.at(i, perm[static_cast<std::size_t>(i)]);
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace

TEST_CASE("parse and print round trip") {
  Polynomial p = P("3*x1^2*x3 - x2 + 1/2");
  CHECK(P(p.to_string().c_str()) == p);
  CHECK(p.total_degree() == 3);
  CHECK(p.low_degree() == 0);
  CHECK(p.has_constant_term());
  CHECK(P("x1*x2 - x3^2").is_homogeneous());
  CHECK_FALSE(P("x1 - x3^2").is_homogeneous());
}

TEST_CASE("parse errors carry a column") {
  try {
    P("x1 + * x2");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.column() > 0);
  }
  CHECK_THROWS_AS(P("x4", 3), ParseError);
}

TEST_CASE("initial form is the least-degree homogeneous part") {
  CHECK(P("x1^3 - x2^2 + x3^2").initial_form() == P("x3^2 - x2^2"));
  CHECK(P("x1^5 - x2^2*x3").initial_form() == P("-x2^2*x3"));
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_poly(rng, 3, 4, 3);
    auto b = random_poly(rng, 3, 4, 3);
    auto c = random_poly(rng, 3, 4, 3);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937 rng(11);
  std::vector<Rational> point{Rational(2), Rational(-1, 3), Rational(5)};
  for (int trial = 0; trial < 30; ++trial) {
    auto a = random_poly(rng, 3, 3, 3);
    auto b = random_poly(rng, 3, 3, 3);
    CHECK((a * b).eval(point) == a.eval(point) * b.eval(point));
    CHECK((a + b).eval(point) == a.eval(point) + b.eval(point));
  }
}

TEST_CASE("determinant agrees with the Leibniz expansion") {
  std::mt19937 rng(3);
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      PolyMatrix m(n, n, 3);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m.at(r, c) = random_poly(rng, 3, 2, 2);
      CHECK(determinant(m) == leibniz(m));
    }
  }
}

TEST_CASE("minors use 1-based sorted indices") {
  PolyMatrix m(3, {{P("x1"), P("x2"), P("0")},
                   {P("x3"), P("1"), P("x1")},
                   {P("0"), P("x2"), P("x3")}});
  CHECK(minor(m, {1, 2}, {1, 2}) == P("x1 - x2*x3"));
  CHECK(minor(m, {2, 1}, {2, 1}) == P("x1 - x2*x3"));
  CHECK(determinant(m) == leibniz(m));
  CHECK_THROWS_AS(minor(m, {1, 4}, {1, 2}), Error);
}

TEST_CASE("rank of symbolic matrices with witnesses") {
  // Rank one: an outer product.
  PolyMatrix outer(3, {{P("x1*x2"), P("x1*x3")}, {P("x2^2"), P("x2*x3")}});
  auto r = rank_with_witness(outer);
  CHECK(r.rank == 1);
  CHECK_FALSE(r.witness_minor.is_zero());
  PolyMatrix koszul(3, {{P("-x2"), P("-x3"), P("0")},
                        {P("x1"), P("0"), P("-x3")},
                        {P("0"), P("x1"), P("x2")}});
  auto k = rank_with_witness(koszul);
  CHECK(k.rank == 2);
  CHECK(minor(koszul, k.witness_rows, k.witness_cols) == k.witness_minor);
  CHECK(maximal_minors(koszul, 2).size() == 9);
}

TEST_CASE("exact and modular elimination agree on small integer matrices") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Rational> a(12);
    std::vector<std::uint64_t> b(12);
    const std::uint64_t prime = 1000000007ULL;
    for (std::size_t i = 0; i < 12; ++i) {
      int v = d(rng);
      a[i] = v;
      b[i] = static_cast<std::uint64_t>((v % static_cast<long long>(prime) +
                                         static_cast<long long>(prime)) %
                                        static_cast<long long>(prime));
    }
    CHECK(rank_exact(a, 3, 4) == eliminate_mod(b, 3, 4, prime).rank);
  }
}

TEST_CASE("regular sequence certificates") {
  auto pure = regular_sequence_certificate({P("x1^2"), P("x1*x2"), P("x2^3")}, 2);
  CHECK(pure.found);
  CHECK(pure.kind == "pure-powers");
  auto coprime = regular_sequence_certificate({P("x1*x2"), P("x3^2 - x1*x2")}, 2);
  CHECK(coprime.found);
  auto none = regular_sequence_certificate({P("x1*x2"), P("x1*x3")}, 2);
  CHECK_FALSE(none.found);
}
