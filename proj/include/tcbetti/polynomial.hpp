#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tcb {

using Rational = mpq_class;

// Enough room for the four curve variables plus the tag variable used by
// elimination, with one slot to spare.
inline constexpr int kMaxVars = 6;

class Monomial {
 public:
  Monomial() { exps_.fill(0); }
  Monomial(std::initializer_list<int> exps);

  int operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
  int& operator[](int i) { return exps_[static_cast<std::size_t>(i)]; }

  int total_degree() const;
  long long weighted_degree(std::span<const long long> weights) const;
  bool is_one() const;
  bool divides(const Monomial& other) const;
  // Number of variables with a positive exponent.
  int support_size() const;

  Monomial operator*(const Monomial& other) const;
  // Exact quotient; the caller guarantees divisibility.
  Monomial operator/(const Monomial& other) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);
  static Monomial unit(int var, int exp = 1);

  // Plain lexicographic comparison of exponent arrays, for use as a map key.
  // Term orders live in groebner.hpp and in grevlex_compare below.
  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

 private:
  std::array<std::int32_t, kMaxVars> exps_;
};

// Graded reverse lexicographic comparison with x1 > x2 > ... ; returns
// negative, zero or positive like strcmp.
int grevlex_compare(const Monomial& a, const Monomial& b, int nvars);

struct Term {
  Monomial mono;
  Rational coeff;
};

// Default variable names x1..xn.
std::vector<std::string> default_var_names(int nvars);

class Polynomial {
 public:
  explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial monomial(int nvars, const Monomial& m,
                             const Rational& c = 1);
  static Polynomial variable(int nvars, int index);
  // Canonicalizes: merges equal monomials, drops zero coefficients, sorts by
  // grevlex descending.
  static Polynomial from_terms(int nvars, std::vector<Term> terms);
  // Trusts that terms are already grevlex-descending with no zeros or
  // repeated monomials.
  static Polynomial from_sorted(int nvars, std::vector<Term> terms);

  int nvars() const { return nvars_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const;
  bool has_constant_term() const;
  // Largest and smallest total degree among the terms; zero polynomial -> -1.
  int total_degree() const;
  int low_degree() const;
  // Grevlex-leading term; requires a nonzero polynomial.
  const Term& leading() const { return terms_.front(); }

  // Sum of the terms of least total degree.
  Polynomial initial_form() const;
  bool is_homogeneous() const;

  // When the polynomial is c*x_v^e with e >= 1, returns (v, e).
  std::pair<int, int> pure_power() const;
  bool is_pure_power() const { return pure_power().second > 0; }
  // Variables that divide every term.
  Monomial monomial_content() const;

  // Sets x_var = 0 and removes the slot; the result has nvars-1 variables.
  Polynomial drop_variable(int var) const;
  // Reinterprets in a ring with more variables (new ones appended).
  Polynomial extend(int nvars) const;
  Polynomial scaled(const Rational& c) const;
  Polynomial times_monomial(const Monomial& m, const Rational& c = 1) const;
  // Divides by the leading coefficient.
  Polynomial monic() const;

  std::uint64_t eval_mod(std::span<const std::uint64_t> point,
                         std::uint64_t prime) const;
  Rational eval(std::span<const Rational> point) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  // Text format: `-3*x1^2*x3 + x2 - 1/2`.
  std::string to_string() const;
  std::string to_string(std::span<const std::string> names) const;
  static Polynomial parse(std::string_view text, int nvars);
  static Polynomial parse(std::string_view text,
                          std::span<const std::string> names);

 private:
  int nvars_;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

// Modular helpers shared by the rank code.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::uint64_t rational_mod(const Rational& q, std::uint64_t prime);

}  // namespace tcb
