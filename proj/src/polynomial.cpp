#include "tcbetti/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <ostream>
#include <sstream>

#include "tcbetti/error.hpp"

namespace tcb {

Monomial::Monomial(std::initializer_list<int> exps) {
  exps_.fill(0);
  std::size_t i = 0;
  for (int e : exps) {
    if (i >= exps_.size()) {
      throw Error(ErrorCode::DimensionMismatch, "too many exponents");
    }
    exps_[i++] = e;
  }
}

int Monomial::total_degree() const {
  int d = 0;
  for (auto e : exps_) d += e;
  return d;
}

long long Monomial::weighted_degree(std::span<const long long> weights) const {
  long long d = 0;
  for (std::size_t i = 0; i < weights.size() && i < exps_.size(); ++i) {
    d += weights[i] * exps_[i];
  }
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

int Monomial::support_size() const {
  return static_cast<int>(
      std::count_if(exps_.begin(), exps_.end(), [](int e) { return e > 0; }));
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = exps_[i] + other.exps_[i];
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = exps_[i] - other.exps_[i];
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) {
    r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
  }
  return r;
}

Monomial Monomial::unit(int var, int exp) {
  Monomial r;
  r[var] = exp;
  return r;
}

int grevlex_compare(const Monomial& a, const Monomial& b, int nvars) {
  int da = a.total_degree();
  int db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  for (int i = nvars - 1; i >= 0; --i) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

std::vector<std::string> default_var_names(int nvars) {
  std::vector<std::string> names;
  for (int i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

namespace {

void check_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars()) {
    throw Error(ErrorCode::DimensionMismatch,
                "polynomials live in rings with " + std::to_string(a.nvars()) +
                    " and " + std::to_string(b.nvars()) + " variables");
  }
}

}  // namespace

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  return monomial(nvars, Monomial(), c);
}

Polynomial Polynomial::monomial(int nvars, const Monomial& m,
                                const Rational& c) {
  Polynomial p(nvars);
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) {
    throw Error(ErrorCode::IndexOutOfRange, "variable index out of range");
  }
  return monomial(nvars, Monomial::unit(index));
}

Polynomial Polynomial::from_terms(int nvars, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [nvars](const Term& a, const Term& b) {
    return grevlex_compare(a.mono, b.mono, nvars) > 0;
  });
  Polynomial p(nvars);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial Polynomial::from_sorted(int nvars, std::vector<Term> terms) {
  Polynomial p(nvars);
  p.terms_ = std::move(terms);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool Polynomial::has_constant_term() const {
  return !terms_.empty() && terms_.back().mono.is_one();
}

int Polynomial::total_degree() const {
  return terms_.empty() ? -1 : terms_.front().mono.total_degree();
}

int Polynomial::low_degree() const {
  return terms_.empty() ? -1 : terms_.back().mono.total_degree();
}

Polynomial Polynomial::initial_form() const {
  if (terms_.empty()) {
    throw Error(ErrorCode::ZeroPolynomial, "initial form of the zero polynomial");
  }
  int low = low_degree();
  Polynomial r(nvars_);
  for (const auto& t : terms_) {
    if (t.mono.total_degree() == low) r.terms_.push_back(t);
  }
  return r;
}

bool Polynomial::is_homogeneous() const {
  return terms_.empty() || total_degree() == low_degree();
}

std::pair<int, int> Polynomial::pure_power() const {
  if (terms_.size() != 1) return {-1, 0};
  const auto& m = terms_[0].mono;
  if (m.support_size() != 1) return {-1, 0};
  for (int v = 0; v < nvars_; ++v) {
    if (m[v] > 0) return {v, m[v]};
  }
  return {-1, 0};
}

Monomial Polynomial::monomial_content() const {
  if (terms_.empty()) return Monomial();
  Monomial g = terms_[0].mono;
  for (const auto& t : terms_) g = Monomial::gcd(g, t.mono);
  return g;
}

Polynomial Polynomial::drop_variable(int var) const {
  if (var < 0 || var >= nvars_) {
    throw Error(ErrorCode::IndexOutOfRange, "variable index out of range");
  }
  std::vector<Term> kept;
  for (const auto& t : terms_) {
    if (t.mono[var] != 0) continue;
    Monomial m;
    for (int i = 0, j = 0; i < nvars_; ++i) {
      if (i != var) m[j++] = t.mono[i];
    }
    kept.push_back({m, t.coeff});
  }
  return from_terms(nvars_ - 1, std::move(kept));
}

Polynomial Polynomial::extend(int nvars) const {
  if (nvars < nvars_ || nvars > kMaxVars) {
    throw Error(ErrorCode::DimensionMismatch, "cannot extend to fewer variables");
  }
  Polynomial r = *this;
  r.nvars_ = nvars;
  // Grevlex with extra trailing zero exponents keeps the same order.
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return Polynomial(nvars_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m,
                                      const Rational& c) const {
  if (c == 0) return Polynomial(nvars_);
  Polynomial r(nvars_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
  return r;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  Rational inv = 1 / terms_.front().coeff;
  return scaled(inv);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t rational_mod(const Rational& q, std::uint64_t prime) {
  mpz_class p(static_cast<unsigned long>(prime));
  mpz_class num = q.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = q.get_den() % p;
  std::uint64_t n = num.get_ui();
  std::uint64_t d = den.get_ui();
  return mul_mod(n, pow_mod(d, prime - 2, prime), prime);
}

std::uint64_t Polynomial::eval_mod(std::span<const std::uint64_t> point,
                                   std::uint64_t prime) const {
  std::uint64_t acc = 0;
  for (const auto& t : terms_) {
    std::uint64_t v = rational_mod(t.coeff, prime);
    for (int i = 0; i < nvars_; ++i) {
      if (t.mono[i]) v = mul_mod(v, pow_mod(point[i], t.mono[i], prime), prime);
    }
    acc = (acc + v) % prime;
  }
  return acc;
}

Rational Polynomial::eval(std::span<const Rational> point) const {
  Rational acc = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (int i = 0; i < nvars_; ++i) {
      for (int k = 0; k < t.mono[i]; ++k) v *= point[i];
    }
    acc += v;
  }
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

// Merges two grevlex-sorted term lists, with b scaled by sign.
Polynomial merge(const Polynomial& a, const Polynomial& b, int sign) {
  int n = a.nvars();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto ta = a.terms();
  auto tb = b.terms();
  std::size_t i = 0, j = 0;
  while (i < ta.size() || j < tb.size()) {
    int c;
    if (i == ta.size()) {
      c = -1;
    } else if (j == tb.size()) {
      c = 1;
    } else {
      c = grevlex_compare(ta[i].mono, tb[j].mono, n);
    }
    if (c > 0) {
      out.push_back(ta[i++]);
    } else if (c < 0) {
      Term t = tb[j++];
      if (sign < 0) t.coeff = -t.coeff;
      out.push_back(std::move(t));
    } else {
      Rational s = sign < 0 ? Rational(ta[i].coeff - tb[j].coeff)
                            : Rational(ta[i].coeff + tb[j].coeff);
      if (s != 0) out.push_back({ta[i].mono, s});
      ++i;
      ++j;
    }
  }
  return Polynomial::from_sorted(n, std::move(out));
}

}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  check_same_ring(a, b);
  return merge(a, b, 1);
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  check_same_ring(a, b);
  return merge(a, b, -1);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_same_ring(a, b);
  std::vector<Term> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a.terms()) {
    for (const auto& y : b.terms()) {
      out.push_back({x.mono * y.mono, x.coeff * y.coeff});
    }
  }
  return Polynomial::from_terms(a.nvars(), std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars() || a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.terms_[i].mono != b.terms_[i].mono ||
        a.terms_[i].coeff != b.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

std::string Polynomial::to_string() const {
  auto names = default_var_names(nvars_);
  return to_string(names);
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = t.coeff < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    Rational mag = abs(t.coeff);
    bool one = t.mono.is_one();
    bool wrote = false;
    if (mag != 1 || one) {
      os << mag.get_str();
      wrote = true;
    }
    for (int i = 0; i < nvars_; ++i) {
      int e = t.mono[i];
      if (e == 0) continue;
      if (wrote) os << '*';
      os << names[static_cast<std::size_t>(i)];
      if (e != 1) os << '^' << e;
      wrote = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << p.to_string();
}

namespace {

class TermParser {
 public:
  TermParser(std::string_view text, std::span<const std::string> names)
      : text_(text), names_(names) {}

  Polynomial run() {
    int n = static_cast<int>(names_.size());
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      if (at_end()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Term t = parse_term();
      if (sign < 0) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
    }
    return Polynomial::from_terms(n, std::move(terms));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at column " + std::to_string(pos_ + 1), 0,
                     static_cast<int>(pos_ + 1));
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  Term parse_term() {
    Term t{Monomial(), Rational(1)};
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      mpz_class num(digits());
      mpz_class den(1);
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_ws();
        den = mpz_class(digits());
        if (den == 0) fail("zero denominator");
      }
      t.coeff = Rational(num, den);
      t.coeff.canonicalize();
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
      } else {
        need_factor = false;
      }
    }
    while (need_factor) {
      parse_factor(t.mono);
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
      } else {
        need_factor = false;
      }
    }
    return t;
  }

  void parse_factor(Monomial& m) {
    if (at_end()) fail("expected a variable");
    // Longest matching name wins so that x1 does not shadow x10.
    int best = -1;
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < names_.size(); ++i) {
      const auto& nm = names_[i];
      if (nm.size() > best_len && text_.substr(pos_, nm.size()) == nm) {
        std::size_t after = pos_ + nm.size();
        if (after < text_.size() &&
            std::isalnum(static_cast<unsigned char>(text_[after]))) {
          continue;
        }
        best = static_cast<int>(i);
        best_len = nm.size();
      }
    }
    if (best < 0) fail("unknown variable");
    pos_ += best_len;
    skip_ws();
    int e = 1;
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      e = std::stoi(digits());
    }
    m[best] += e;
  }

  std::string_view text_;
  std::span<const std::string> names_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, int nvars) {
  auto names = default_var_names(nvars);
  return parse(text, names);
}

Polynomial Polynomial::parse(std::string_view text,
                             std::span<const std::string> names) {
  if (names.size() > static_cast<std::size_t>(kMaxVars)) {
    throw Error(ErrorCode::DimensionMismatch, "too many variables");
  }
  return TermParser(text, names).run();
}

}  // namespace tcb
