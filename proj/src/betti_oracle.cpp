#include "tcbetti/betti_oracle.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "tcbetti/error.hpp"
#include "tcbetti/linalg.hpp"

namespace tcb {

std::vector<long long> MultigradedBettiTable::totals() const {
  std::vector<long long> out(static_cast<std::size_t>(nvars) + 1, 0);
  for (const auto& [key, value] : entries) {
    out[static_cast<std::size_t>(key.first)] += value;
  }
  return out;
}

std::map<std::pair<int, int>, long long> MultigradedBettiTable::graded() const {
  std::map<std::pair<int, int>, long long> out;
  for (const auto& [key, value] : entries) {
    out[{key.first, key.second.total_degree()}] += value;
  }
  return out;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.total_degree() != b.total_degree()) {
      return a.total_degree() < b.total_degree();
    }
    return a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = std::any_of(out.begin(), out.end(),
                                 [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) out.push_back(g);
  }
  return out;
}

namespace {

std::vector<Monomial> monomials_of(const std::vector<Polynomial>& gens,
                                   int nvars) {
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    if (g.nvars() != nvars) {
      throw Error(ErrorCode::DimensionMismatch,
                  "generator has the wrong number of variables");
    }
    if (g.is_zero()) continue;
    if (!g.is_monomial()) {
      throw Error(ErrorCode::NotMonomial, "not a monomial: " + g.to_string());
    }
    out.push_back(g.leading().mono);
  }
  return minimalize(std::move(out));
}

bool in_ideal(const Monomial& m, const std::vector<Monomial>& gens) {
  return std::any_of(gens.begin(), gens.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

Monomial minus_set(Monomial b, unsigned set, int nvars) {
  for (int v = 0; v < nvars; ++v) {
    if (set & (1u << v)) b[v] -= 1;
  }
  return b;
}

BettiSequence to_sequence(const std::vector<long long>& totals) {
  BettiSequence out;
  for (std::size_t i = 0; i < totals.size(); ++i) {
    if (i < 4) {
      out.beta[i] = totals[i];
    } else if (totals[i] != 0) {
      throw Error(ErrorCode::InvalidArgument,
                  "projective dimension exceeds 3; no length-4 sequence");
    }
  }
  return out;
}

// Betti numbers of A/I in one multidegree.
std::vector<long long> koszul_at(const Monomial& b,
                                 const std::vector<Monomial>& gens, int nvars) {
  // Basis of K_i(b): subsets J of the support of b with x^(b - e_J) not in I.
  std::vector<std::vector<unsigned>> basis(static_cast<std::size_t>(nvars) + 1);
  unsigned support = 0;
  for (int v = 0; v < nvars; ++v) {
    if (b[v] > 0) support |= 1u << v;
  }
  for (unsigned set = 0; set < (1u << nvars); ++set) {
    if ((set & ~support) != 0) continue;
    if (in_ideal(minus_set(b, set, nvars), gens)) continue;
    basis[static_cast<std::size_t>(std::popcount(set))].push_back(set);
  }
  // rank of d_i : K_i -> K_{i-1}
  std::vector<int> ranks(static_cast<std::size_t>(nvars) + 2, 0);
  for (int i = 1; i <= nvars; ++i) {
    const auto& src = basis[static_cast<std::size_t>(i)];
    const auto& dst = basis[static_cast<std::size_t>(i - 1)];
    if (src.empty() || dst.empty()) continue;
    int rows = static_cast<int>(dst.size());
    int cols = static_cast<int>(src.size());
    std::vector<Rational> a(static_cast<std::size_t>(rows * cols), 0);
    for (int c = 0; c < cols; ++c) {
      unsigned set = src[static_cast<std::size_t>(c)];
      int k = 0;
      for (int v = 0; v < nvars; ++v) {
        if (!(set & (1u << v))) continue;
        auto it = std::find(dst.begin(), dst.end(), set & ~(1u << v));
        if (it != dst.end()) {
          int r = static_cast<int>(it - dst.begin());
          a[static_cast<std::size_t>(r * cols + c)] = (k % 2 == 0) ? 1 : -1;
        }
        ++k;
      }
    }
    ranks[static_cast<std::size_t>(i)] = rank_exact(std::move(a), rows, cols);
  }
  std::vector<long long> out(static_cast<std::size_t>(nvars) + 1, 0);
  for (int i = 0; i <= nvars; ++i) {
    auto idx = static_cast<std::size_t>(i);
    out[idx] = static_cast<long long>(basis[idx].size()) - ranks[idx] -
               ranks[idx + 1];
  }
  return out;
}

}  // namespace

MultigradedBettiTable multigraded_betti(const std::vector<Polynomial>& gens,
                                        int nvars, bool full_box) {
  if (nvars < 1 || nvars > kMaxVars) {
    throw Error(ErrorCode::InvalidArgument, "unsupported variable count");
  }
  auto mons = monomials_of(gens, nvars);
  std::set<Monomial> degrees{Monomial()};
  if (full_box) {
    Monomial top;
    for (const auto& g : mons) top = Monomial::lcm(top, g);
    std::vector<Monomial> frontier{Monomial()};
    for (int v = 0; v < nvars; ++v) {
      std::vector<Monomial> next;
      for (const auto& m : frontier) {
        for (int e = 0; e <= top[v]; ++e) {
          Monomial x = m;
          x[v] = e;
          next.push_back(x);
        }
      }
      frontier = std::move(next);
    }
    degrees.insert(frontier.begin(), frontier.end());
  } else {
    for (const auto& g : mons) {
      std::vector<Monomial> add;
      for (const auto& d : degrees) add.push_back(Monomial::lcm(d, g));
      degrees.insert(add.begin(), add.end());
    }
  }
  MultigradedBettiTable table;
  table.nvars = nvars;
  for (const auto& b : degrees) {
    auto h = koszul_at(b, mons, nvars);
    for (int i = 0; i <= nvars; ++i) {
      long long v = h[static_cast<std::size_t>(i)];
      if (v != 0) table.entries[{i, b}] = v;
    }
  }
  return table;
}

MonomialBettiResult monomial_betti(const std::vector<Polynomial>& gens,
                                   int nvars, bool full_box) {
  MonomialBettiResult result;
  result.table = multigraded_betti(gens, nvars, full_box);
  result.betti = to_sequence(result.table.totals());
  return result;
}

namespace {

void add_shifted(std::vector<long long>& acc, const std::vector<long long>& p,
                 int shift, long long sign) {
  if (acc.size() < p.size() + static_cast<std::size_t>(shift)) {
    acc.resize(p.size() + static_cast<std::size_t>(shift), 0);
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    acc[i + static_cast<std::size_t>(shift)] += sign * p[i];
  }
}

void trim(std::vector<long long>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

std::vector<long long> numerator_rec(std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  if (gens.front().is_one()) return {};
  Monomial m = gens.back();
  gens.pop_back();
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) colon.push_back(g / Monomial::gcd(g, m));
  std::vector<long long> out = numerator_rec(gens);
  add_shifted(out, numerator_rec(std::move(colon)), m.total_degree(), -1);
  trim(out);
  return out;
}

}  // namespace

std::vector<long long> hilbert_numerator(const std::vector<Monomial>& gens) {
  return numerator_rec(gens);
}

std::vector<long long> hilbert_numerator(const std::vector<Polynomial>& gens,
                                         int nvars) {
  return numerator_rec(monomials_of(gens, nvars));
}

std::vector<long long> euler_characteristic(
    const std::map<std::pair<int, int>, long long>& graded) {
  std::vector<long long> out;
  for (const auto& [key, value] : graded) {
    auto j = static_cast<std::size_t>(key.second);
    if (out.size() <= j) out.resize(j + 1, 0);
    out[j] += (key.first % 2 == 0 ? 1 : -1) * value;
  }
  trim(out);
  return out;
}

namespace {

// Standard monomials of A/I per degree, and normal forms of x_v * m, for a
// fixed grevlex Groebner basis.
class QuotientBasis {
 public:
  QuotientBasis(int nvars, std::vector<Polynomial> basis,
                std::vector<Monomial> leads)
      : nvars_(nvars),
        basis_(std::move(basis)),
        leads_(std::move(leads)),
        order_(TermOrder::grevlex(nvars)) {}

  const std::vector<Monomial>& degree(int d) {
    auto it = by_degree_.find(d);
    if (it != by_degree_.end()) return it->second;
    std::vector<Monomial> out;
    if (d >= 0) {
      Monomial m;
      enumerate(0, d, m, out);
    }
    auto& slot = by_degree_[d];
    slot = std::move(out);
    auto& index = index_[d];
    for (std::size_t i = 0; i < slot.size(); ++i) {
      index[slot[i]] = static_cast<int>(i);
    }
    return slot;
  }

  int index_of(int d, const Monomial& m) {
    degree(d);
    return index_[d].at(m);
  }

  const Polynomial& times_variable(const Monomial& m, int v) {
    auto key = std::make_pair(m, v);
    auto it = products_.find(key);
    if (it != products_.end()) return it->second;
    Polynomial p = Polynomial::monomial(nvars_, m * Monomial::unit(v));
    Polynomial nf = GroebnerEngine::normal_form(p, basis_, order_);
    return products_.emplace(key, std::move(nf)).first->second;
  }

 private:
  void enumerate(int v, int left, Monomial& m, std::vector<Monomial>& out) {
    if (v == nvars_ - 1) {
      m[v] = left;
      bool standard = std::none_of(
          leads_.begin(), leads_.end(),
          [&](const Monomial& g) { return g.divides(m); });
      if (standard) out.push_back(m);
      m[v] = 0;
      return;
    }
    for (int e = left; e >= 0; --e) {
      m[v] = e;
      enumerate(v + 1, left - e, m, out);
    }
    m[v] = 0;
  }

  int nvars_;
  std::vector<Polynomial> basis_;
  std::vector<Monomial> leads_;
  TermOrder order_;
  std::map<int, std::vector<Monomial>> by_degree_;
  std::map<int, std::map<Monomial, int>> index_;
  std::map<std::pair<Monomial, int>, Polynomial> products_;
};

// Rank of d_i : K_i -> K_{i-1} in internal degree j.
int strand_rank(QuotientBasis& q, int nvars, int i, int j) {
  if (i < 1 || i > nvars || j - i < 0) return 0;
  const auto& src_mons = q.degree(j - i);
  const auto& dst_mons = q.degree(j - i + 1);
  std::vector<unsigned> src_sets, dst_sets;
  for (unsigned set = 0; set < (1u << nvars); ++set) {
    int c = std::popcount(set);
    if (c == i) src_sets.push_back(set);
    if (c == i - 1) dst_sets.push_back(set);
  }
  int rows = static_cast<int>(dst_sets.size() * dst_mons.size());
  int cols = static_cast<int>(src_sets.size() * src_mons.size());
  if (rows == 0 || cols == 0) return 0;
  std::vector<Rational> a(static_cast<std::size_t>(rows) *
                              static_cast<std::size_t>(cols),
                          0);
  auto dst_pos = [&](unsigned set) {
    return static_cast<int>(
        std::find(dst_sets.begin(), dst_sets.end(), set) - dst_sets.begin());
  };
  int ndst = static_cast<int>(dst_mons.size());
  for (std::size_t s = 0; s < src_sets.size(); ++s) {
    unsigned set = src_sets[s];
    for (std::size_t t = 0; t < src_mons.size(); ++t) {
      int c = static_cast<int>(s * src_mons.size() + t);
      int k = 0;
      for (int v = 0; v < nvars; ++v) {
        if (!(set & (1u << v))) continue;
        int block = dst_pos(set & ~(1u << v));
        const Polynomial& nf = q.times_variable(src_mons[t], v);
        for (const auto& term : nf.terms()) {
          int r = block * ndst + q.index_of(j - i + 1, term.mono);
          Rational val = (k % 2 == 0) ? term.coeff : Rational(-term.coeff);
          a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) +
            static_cast<std::size_t>(c)] += val;
        }
        ++k;
      }
    }
  }
  return rank_exact(std::move(a), rows, cols);
}

long long binomial_coefficient(int n, int k) {
  long long out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace

GradedBettiResult graded_betti_general(const IdealPresentation& ideal) {
  if (!ideal.is_homogeneous()) {
    throw Error(ErrorCode::InvalidArgument,
                "graded Betti numbers need a homogeneous ideal");
  }
  int nvars = ideal.nvars();
  auto gb = GroebnerEngine::groebner_basis(ideal, TermOrder::grevlex(nvars));
  std::vector<Monomial> leads;
  std::vector<Polynomial> lead_polys;
  for (const auto& g : gb.generators()) {
    leads.push_back(g.leading().mono);
    lead_polys.push_back(Polynomial::monomial(nvars, g.leading().mono));
  }
  auto bound = multigraded_betti(lead_polys, nvars).graded();
  QuotientBasis q(nvars, gb.generators(), leads);
  GradedBettiResult out;
  std::vector<long long> totals(static_cast<std::size_t>(nvars) + 1, 0);
  for (const auto& [key, upper] : bound) {
    auto [i, j] = key;
    if (j - i < 0) continue;
    long long dim = binomial_coefficient(nvars, i) *
                    static_cast<long long>(q.degree(j - i).size());
    long long beta = dim - strand_rank(q, nvars, i, j) -
                     strand_rank(q, nvars, i + 1, j);
    if (beta < 0 || beta > upper) {
      throw Error(ErrorCode::CutoffExceeded,
                  "Koszul strand outside the initial-ideal bound");
    }
    if (beta != 0) {
      out.graded[key] = beta;
      totals[static_cast<std::size_t>(i)] += beta;
    }
  }
  if (euler_characteristic(out.graded) != hilbert_numerator(leads)) {
    throw Error(ErrorCode::CutoffExceeded,
                "Euler identity fails at the initial-ideal bound");
  }
  out.betti = to_sequence(totals);
  return out;
}

}  // namespace tcb
