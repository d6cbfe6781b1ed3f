#include "tcbetti/groebner.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <utility>

#include "tcbetti/error.hpp"
#include "tcbetti/komeda.hpp"

namespace tcb {

TermOrder::TermOrder(OrderKind kind, int nvars) : kind_(kind), nvars_(nvars) {
  weights_.assign(static_cast<std::size_t>(nvars), 1);
  priority_.resize(static_cast<std::size_t>(nvars));
  std::iota(priority_.begin(), priority_.end(), 0);
}

TermOrder TermOrder::grevlex(int nvars) {
  return TermOrder(OrderKind::GradedRevLex, nvars);
}

TermOrder TermOrder::weighted_grevlex(std::vector<long long> weights,
                                      std::vector<int> priority) {
  if (weights.size() != priority.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "weights and priority must have the same length");
  }
  for (long long w : weights) {
    if (w <= 0) {
      throw Error(ErrorCode::InvalidArgument, "order weights must be positive");
    }
  }
  TermOrder o(OrderKind::GradedRevLex, static_cast<int>(weights.size()));
  o.weights_ = std::move(weights);
  o.priority_ = std::move(priority);
  return o;
}

TermOrder TermOrder::local(int nvars) {
  return TermOrder(OrderKind::NegDegRevLex, nvars);
}

TermOrder TermOrder::elimination(int nvars, int eliminated) {
  if (eliminated < 0 || eliminated >= nvars) {
    throw Error(ErrorCode::IndexOutOfRange, "eliminated variable out of range");
  }
  TermOrder o(OrderKind::Elimination, nvars);
  o.eliminated_ = eliminated;
  return o;
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  auto revlex = [&]() {
    for (auto it = priority_.rbegin(); it != priority_.rend(); ++it) {
      int v = *it;
      if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
    }
    return 0;
  };
  switch (kind_) {
    case OrderKind::GradedRevLex: {
      long long da = a.weighted_degree(weights_);
      long long db = b.weighted_degree(weights_);
      if (da != db) return da < db ? -1 : 1;
      return revlex();
    }
    case OrderKind::NegDegRevLex: {
      int da = a.total_degree();
      int db = b.total_degree();
      if (da != db) return da < db ? 1 : -1;
      return revlex();
    }
    case OrderKind::Elimination: {
      int ea = a[eliminated_];
      int eb = b[eliminated_];
      if (ea != eb) return ea < eb ? -1 : 1;
      int da = a.total_degree();
      int db = b.total_degree();
      if (da != db) return da < db ? -1 : 1;
      return revlex();
    }
  }
  return 0;
}

IdealPresentation::IdealPresentation(int nvars,
                                     std::vector<Polynomial> generators)
    : nvars_(nvars) {
  for (auto& g : generators) {
    if (g.nvars() != nvars) {
      throw Error(ErrorCode::DimensionMismatch,
                  "generator has the wrong number of variables");
    }
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

bool IdealPresentation::is_homogeneous() const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const Polynomial& g) { return g.is_homogeneous(); });
}

namespace {

// Terms sorted ascending under the active order, so the leading term is at
// the back.
struct WorkPoly {
  std::vector<Term> terms;

  bool zero() const { return terms.empty(); }
  const Term& lead() const { return terms.back(); }
  int top_degree() const {
    int d = 0;
    for (const auto& t : terms) d = std::max(d, t.mono.total_degree());
    return d;
  }
  int ecart() const { return top_degree() - lead().mono.total_degree(); }
};

WorkPoly to_work(const Polynomial& p, const TermOrder& ord) {
  WorkPoly w;
  w.terms.assign(p.terms().begin(), p.terms().end());
  std::sort(w.terms.begin(), w.terms.end(), [&](const Term& a, const Term& b) {
    return ord.compare(a.mono, b.mono) < 0;
  });
  return w;
}

Polynomial from_work(const WorkPoly& w, int nvars) {
  return Polynomial::from_terms(nvars, w.terms);
}

void make_monic(WorkPoly& w) {
  if (w.zero()) return;
  Rational inv = 1 / w.lead().coeff;
  if (inv == 1) return;
  for (auto& t : w.terms) t.coeff *= inv;
}

// h - c * m * g, merging two ascending term lists.
WorkPoly sub_multiple(const WorkPoly& h, const Rational& c, const Monomial& m,
                      const WorkPoly& g, const TermOrder& ord) {
  WorkPoly out;
  out.terms.reserve(h.terms.size() + g.terms.size());
  std::size_t i = 0, j = 0;
  while (i < h.terms.size() || j < g.terms.size()) {
    int cmp;
    Monomial gm;
    if (j < g.terms.size()) gm = g.terms[j].mono * m;
    if (i == h.terms.size()) {
      cmp = 1;
    } else if (j == g.terms.size()) {
      cmp = -1;
    } else {
      cmp = ord.compare(h.terms[i].mono, gm);
    }
    if (cmp < 0) {
      out.terms.push_back(h.terms[i++]);
    } else if (cmp > 0) {
      out.terms.push_back({gm, -c * g.terms[j].coeff});
      ++j;
    } else {
      Rational s = h.terms[i].coeff - c * g.terms[j].coeff;
      if (s != 0) out.terms.push_back({gm, s});
      ++i;
      ++j;
    }
  }
  return out;
}

WorkPoly spoly(const WorkPoly& a, const WorkPoly& b, const TermOrder& ord) {
  Monomial l = Monomial::lcm(a.lead().mono, b.lead().mono);
  WorkPoly left;
  Monomial ma = l / a.lead().mono;
  Rational ca = 1 / a.lead().coeff;
  left.terms.reserve(a.terms.size());
  for (const auto& t : a.terms) left.terms.push_back({t.mono * ma, t.coeff * ca});
  return sub_multiple(left, 1 / b.lead().coeff, l / b.lead().mono, b, ord);
}

const WorkPoly* find_reducer(const Monomial& m,
                             const std::vector<WorkPoly>& basis) {
  for (const auto& g : basis) {
    if (g.lead().mono.divides(m)) return &g;
  }
  return nullptr;
}

WorkPoly full_reduce(WorkPoly h, const std::vector<WorkPoly>& basis,
                     const TermOrder& ord) {
  std::vector<Term> remainder;  // collected in descending order
  while (!h.zero()) {
    const Term lt = h.lead();
    const WorkPoly* g = find_reducer(lt.mono, basis);
    if (g) {
      h = sub_multiple(h, lt.coeff / g->lead().coeff, lt.mono / g->lead().mono,
                       *g, ord);
    } else {
      remainder.push_back(lt);
      h.terms.pop_back();
    }
  }
  std::reverse(remainder.begin(), remainder.end());
  return WorkPoly{std::move(remainder)};
}

WorkPoly mora_reduce(WorkPoly h, const std::vector<WorkPoly>& basis,
                     const TermOrder& ord) {
  std::deque<WorkPoly> added;
  std::vector<const WorkPoly*> reducers;
  for (const auto& g : basis) reducers.push_back(&g);
  std::size_t steps = 0;
  while (!h.zero()) {
    const WorkPoly* best = nullptr;
    int best_ecart = 0;
    for (const WorkPoly* g : reducers) {
      if (!g->lead().mono.divides(h.lead().mono)) continue;
      int e = g->ecart();
      if (!best || e < best_ecart) {
        best = g;
        best_ecart = e;
      }
    }
    if (!best) break;
    if (best_ecart > h.ecart()) {
      added.push_back(h);
      reducers.push_back(&added.back());
    }
    const Term lt = h.lead();
    h = sub_multiple(h, lt.coeff / best->lead().coeff,
                     lt.mono / best->lead().mono, *best, ord);
    if (++steps > 1000000) {
      throw Error(ErrorCode::DegreeCapExceeded,
                  "Mora normal form did not settle");
    }
  }
  make_monic(h);
  return h;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

// Shared pair bookkeeping for Buchberger and Mora; `reduce` returns the
// normal form of an S-polynomial against the current basis.
template <class Reduce, class OnAdd>
void pair_loop(std::vector<WorkPoly>& basis, const TermOrder& ord,
               bool use_criteria, Reduce reduce, OnAdd on_add) {
  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> open;
  auto add_pairs_for = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      pending.push_back(
          {i, k, Monomial::lcm(basis[i].lead().mono, basis[k].lead().mono)});
      open.insert({i, k});
    }
  };
  for (std::size_t k = 1; k < basis.size(); ++k) add_pairs_for(k);

  auto pair_less = [&](const Pair& a, const Pair& b) {
    int da = a.lcm.total_degree();
    int db = b.lcm.total_degree();
    if (ord.is_global()) {
      return ord.compare(a.lcm, b.lcm) < 0;
    }
    if (da != db) return da < db;
    return ord.compare(a.lcm, b.lcm) > 0;
  };

  while (!pending.empty()) {
    auto it = std::min_element(pending.begin(), pending.end(), pair_less);
    Pair p = *it;
    *it = pending.back();
    pending.pop_back();
    open.erase({p.i, p.j});

    if (use_criteria) {
      const Monomial& a = basis[p.i].lead().mono;
      const Monomial& b = basis[p.j].lead().mono;
      if (Monomial::gcd(a, b).is_one()) continue;
      bool chain = false;
      for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
        if (k == p.i || k == p.j) continue;
        if (!basis[k].lead().mono.divides(p.lcm)) continue;
        auto key = [](std::size_t x, std::size_t y) {
          return x < y ? std::make_pair(x, y) : std::make_pair(y, x);
        };
        if (!open.count(key(p.i, k)) && !open.count(key(p.j, k))) chain = true;
      }
      if (chain) continue;
    }

    WorkPoly s = spoly(basis[p.i], basis[p.j], ord);
    WorkPoly h = reduce(std::move(s), basis);
    if (h.zero()) continue;
    make_monic(h);
    on_add(h);
    basis.push_back(std::move(h));
    add_pairs_for(basis.size() - 1);
  }
}

std::vector<WorkPoly> to_work_list(const IdealPresentation& ideal,
                                   const TermOrder& ord) {
  std::vector<WorkPoly> out;
  for (const auto& g : ideal.generators()) {
    WorkPoly w = to_work(g, ord);
    make_monic(w);
    out.push_back(std::move(w));
  }
  return out;
}

void check_order(const IdealPresentation& ideal, const TermOrder& ord) {
  if (ord.nvars() != ideal.nvars()) {
    throw Error(ErrorCode::DimensionMismatch,
                "term order and ideal disagree on the variable count");
  }
}

}  // namespace

IdealPresentation GroebnerEngine::groebner_basis(const IdealPresentation& ideal,
                                                 const TermOrder& order) {
  check_order(ideal, order);
  if (!order.is_global()) {
    throw Error(ErrorCode::InvalidArgument,
                "groebner_basis needs a global order");
  }
  std::vector<WorkPoly> basis;
  for (auto& w : to_work_list(ideal, order)) {
    w = full_reduce(std::move(w), basis, order);
    if (w.zero()) continue;
    make_monic(w);
    basis.push_back(std::move(w));
  }
  pair_loop(
      basis, order, true,
      [&](WorkPoly s, const std::vector<WorkPoly>& b) {
        return full_reduce(std::move(s), b, order);
      },
      [](const WorkPoly&) {});

  // Minimalize, then tail-reduce.
  std::vector<WorkPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& a = basis[j].lead().mono;
      const auto& b = basis[i].lead().mono;
      if (a.divides(b) && (a != b || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<WorkPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<WorkPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    WorkPoly tail = minimal[i];
    Term lt = tail.lead();
    tail.terms.pop_back();
    WorkPoly r = full_reduce(std::move(tail), others, order);
    r.terms.push_back(lt);
    make_monic(r);
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const WorkPoly& a, const WorkPoly& b) {
              return order.compare(a.lead().mono, b.lead().mono) > 0;
            });
  std::vector<Polynomial> gens;
  for (const auto& w : reduced) gens.push_back(from_work(w, ideal.nvars()));
  IdealPresentation out(ideal.nvars(), std::move(gens));
  out.order_ = order;
  return out;
}

IdealPresentation GroebnerEngine::groebner_basis(const IdealPresentation& ideal) {
  return groebner_basis(ideal, TermOrder::grevlex(ideal.nvars()));
}

Polynomial GroebnerEngine::normal_form(const Polynomial& f,
                                       std::span<const Polynomial> basis,
                                       const TermOrder& order) {
  std::vector<WorkPoly> b;
  for (const auto& g : basis) {
    if (!g.is_zero()) b.push_back(to_work(g, order));
  }
  return from_work(full_reduce(to_work(f, order), b, order), f.nvars());
}

Polynomial GroebnerEngine::mora_normal_form(const Polynomial& f,
                                            std::span<const Polynomial> basis) {
  auto order = TermOrder::local(f.nvars());
  std::vector<WorkPoly> b;
  for (const auto& g : basis) {
    if (!g.is_zero()) b.push_back(to_work(g, order));
  }
  return from_work(mora_reduce(to_work(f, order), b, order), f.nvars());
}

bool GroebnerEngine::verify_groebner(std::span<const Polynomial> basis,
                                     const TermOrder& order) {
  std::vector<WorkPoly> b;
  for (const auto& g : basis) {
    if (!g.is_zero()) b.push_back(to_work(g, order));
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      if (!full_reduce(spoly(b[i], b[j], order), b, order).zero()) return false;
    }
  }
  return true;
}

bool GroebnerEngine::verify_standard_basis(std::span<const Polynomial> basis) {
  if (basis.empty()) return true;
  auto order = TermOrder::local(basis[0].nvars());
  std::vector<WorkPoly> b;
  for (const auto& g : basis) {
    if (!g.is_zero()) b.push_back(to_work(g, order));
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      if (!mora_reduce(spoly(b[i], b[j], order), b, order).zero()) return false;
    }
  }
  return true;
}

bool GroebnerEngine::ideal_contains(const IdealPresentation& ideal,
                                    const Polynomial& f) {
  if (f.is_zero()) return true;
  const IdealPresentation gb =
      ideal.is_groebner() ? ideal : groebner_basis(ideal);
  return normal_form(f, gb.generators(), *gb.groebner_order()).is_zero();
}

bool GroebnerEngine::ideal_equal(const IdealPresentation& a,
                                 const IdealPresentation& b) {
  if (a.nvars() != b.nvars()) {
    throw Error(ErrorCode::DimensionMismatch,
                "ideals live in different polynomial rings");
  }
  auto ga = groebner_basis(a);
  auto gb = groebner_basis(b);
  auto order = TermOrder::grevlex(a.nvars());
  for (const auto& g : b.generators()) {
    if (!normal_form(g, ga.generators(), order).is_zero()) return false;
  }
  for (const auto& g : a.generators()) {
    if (!normal_form(g, gb.generators(), order).is_zero()) return false;
  }
  return true;
}

IdealPresentation GroebnerEngine::local_standard_basis(
    const IdealPresentation& ideal, const EngineOptions& options) {
  auto order = TermOrder::local(ideal.nvars());
  std::vector<WorkPoly> basis = to_work_list(ideal, order);
  int max_degree = 1;
  for (const auto& g : ideal.generators()) {
    max_degree = std::max(max_degree, g.total_degree());
  }
  int cap = options.mora_degree_cap_factor * max_degree;
  pair_loop(
      basis, order, false,
      [&](WorkPoly s, const std::vector<WorkPoly>& b) {
        return mora_reduce(std::move(s), b, order);
      },
      [&](const WorkPoly& h) {
        if (h.top_degree() > cap) {
          throw Error(ErrorCode::DegreeCapExceeded,
                      "standard basis element of degree " +
                          std::to_string(h.top_degree()) +
                          " exceeds the cap " + std::to_string(cap));
        }
      });
  std::vector<Polynomial> gens;
  for (const auto& w : basis) gens.push_back(from_work(w, ideal.nvars()));
  IdealPresentation out(ideal.nvars(), std::move(gens));
  out.standard_basis_ = true;
  return out;
}

IdealPresentation GroebnerEngine::tangent_cone_ideal(
    const IdealPresentation& ideal, const EngineOptions& options) {
  if (ideal.is_homogeneous()) return ideal;
  const IdealPresentation sb = ideal.is_standard_basis()
                                   ? ideal
                                   : local_standard_basis(ideal, options);
  std::vector<Polynomial> forms;
  for (const auto& g : sb.generators()) {
    Polynomial f = g.initial_form().monic();
    if (std::find(forms.begin(), forms.end(), f) == forms.end()) {
      forms.push_back(std::move(f));
    }
  }
  return IdealPresentation(ideal.nvars(), std::move(forms));
}

IdealPresentation GroebnerEngine::quotient_by_variable(
    const IdealPresentation& ideal, int var) {
  int n = ideal.nvars();
  if (var < 0 || var >= n) {
    throw Error(ErrorCode::IndexOutOfRange, "quotient variable out of range");
  }
  if (n + 1 > kMaxVars) {
    throw Error(ErrorCode::DimensionMismatch, "no room for a tag variable");
  }
  int tag = n;
  Polynomial t = Polynomial::variable(n + 1, tag);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(t * g.extend(n + 1));
  Polynomial xv = Polynomial::variable(n + 1, var);
  gens.push_back(xv - t * xv);
  auto gb = groebner_basis(IdealPresentation(n + 1, std::move(gens)),
                           TermOrder::elimination(n + 1, tag));
  std::vector<Polynomial> quotient;
  Monomial divisor = Monomial::unit(var);
  for (const auto& g : gb.generators()) {
    if (g.leading().mono[tag] != 0) continue;
    bool has_tag = false;
    for (const auto& term : g.terms()) has_tag |= term.mono[tag] != 0;
    if (has_tag) continue;
    std::vector<Term> divided;
    for (const auto& term : g.terms()) {
      divided.push_back({term.mono / divisor, term.coeff});
    }
    quotient.push_back(
        Polynomial::from_terms(n + 1, std::move(divided)).drop_variable(tag));
  }
  return IdealPresentation(n, std::move(quotient));
}

IdealPresentation GroebnerEngine::saturate_by_variable(
    const IdealPresentation& ideal, int var,
    std::span<const long long> weights) {
  int n = ideal.nvars();
  if (var < 0 || var >= n) {
    throw Error(ErrorCode::IndexOutOfRange, "saturation variable out of range");
  }
  std::vector<long long> w(weights.begin(), weights.end());
  if (w.empty()) w.assign(static_cast<std::size_t>(n), 1);
  std::vector<int> priority;
  for (int i = 0; i < n; ++i) {
    if (i != var) priority.push_back(i);
  }
  priority.push_back(var);
  auto gb = groebner_basis(ideal, TermOrder::weighted_grevlex(w, priority));
  std::vector<Polynomial> out;
  for (const auto& g : gb.generators()) {
    Monomial content = Monomial::unit(var, g.monomial_content()[var]);
    std::vector<Term> divided;
    for (const auto& term : g.terms()) {
      divided.push_back({term.mono / content, term.coeff});
    }
    out.push_back(Polynomial::from_terms(n, std::move(divided)));
  }
  return IdealPresentation(n, std::move(out));
}

std::vector<std::vector<long long>> lattice_kernel_basis(
    std::span<const long long> n) {
  std::size_t k = n.size();
  std::vector<long long> v(n.begin(), n.end());
  // Columns of u track the unimodular transform applied to v.
  std::vector<std::vector<long long>> u(k, std::vector<long long>(k, 0));
  for (std::size_t i = 0; i < k; ++i) u[i][i] = 1;
  auto col_sub = [&](std::size_t dst, std::size_t src, long long q) {
    v[dst] -= q * v[src];
    for (std::size_t r = 0; r < k; ++r) u[dst][r] -= q * u[src][r];
  };
  for (std::size_t j = 1; j < k; ++j) {
    while (v[j] != 0) {
      long long q = v[0] / v[j];
      col_sub(0, j, q);
      std::swap(v[0], v[j]);
      std::swap(u[0], u[j]);
    }
  }
  std::vector<std::vector<long long>> basis(u.begin() + 1, u.end());
  // Pairwise size reduction keeps the binomial degrees small.
  auto norm = [](const std::vector<long long>& x) {
    long long s = 0;
    for (long long e : x) s += e * e;
    return s;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < basis.size(); ++a) {
      for (std::size_t b = 0; b < basis.size(); ++b) {
        if (a == b) continue;
        for (long long sign : {1LL, -1LL}) {
          std::vector<long long> cand = basis[a];
          for (std::size_t r = 0; r < k; ++r) cand[r] -= sign * basis[b][r];
          if (norm(cand) < norm(basis[a])) {
            basis[a] = std::move(cand);
            changed = true;
          }
        }
      }
    }
  }
  return basis;
}

IdealPresentation GroebnerEngine::toric_ideal(std::span<const long long> n) {
  int k = static_cast<int>(n.size());
  if (k == 0 || k > kMaxVars - 1) {
    throw Error(ErrorCode::InvalidArgument, "unsupported number of generators");
  }
  // The relation lattice of n equals that of n / gcd(n), so a common factor
  // changes nothing; it is divided out to keep the order weights small.
  long long g = 0;
  for (long long x : n) g = std::gcd(g, x);
  if (g == 0) throw Error(ErrorCode::InvalidArgument, "zero weights");
  std::vector<long long> reduced;
  for (long long x : n) reduced.push_back(x / g);
  std::vector<Polynomial> binomials;
  for (const auto& u : lattice_kernel_basis(reduced)) {
    Monomial plus;
    Monomial minus;
    for (int i = 0; i < k; ++i) {
      if (u[static_cast<std::size_t>(i)] > 0) plus[i] = static_cast<int>(u[static_cast<std::size_t>(i)]);
      if (u[static_cast<std::size_t>(i)] < 0) minus[i] = static_cast<int>(-u[static_cast<std::size_t>(i)]);
    }
    binomials.push_back(Polynomial::monomial(k, plus) -
                        Polynomial::monomial(k, minus));
  }
  IdealPresentation current(k, std::move(binomials));
  while (true) {
    IdealPresentation next = current;
    for (int v = 0; v < k; ++v) next = saturate_by_variable(next, v, reduced);
    bool stable = ideal_equal(next, current);
    current = std::move(next);
    if (stable) break;
  }
  return groebner_basis(current);
}

CmCheckResult cm_check_ideal(const IdealPresentation& tangent_cone,
                             int variable) {
  CmCheckResult result;
  result.variable = variable;
  result.tangent_cone = tangent_cone;
  auto quotient =
      GroebnerEngine::quotient_by_variable(tangent_cone, variable - 1);
  result.cohen_macaulay = GroebnerEngine::ideal_equal(quotient, tangent_cone);
  result.justification =
      result.cohen_macaulay
          ? "(I* : X" + std::to_string(variable) +
                ") = I*, so X" + std::to_string(variable) +
                " is a nonzerodivisor on A/I*; depth >= 1 = dim, hence "
                "Cohen-Macaulay"
          : "(I* : X" + std::to_string(variable) +
                ") strictly contains I*, so the multiplicity variable is a "
                "zerodivisor and the tangent cone is not Cohen-Macaulay";
  return result;
}

CmCheckResult cm_check(const KomedaParams& params) {
  auto n = semigroup_generators(params);
  auto toric = GroebnerEngine::toric_ideal(n);
  auto cone = GroebnerEngine::tangent_cone_ideal(toric);
  return cm_check_ideal(cone, multiplicity_index(params));
}

}  // namespace tcb
