#include "cicone/toric.hpp"

#include "cicone/cone.hpp"
#include "cicone/semigroup.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace cicone {

Int TermOrder::degree(const IVec& u) const {
  Int d = 0;
  for (Index i = 0; i < u.size(); ++i) d += weights[static_cast<size_t>(i)] * u[i];
  return d;
}

int TermOrder::cmp(const IVec& u, const IVec& v) const {
  const Int du = degree(u);
  const Int dv = degree(v);
  if (du != dv) return du < dv ? -1 : 1;
  // reverse lexicographic: the larger monomial has the smaller exponent
  // at the cheapest differing variable
  const Index m = u.size();
  const Index last = cheapest < 0 ? m - 1 : Index(cheapest);
  const auto at = [&](Index k) {
    // scan order from cheapest to most expensive: last, then m-1 .. 0
    // skipping last
    if (k == 0) return last;
    Index p = m - k;
    if (p <= last) --p;
    return p;
  };
  for (Index k = 0; k < m; ++k) {
    const Index p = at(k);
    if (u[p] != v[p]) return u[p] < v[p] ? 1 : -1;
  }
  return 0;
}

std::vector<Int> grading_weights(const GeneratorSet& A) {
  const RVec c = positive_functional(A);
  Int den = 1;
  for (Index k = 0; k < c.size(); ++k)
    den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(c[k]));
  std::vector<Int> w(static_cast<size_t>(A.size()));
  for (Index i = 0; i < A.size(); ++i) {
    Rat d = 0;
    for (Index k = 0; k < c.size(); ++k) d += c[k] * Rat(A.mat(i, k));
    w[static_cast<size_t>(i)] = boost::multiprecision::numerator(d * Rat(den));
  }
  return w;
}

std::vector<Binomial> lattice_to_binomials(const LatticeBasis& B) {
  std::vector<Binomial> out;
  for (Index r = 0; r < B.basis.rows(); ++r) {
    Binomial b{IVec::Zero(B.ambient()), IVec::Zero(B.ambient())};
    for (Index j = 0; j < B.ambient(); ++j) {
      const Int& e = B.basis(r, j);
      if (e > 0) b.plus[j] = e;
      if (e < 0) b.minus[j] = -e;
    }
    out.push_back(std::move(b));
  }
  return out;
}

namespace {

bool divides(const IVec& d, const IVec& m) {
  for (Index i = 0; i < d.size(); ++i)
    if (d[i] > m[i]) return false;
  return true;
}

bool disjoint_support(const IVec& u, const IVec& v) {
  for (Index i = 0; i < u.size(); ++i)
    if (u[i] > 0 && v[i] > 0) return false;
  return true;
}

bool lex_pair_less(const Binomial& a, const Binomial& b) {
  if (!vec_eq(a.plus, b.plus)) return lex_less(a.plus, b.plus);
  return lex_less(a.minus, b.minus);
}

struct Engine {
  const TermOrder& ord;
  const OracleBudget& budget;
  long pairs = 0;
  long steps = 0;
  std::vector<Binomial> basis; ///< plus is always the leading monomial

  void charge_step() {
    if (++steps > budget.max_steps) throw BudgetExceeded("oracle reduction step budget");
  }

  /// Orient so plus leads; empty on the zero binomial.
  std::optional<Binomial> orient(IVec u, IVec v) const {
    const int c = ord.cmp(u, v);
    if (c == 0) return std::nullopt;
    if (c < 0) std::swap(u, v);
    return Binomial{std::move(u), std::move(v)};
  }

  /// Fully rewrite a monomial by the current basis (first applicable
  /// rule, restart). Each step strictly decreases in the order.
  IVec reduce(IVec m, const std::vector<Binomial>& rules) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Binomial& g : rules) {
        if (divides(g.plus, m)) {
          charge_step();
          m = m - g.plus + g.minus;
          changed = true;
          break;
        }
      }
    }
    return m;
  }

  std::optional<Binomial> normal_form(const IVec& u, const IVec& v,
                                      const std::vector<Binomial>& rules) {
    IVec ru = reduce(u, rules);
    IVec rv = reduce(v, rules);
    if (vec_eq(ru, rv)) return std::nullopt;
    return orient(std::move(ru), std::move(rv));
  }

  void run(std::vector<Binomial> gens) {
    basis.clear();
    for (Binomial& g : gens) {
      if (auto b = orient(std::move(g.plus), std::move(g.minus))) basis.push_back(std::move(*b));
    }
    std::sort(basis.begin(), basis.end(), lex_pair_less);
    basis.erase(std::unique(basis.begin(), basis.end(),
                            [](const Binomial& a, const Binomial& b) {
                              return vec_eq(a.plus, b.plus) && vec_eq(a.minus, b.minus);
                            }),
                basis.end());

    using PairKey = std::tuple<Int, size_t, size_t>; // (deg of lcm, i, j)
    std::set<PairKey> queue;
    const auto exp_lcm = [](const IVec& a, const IVec& b) {
      IVec l = a;
      for (Index t = 0; t < l.size(); ++t)
        if (b[t] > l[t]) l[t] = b[t];
      return l;
    };
    const auto push_pairs = [&](size_t j) {
      for (size_t i = 0; i < j; ++i)
        queue.emplace(ord.degree(exp_lcm(basis[i].plus, basis[j].plus)), i, j);
    };
    for (size_t j = 0; j < basis.size(); ++j) push_pairs(j);

    while (!queue.empty()) {
      const auto [deg, i, j] = *queue.begin();
      queue.erase(queue.begin());
      if (++pairs > budget.max_pairs) throw BudgetExceeded("oracle pair budget");
      if (disjoint_support(basis[i].plus, basis[j].plus)) continue; // product criterion
      IVec l = basis[i].plus;
      for (Index t = 0; t < l.size(); ++t)
        if (basis[j].plus[t] > l[t]) l[t] = basis[j].plus[t];
      const IVec u = l - basis[i].plus + basis[i].minus;
      const IVec v = l - basis[j].plus + basis[j].minus;
      if (auto nf = normal_form(u, v, basis)) {
        basis.push_back(std::move(*nf));
        push_pairs(basis.size() - 1);
      }
    }

    // interreduce: drop dominated leads, then reduce every trail
    std::sort(basis.begin(), basis.end(), [&](const Binomial& a, const Binomial& b) {
      const int c = ord.cmp(a.plus, b.plus);
      if (c != 0) return c < 0;
      return lex_less(a.minus, b.minus);
    });
    std::vector<Binomial> minimal;
    for (const Binomial& g : basis) {
      bool dominated = false;
      for (const Binomial& h : minimal) {
        if (divides(h.plus, g.plus)) {
          dominated = true;
          break;
        }
      }
      if (!dominated) minimal.push_back(g);
    }
    for (Binomial& g : minimal) g.minus = reduce(g.minus, minimal);
    basis = std::move(minimal);
  }
};

} // namespace

std::vector<Binomial> buchberger(std::vector<Binomial> gens, const TermOrder& ord,
                                 const OracleBudget& budget) {
  Engine e{ord, budget};
  e.run(std::move(gens));
  return std::move(e.basis);
}

std::vector<Binomial> saturate(std::vector<Binomial> gens, const GeneratorSet& A,
                               const OracleBudget& budget) {
  if (gens.empty()) return gens;
  TermOrder ord{grading_weights(A), -1};
  const Index m = A.size();
  // (((I : x_1^inf) : x_2^inf) ... : x_m^inf) equals I : (x_1...x_m)^inf,
  // so one pass per variable suffices.
  for (Index i = 0; i < m; ++i) {
    ord.cheapest = static_cast<int>(i);
    gens = buchberger(std::move(gens), ord, budget);
    for (Binomial& g : gens) {
      const Int c = g.plus[i] < g.minus[i] ? g.plus[i] : g.minus[i];
      g.plus[i] -= c;
      g.minus[i] -= c;
    }
  }
  ord.cheapest = -1;
  return buchberger(std::move(gens), ord, budget);
}

Index minimal_generator_count(const std::vector<Binomial>& gens, const GeneratorSet& A,
                              const OracleBudget& budget) {
  const TermOrder ord{grading_weights(A), -1};
  std::vector<Binomial> current = gens;
  std::sort(current.begin(), current.end(), [&](const Binomial& a, const Binomial& b) {
    const Int da = ord.degree(a.plus);
    const Int db = ord.degree(b.plus);
    if (da != db) return da > db;
    return lex_pair_less(a, b);
  });
  for (size_t k = 0; k < current.size();) {
    std::vector<Binomial> rest;
    for (size_t j = 0; j < current.size(); ++j)
      if (j != k) rest.push_back(current[j]);
    const std::vector<Binomial> gb = buchberger(rest, ord, budget);
    Engine e{ord, budget};
    const IVec ru = e.reduce(current[k].plus, gb);
    const IVec rv = e.reduce(current[k].minus, gb);
    if (vec_eq(ru, rv)) {
      current.erase(current.begin() + static_cast<std::ptrdiff_t>(k));
    } else {
      ++k;
    }
  }
  return static_cast<Index>(current.size());
}

OracleReport is_ci_oracle(const GeneratorSet& A, const OracleBudget& budget) {
  if (!validate(A)) throw NotPointed();
  if (A.size() > 8) throw BudgetExceeded("oracle is limited to 8 generators");
  for (Index i = 0; i < A.size(); ++i) {
    for (Index j = 0; j < A.ambient(); ++j) {
      if (boost::multiprecision::abs(A.mat(i, j)) > 30)
        throw BudgetExceeded("oracle is limited to entries of magnitude 30");
    }
  }
  OracleReport rep;
  rep.height = A.size() - rank(A.mat);
  const LatticeBasis ker = kernel_lattice(A.mat);
  if (ker.rank() > 0) {
    rep.markov = saturate(lattice_to_binomials(ker), A, budget);
    rep.mu = minimal_generator_count(rep.markov, A, budget);
  }
  rep.is_ci = rep.mu == rep.height;
  return rep;
}

} // namespace cicone
