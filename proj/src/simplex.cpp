#include "cicone/simplex.hpp"

#include <cassert>
#include <vector>

namespace cicone {

namespace {

// Full-tableau simplex state. Columns 0..k-1 are decision variables,
// column k is the right-hand side. The objective row is kept separately.
struct Tableau {
  RMat rows;              // d x (k+1)
  RVec obj;               // length k+1; obj[k] = -current value
  std::vector<Index> basis; // basis[i] = column basic in row i

  Index d() const { return rows.rows(); }
  Index k() const { return rows.cols() - 1; }

  void pivot(Index l, Index e) {
    const Rat p = rows(l, e);
    rows.row(l) /= p;
    for (Index i = 0; i < d(); ++i) {
      if (i != l && rows(i, e) != 0) {
        const Rat f = rows(i, e); // copy; the entry changes mid-update
        rows.row(i) -= rows.row(l) * f;
      }
    }
    if (obj[e] != 0) {
      const Rat f = obj[e]; // copy; obj[e] itself is overwritten below
      obj -= rows.row(l).transpose() * f;
    }
    basis[static_cast<size_t>(l)] = e;
  }

  // Bland's rule; `eligible(j)` gates entering columns.
  template <class Eligible>
  LpStatus run(const Eligible& eligible) {
    for (;;) {
      Index enter = -1;
      for (Index j = 0; j < k(); ++j) {
        if (eligible(j) && obj[j] > 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return LpStatus::Optimal;
      Index leave = -1;
      Rat best;
      for (Index i = 0; i < d(); ++i) {
        if (rows(i, enter) > 0) {
          const Rat ratio = rows(i, k()) / rows(i, enter);
          if (leave < 0 || ratio < best ||
              (ratio == best && basis[static_cast<size_t>(i)] <
                                    basis[static_cast<size_t>(leave)])) {
            leave = i;
            best = ratio;
          }
        }
      }
      if (leave < 0) return LpStatus::Unbounded;
      pivot(leave, enter);
    }
  }
};

} // namespace

LpSolution solve_lp(const RMat& A, const RVec& b, const RVec& c) {
  const Index d = A.rows();
  const Index k = A.cols();
  assert(b.size() == d && c.size() == k);

  // Phase 1: artificials in columns k..k+d-1, minimize their sum.
  Tableau t;
  t.rows = RMat::Zero(d, k + d + 1);
  t.basis.resize(static_cast<size_t>(d));
  for (Index i = 0; i < d; ++i) {
    const Rat sign = b[i] < 0 ? Rat(-1) : Rat(1);
    for (Index j = 0; j < k; ++j) t.rows(i, j) = sign * A(i, j);
    t.rows(i, k + d) = sign * b[i];
    t.rows(i, k + i) = 1;
    t.basis[static_cast<size_t>(i)] = k + i;
  }
  t.obj = RVec::Zero(k + d + 1);
  for (Index i = 0; i < d; ++i) t.obj += t.rows.row(i).transpose();
  for (Index j = k; j < k + d; ++j) t.obj[j] = 0;

  const LpStatus ph1 = t.run([&](Index j) { return j < k; });
  (void)ph1; // phase 1 is bounded below by zero, never Unbounded
  if (t.obj[k + d] != 0) return {LpStatus::Infeasible, {}, {}};

  // Drive artificials out of the basis; rows that cannot pivot are
  // redundant 0 = 0 constraints.
  std::vector<Index> keep;
  for (Index i = 0; i < d; ++i) {
    if (t.basis[static_cast<size_t>(i)] >= k) {
      Index e = -1;
      for (Index j = 0; j < k; ++j) {
        if (t.rows(i, j) != 0) {
          e = j;
          break;
        }
      }
      if (e >= 0) t.pivot(i, e);
    }
    if (t.basis[static_cast<size_t>(i)] < k) keep.push_back(i);
  }

  Tableau t2;
  t2.rows = RMat::Zero(static_cast<Index>(keep.size()), k + 1);
  for (size_t i = 0; i < keep.size(); ++i) {
    t2.rows.row(static_cast<Index>(i)).head(k) = t.rows.row(keep[i]).head(k);
    t2.rows(static_cast<Index>(i), k) = t.rows(keep[i], k + d);
    t2.basis.push_back(t.basis[static_cast<size_t>(keep[i])]);
  }
  t2.obj = RVec::Zero(k + 1);
  t2.obj.head(k) = c;
  for (Index i = 0; i < t2.d(); ++i) {
    const Rat cb = c[t2.basis[static_cast<size_t>(i)]];
    if (cb != 0) t2.obj -= t2.rows.row(i).transpose() * cb;
  }

  const LpStatus st = t2.run([](Index) { return true; });
  if (st == LpStatus::Unbounded) return {LpStatus::Unbounded, {}, {}};

  LpSolution sol;
  sol.status = LpStatus::Optimal;
  sol.x = RVec::Zero(k);
  for (Index i = 0; i < t2.d(); ++i)
    sol.x[t2.basis[static_cast<size_t>(i)]] = t2.rows(i, k);
  sol.objective = -t2.obj[k];
  return sol;
}

std::optional<RVec> lp_feasible(const IMat& eq, const IVec& rhs,
                                const std::set<Index>& strict) {
  const Index m = eq.rows();
  const Index n = eq.cols();
  assert(rhs.size() == n);

  if (strict.empty()) {
    RMat A(n, m);
    RVec b(n);
    for (Index c = 0; c < n; ++c) {
      for (Index j = 0; j < m; ++j) A(c, j) = Rat(eq(j, c));
      b[c] = Rat(rhs[c]);
    }
    const LpSolution sol = solve_lp(A, b, RVec::Zero(m));
    if (sol.status != LpStatus::Optimal) return std::nullopt;
    return sol.x;
  }

  // Substitute lambda_j = mu_j + s for strict j, bound s by s + u = 1 and
  // maximize s; a positive optimum certifies strict feasibility.
  RMat A = RMat::Zero(n + 1, m + 2);
  RVec b(n + 1);
  for (Index c = 0; c < n; ++c) {
    for (Index j = 0; j < m; ++j) {
      A(c, j) = Rat(eq(j, c));
      if (strict.count(j)) A(c, m) += Rat(eq(j, c));
    }
    b[c] = Rat(rhs[c]);
  }
  A(n, m) = 1;
  A(n, m + 1) = 1;
  b[n] = 1;
  RVec c = RVec::Zero(m + 2);
  c[m] = 1;
  const LpSolution sol = solve_lp(A, b, c);
  if (sol.status != LpStatus::Optimal || sol.objective <= 0) return std::nullopt;
  RVec lambda(m);
  for (Index j = 0; j < m; ++j)
    lambda[j] = sol.x[j] + (strict.count(j) ? sol.x[m] : Rat(0));
  return lambda;
}

} // namespace cicone
