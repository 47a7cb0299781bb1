#include "cicone/cone.hpp"

#include <algorithm>
#include <set>

namespace cicone {

Index cone_dim(const GeneratorSet& A) { return rank(A.mat); }

ConvexityResult is_strongly_convex(const GeneratorSet& A) {
  const Index m = A.size();
  const IVec zero = IVec::Zero(A.ambient());
  // sigma contains a line iff some generator participates with a strictly
  // positive coefficient in a vanishing nonnegative combination.
  for (Index i = 0; i < m; ++i) {
    if (auto nu = lp_feasible(A.mat, zero, {i})) {
      // x = nu_i * a_i lies in sigma cap (-sigma); scale to integers.
      Int den = 1;
      for (Index j = 0; j < m; ++j)
        den = boost::multiprecision::lcm(den, boost::multiprecision::denominator((*nu)[j]));
      const Int coeff = boost::multiprecision::numerator((*nu)[i] * Rat(den));
      ConvexityResult res;
      res.pointed = false;
      res.line_witness = IVec(A.row(i) * coeff);
      return res;
    }
  }
  ConvexityResult res;
  res.pointed = true;
  res.functional = positive_functional(A);
  return res;
}

RVec positive_functional(const GeneratorSet& A) {
  const Index m = A.size();
  const Index n = A.ambient();
  // Dual system: c = p - q with p, q >= 0 and c . a_i - s_i = 1. The
  // lambda components are (p_1..p_n, q_1..q_n, s_1..s_m); columns of the
  // coefficient matrix are the m constraints.
  IMat eq = IMat::Zero(2 * n + m, m);
  for (Index i = 0; i < m; ++i) {
    for (Index k = 0; k < n; ++k) {
      eq(k, i) = A.mat(i, k);
      eq(n + k, i) = -A.mat(i, k);
    }
    eq(2 * n + i, i) = -1;
  }
  IVec rhs = IVec::Constant(m, Int(1));
  const auto sol = lp_feasible(eq, rhs);
  if (!sol) throw NotPointed();
  RVec c(n);
  for (Index k = 0; k < n; ++k) c[k] = (*sol)[k] - (*sol)[n + k];
  return c;
}

std::optional<RVec> cone_membership(const IVec& v, const GeneratorSet& A) {
  if (v.size() != A.ambient()) throw AmbientMismatch();
  return lp_feasible(A.mat, v);
}

bool relint_membership(const IVec& v, const GeneratorSet& A) {
  if (v.size() != A.ambient()) throw AmbientMismatch();
  std::set<Index> all;
  for (Index i = 0; i < A.size(); ++i) all.insert(i);
  return lp_feasible(A.mat, v, all).has_value();
}

std::vector<IVec> extreme_rays(const GeneratorSet& A) {
  if (!is_strongly_convex(A).pointed) throw NotPointed();
  // Deduplicate to primitive directions first.
  std::vector<IVec> dirs;
  for (Index i = 0; i < A.size(); ++i) {
    IVec p = primitive(A.row(i)).first;
    bool seen = false;
    for (const IVec& d : dirs) {
      if (vec_eq(d, p)) {
        seen = true;
        break;
      }
    }
    if (!seen) dirs.push_back(std::move(p));
  }
  std::vector<IVec> rays;
  for (size_t i = 0; i < dirs.size(); ++i) {
    if (dirs.size() == 1) {
      rays.push_back(dirs[i]);
      break;
    }
    IMat others(static_cast<Index>(dirs.size()) - 1, A.ambient());
    Index r = 0;
    for (size_t j = 0; j < dirs.size(); ++j) {
      if (j != i) others.row(r++) = dirs[j].transpose();
    }
    if (!lp_feasible(others, dirs[i])) rays.push_back(dirs[i]);
  }
  std::sort(rays.begin(), rays.end(), lex_less);
  return rays;
}

bool is_simplex(const GeneratorSet& A) {
  return static_cast<Index>(extreme_rays(A).size()) == cone_dim(A);
}

bool cones_equal(const GeneratorSet& A, const GeneratorSet& B) {
  if (A.ambient() != B.ambient()) throw AmbientMismatch();
  const auto ra = extreme_rays(A);
  const auto rb = extreme_rays(B);
  if (ra.size() != rb.size()) return false;
  for (size_t i = 0; i < ra.size(); ++i)
    if (!vec_eq(ra[i], rb[i])) return false;
  return true;
}

} // namespace cicone
