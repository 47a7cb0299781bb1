#pragma once

// Rational polyhedral cones pos_Q(A) given by generator sets: dimension,
// strong convexity, exact membership, relative-interior membership,
// extreme rays, simplex test and cone equality. All certificates are
// exact rationals; there are no tolerances anywhere.

#include "cicone/generators.hpp"
#include "cicone/linalg.hpp"
#include "cicone/simplex.hpp"

#include <optional>
#include <vector>

namespace cicone {

/// Outcome of the pointedness test. Exactly one of `functional` (pointed)
/// or `line_witness` (a nonzero integer point of sigma cap -sigma) is set.
struct ConvexityResult {
  bool pointed = false;
  std::optional<RVec> functional;
  std::optional<IVec> line_witness;
};

Index cone_dim(const GeneratorSet& A);

ConvexityResult is_strongly_convex(const GeneratorSet& A);

/// c with c . a_i > 0 for every generator; throws NotPointed otherwise.
RVec positive_functional(const GeneratorSet& A);

/// Nonnegative rational lambda with sum lambda_i a_i = v, or absent.
std::optional<RVec> cone_membership(const IVec& v, const GeneratorSet& A);

/// v in relint pos_Q(A): a combination with every coefficient strictly
/// positive exists. This is the module's definition of relative-interior
/// membership for finitely generated cones.
bool relint_membership(const IVec& v, const GeneratorSet& A);

/// Primitive extreme-ray directions, sorted lexicographically. Only
/// defined for pointed cones (throws NotPointed).
std::vector<IVec> extreme_rays(const GeneratorSet& A);

bool is_simplex(const GeneratorSet& A);

/// Equality of pointed cones via their canonical extreme-ray lists.
bool cones_equal(const GeneratorSet& A, const GeneratorSet& B);

/// Generator set with cached cone data, for callers that query the same
/// cone repeatedly.
struct Cone {
  GeneratorSet gens;
  Index dim = 0;
  bool pointed = false;
  std::vector<IVec> rays; ///< empty unless pointed

  static Cone from(const GeneratorSet& A) {
    Cone c;
    c.gens = A;
    c.dim = cone_dim(A);
    c.pointed = is_strongly_convex(A).pointed;
    if (c.pointed) c.rays = extreme_rays(A);
    return c;
  }
};

} // namespace cicone
