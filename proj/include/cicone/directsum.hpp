#pragma once

// Direct sums of pointed cones along a shared line, the bipyramidal
// family and its detector, the 2n-2 ray bound report, the coprime-scaling
// witness construction, and a seeded random instance generator.

#include "cicone/cone.hpp"
#include "cicone/gluing.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace cicone {

enum class ExternalCase {
  SharedRay,  ///< the shared line is extreme in both summands
  AbsorbedRay ///< extreme in exactly one; it is not a ray of the sum
};

/// Successful sum of pos(A1) and pos(A2) along the unique shared line.
struct DirectSumResult {
  GeneratorSet generators; ///< rows of A1 followed by rows of A2
  IVec a;                  ///< primitive, sign chosen inside both cones
  SumType sum_type = SumType::Internal;
  std::optional<ExternalCase> external_case; ///< present iff External
  Index dim = 0;                             ///< = dim1 + dim2 - 1
  Index predicted_rays = 0; ///< k1+k2 (Internal) or k1+k2-1 (External)
  std::vector<IVec> actual_rays;
};

/// Coprime scaling pair turning two complete intersections with a shared
/// lattice line into one: A_out = tau*A1 union mu*A2.
struct WitnessResult {
  Int mu, tau;
  Int g; ///< gcd of the coordinates of the shared generator
  GeneratorSet A_out;
  TreePtr tree;
};

struct BoundReport {
  Index n = 0; ///< cone dimension
  Index k = 0; ///< extreme ray count
  bool bound_holds = false; ///< k <= 2n-2
  bool equality = false;    ///< k == 2n-2
  bool bipyramidal = false;
};

/// Recursive split of an extreme ray set witnessing the general
/// bipyramidal property; internal nodes record the shared interior line.
struct RayTree {
  std::vector<IVec> rays;
  bool is_leaf = true;
  std::shared_ptr<const RayTree> left, right;
  IVec a; ///< internal nodes only
};

using RayTreePtr = std::shared_ptr<const RayTree>;

/// Absent unless span_Q(A1) cap span_Q(A2) is a line whose primitive
/// generator (up to sign) lies in both cones. Classifies the sum and
/// checks the predicted ray count against the actual extreme rays.
std::optional<DirectSumResult> direct_sum(const GeneratorSet& A1, const GeneratorSet& A2);

/// Sums with a one-dimensional second summand pos{r} inside span_Q(A1)
/// are external and leave the first cone unchanged.
bool ray_summand_absorbed(const GeneratorSet& A1, const IVec& r);

/// Canonical family {e_i + e_n, -e_i + e_n : i < n} in Z^n: the iterated
/// internal sum of n-1 two-dimensional simplex cones along e_n.
GeneratorSet bipyramid(Index n);

/// True with a split tree iff the cone is a 2-simplex or splits as an
/// internal direct sum of two recursively bipyramidal ray subsets.
std::pair<bool, RayTreePtr> is_general_bipyramidal(const GeneratorSet& A);

/// Ray-count report for a complete intersection cone of dimension >= 2.
BoundReport check_ray_bound(const GeneratorSet& A);

/// Lexicographically least (mu, tau) with mu*a in N A1, tau*a in N A2 and
/// mu, tau, g pairwise coprime; absent when no sign of the shared lattice
/// generator lies in both cones.
std::optional<WitnessResult> ci_witness(const GeneratorSet& A1, const GeneratorSet& A2);

enum class GenMode {
  Gluing, ///< output passes is_complete_intersection
  SGluing ///< output passes is_ci_cone
};

/// Deterministic seeded instance generator: free start set composed with
/// witness merges (Gluing) or direct-sum style extensions (SGluing); the
/// result is post-checked before being returned.
GeneratorSet random_ci_instance(std::uint64_t seed, Index target_dim, Index steps, GenMode mode);

} // namespace cicone
