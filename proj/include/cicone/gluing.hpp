#pragma once

// Gluing and s-gluing detection for index partitions, plus the two
// recursive decision procedures (complete-intersection semigroup and
// complete-intersection cone), each returning a certificate tree.

#include "cicone/cone.hpp"
#include "cicone/linalg.hpp"
#include "cicone/semigroup.hpp"

#include <memory>
#include <optional>
#include <variant>
#include <vector>

namespace cicone {

enum class SumType { Internal, External };

/// Witness that N A is the gluing of N A^{E1} and N A^{E2}: the common
/// element a generates the lattice intersection and is a member of both
/// part semigroups. Index sets are 0-based.
struct GluingCertificate {
  std::vector<int> E1, E2;
  IVec a;
  IVec cert1, cert2;      ///< coefficients of a in N A^{E1}, N A^{E2}
  IMat lattice_gen_check; ///< HNF basis of Z A^{E1} cap Z A^{E2}
};

/// Relaxed witness: only t*a needs to lie in both part semigroups.
struct SGluingCertificate {
  std::vector<int> E1, E2;
  IVec a;
  Int t;
  IVec certt1, certt2; ///< coefficients of t*a in each part
};

/// Binary certificate tree over index subsets. Leaves carry linearly
/// independent generator subsets; internal nodes carry a gluing or
/// s-gluing certificate and the direct-sum type of the corresponding cone
/// decomposition.
struct DecompositionTree {
  std::vector<int> indices; ///< 0-based, sorted
  bool is_leaf = true;
  std::shared_ptr<const DecompositionTree> left, right;
  std::variant<std::monostate, GluingCertificate, SGluingCertificate> cert;
  SumType sum_type = SumType::External; ///< meaningful on internal nodes only
};

using TreePtr = std::shared_ptr<const DecompositionTree>;

struct DecisionResult {
  bool verdict = false;
  TreePtr tree; ///< present iff verdict
};

/// One step of the proof-of-the-bound bookkeeping: partitions J_1 > ... >
/// J_L with J_1 = {A}, each refinement splitting exactly one set, and the
/// ray-minus-dimension tally D(J_i) of each partition.
struct PartitionChain {
  std::vector<std::vector<std::vector<int>>> chain; ///< chain[i] = parts of J_{i+1}
  std::vector<Int> d_values;
};

std::optional<GluingCertificate> check_gluing(const GeneratorSet& A,
                                              const std::vector<int>& E1,
                                              const std::vector<int>& E2);

std::optional<SGluingCertificate> check_s_gluing(const GeneratorSet& A,
                                                 const std::vector<int>& E1,
                                                 const std::vector<int>& E2);

/// Fischer-Morris-Shapiro recursion: linearly independent sets are
/// accepting leaves; otherwise the first partition (E1 contains the
/// lowest index, enumerated by size then lexicographically) whose gluing
/// certificate and recursive verdicts succeed yields the tree.
DecisionResult is_complete_intersection(const GeneratorSet& A);

/// Same recursion with s-gluing certificates: decides whether pos_Q(A) is
/// a complete intersection cone.
DecisionResult is_ci_cone(const GeneratorSet& A);

/// Linearize a full decomposition tree (all leaves linearly independent)
/// into a chain of partitions and verify the endpoint D values.
PartitionChain chain_of_partitions(const TreePtr& tree, const GeneratorSet& A);

/// Number of internal-type nodes of a tree (the `a` of the k - n = a
/// accounting).
Int internal_node_count(const TreePtr& tree);

} // namespace cicone
