#include "cicone/gluing.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <unordered_map>

namespace cicone {

namespace {

void require_partition(const GeneratorSet& A, const std::vector<int>& E1,
                       const std::vector<int>& E2) {
  if (E1.empty() || E2.empty()) throw BadPartition("partition parts must be nonempty");
  std::vector<char> seen(static_cast<size_t>(A.size()), 0);
  for (int i : E1) {
    if (i < 0 || i >= A.size() || seen[static_cast<size_t>(i)]++)
      throw BadPartition("invalid or repeated index in E1");
  }
  for (int i : E2) {
    if (i < 0 || i >= A.size() || seen[static_cast<size_t>(i)]++)
      throw BadPartition("invalid or repeated index in E2");
  }
  for (char s : seen)
    if (!s) throw BadPartition("partition does not cover the index set");
}

/// Generator a of the rank-one lattice intersection of the two parts, or
/// absent; also returns the HNF intersection basis.
std::optional<std::pair<IVec, IMat>> shared_lattice_line(const GeneratorSet& P1,
                                                         const GeneratorSet& P2) {
  const LatticeBasis L =
      lattice_intersection(row_basis(P1.mat), row_basis(P2.mat));
  if (L.rank() != 1) return std::nullopt;
  return std::make_pair(IVec(L.basis.row(0).transpose()), L.basis);
}

Int denominator_lcm(const RVec& v) {
  Int t = 1;
  for (Index i = 0; i < v.size(); ++i)
    t = boost::multiprecision::lcm(t, boost::multiprecision::denominator(v[i]));
  return t;
}

std::optional<GluingCertificate> glue_parts(const GeneratorSet& A, const std::vector<int>& E1,
                                            const std::vector<int>& E2) {
  const GeneratorSet P1 = A.subset(E1);
  const GeneratorSet P2 = A.subset(E2);
  const auto line = shared_lattice_line(P1, P2);
  if (!line) return std::nullopt;
  for (int sign : {1, -1}) {
    const IVec a = sign == 1 ? line->first : IVec(-line->first);
    const auto c1 = membership(a, P1);
    if (!c1) continue;
    const auto c2 = membership(a, P2);
    if (!c2) continue;
    return GluingCertificate{E1, E2, a, c1->coefficients, c2->coefficients, line->second};
  }
  return std::nullopt;
}

std::optional<SGluingCertificate> s_glue_parts(const GeneratorSet& A, const std::vector<int>& E1,
                                               const std::vector<int>& E2) {
  const GeneratorSet P1 = A.subset(E1);
  const GeneratorSet P2 = A.subset(E2);
  const auto line = shared_lattice_line(P1, P2);
  if (!line) return std::nullopt;
  for (int sign : {1, -1}) {
    const IVec a = sign == 1 ? line->first : IVec(-line->first);
    const auto l1 = cone_membership(a, P1);
    if (!l1) continue;
    const auto l2 = cone_membership(a, P2);
    if (!l2) continue;
    // Least t valid for both parts; bounded by the joint denominator
    // clearing multiplier, which always works.
    const Int T = boost::multiprecision::lcm(denominator_lcm(*l1), denominator_lcm(*l2));
    const RVec f1 = positive_functional(P1);
    const RVec f2 = positive_functional(P2);
    for (Int t = 1; t <= T; ++t) {
      const IVec ta = a * t;
      const auto c1 = membership(ta, P1, f1);
      if (!c1) continue;
      const auto c2 = membership(ta, P2, f2);
      if (!c2) continue;
      return SGluingCertificate{E1, E2, a, t, c1->coefficients, c2->coefficients};
    }
  }
  return std::nullopt;
}

/// Is the shared line parallel to an extreme ray of either part cone?
SumType classify_sum(const IVec& a, const GeneratorSet& P1, const GeneratorSet& P2) {
  const IVec p = primitive(a).first;
  for (const GeneratorSet* part : {&P1, &P2}) {
    for (const IVec& r : extreme_rays(*part)) {
      if (vec_eq(r, p)) return SumType::External;
    }
  }
  return SumType::Internal;
}

std::vector<int> mask_indices(uint32_t mask) {
  std::vector<int> idx;
  for (int i = 0; i < 32; ++i)
    if (mask & (1u << i)) idx.push_back(i);
  return idx;
}

struct Decider {
  const GeneratorSet& A;
  bool s_mode;
  std::unordered_map<uint32_t, DecisionResult> memo;

  DecisionResult decide(uint32_t mask) {
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    DecisionResult res = compute(mask);
    memo.emplace(mask, res);
    return res;
  }

  DecisionResult compute(uint32_t mask) {
    const std::vector<int> idx = mask_indices(mask);
    const GeneratorSet sub = A.subset(idx);
    if (rank(sub.mat) == sub.size()) {
      auto leaf = std::make_shared<DecompositionTree>();
      leaf->indices = idx;
      leaf->is_leaf = true;
      return {true, leaf};
    }
    // E1 contains the lowest index; enumerate by size, then
    // lexicographically on the index list.
    const uint32_t low = mask & (~mask + 1);
    std::vector<uint32_t> submasks;
    const uint32_t rest = mask ^ low;
    for (uint32_t s = rest; s != 0; s = (s - 1) & rest) submasks.push_back(low | (rest ^ s));
    submasks.push_back(low); // s = 0 case: E1 = {lowest}
    std::sort(submasks.begin(), submasks.end(), [](uint32_t x, uint32_t y) {
      const int px = std::popcount(x);
      const int py = std::popcount(y);
      if (px != py) return px < py;
      return mask_indices(x) < mask_indices(y);
    });
    for (uint32_t m1 : submasks) {
      if (m1 == mask) continue;
      const uint32_t m2 = mask ^ m1;
      const std::vector<int> E1 = mask_indices(m1);
      const std::vector<int> E2 = mask_indices(m2);
      std::variant<std::monostate, GluingCertificate, SGluingCertificate> cert;
      IVec a;
      if (s_mode) {
        auto c = s_glue_parts(A, E1, E2);
        if (!c) continue;
        a = c->a;
        cert = std::move(*c);
      } else {
        auto c = glue_parts(A, E1, E2);
        if (!c) continue;
        a = c->a;
        cert = std::move(*c);
      }
      const DecisionResult left = decide(m1);
      if (!left.verdict) continue;
      const DecisionResult right = decide(m2);
      if (!right.verdict) continue;
      auto node = std::make_shared<DecompositionTree>();
      node->indices = idx;
      node->is_leaf = false;
      node->left = left.tree;
      node->right = right.tree;
      node->cert = std::move(cert);
      node->sum_type = classify_sum(a, A.subset(E1), A.subset(E2));
      return {true, node};
    }
    return {false, nullptr};
  }
};

DecisionResult decide_all(const GeneratorSet& A, bool s_mode) {
  if (!validate(A)) throw NotPointed();
  if (A.size() > 16)
    throw BudgetExceeded("decision procedures are limited to 16 generators");
  Decider d{A, s_mode, {}};
  return d.decide(A.size() == 32 ? ~0u : ((1u << A.size()) - 1));
}

} // namespace

std::optional<GluingCertificate> check_gluing(const GeneratorSet& A, const std::vector<int>& E1,
                                              const std::vector<int>& E2) {
  require_partition(A, E1, E2);
  if (!validate(A)) throw NotPointed();
  return glue_parts(A, E1, E2);
}

std::optional<SGluingCertificate> check_s_gluing(const GeneratorSet& A, const std::vector<int>& E1,
                                                 const std::vector<int>& E2) {
  require_partition(A, E1, E2);
  if (!validate(A)) throw NotPointed();
  return s_glue_parts(A, E1, E2);
}

DecisionResult is_complete_intersection(const GeneratorSet& A) { return decide_all(A, false); }

DecisionResult is_ci_cone(const GeneratorSet& A) { return decide_all(A, true); }

PartitionChain chain_of_partitions(const TreePtr& tree, const GeneratorSet& A) {
  if (!tree) throw MalformedTree("missing tree");
  // Collect leaves and internal nodes (post-order, so children merge
  // before their parent).
  std::vector<std::vector<int>> leaves;
  std::vector<const DecompositionTree*> merges;
  const std::function<void(const DecompositionTree&)> walk = [&](const DecompositionTree& t) {
    if (t.is_leaf) {
      leaves.push_back(t.indices);
      return;
    }
    if (!t.left || !t.right) throw MalformedTree("internal node missing a child");
    walk(*t.left);
    walk(*t.right);
    merges.push_back(&t);
  };
  walk(*tree);

  std::vector<char> covered(static_cast<size_t>(A.size()), 0);
  for (const auto& leaf : leaves) {
    const GeneratorSet sub = A.subset(leaf);
    if (rank(sub.mat) != sub.size())
      throw MalformedTree("leaf generators are not linearly independent");
    for (int i : leaf) {
      if (i < 0 || i >= A.size() || covered[static_cast<size_t>(i)]++)
        throw MalformedTree("leaves do not partition the index set");
    }
  }
  for (char c : covered)
    if (!c) throw MalformedTree("leaves do not partition the index set");

  const auto d_of = [&](const std::vector<std::vector<int>>& parts) {
    Int d = 0;
    for (const auto& part : parts) {
      const GeneratorSet sub = A.subset(part);
      d += Int(extreme_rays(sub).size()) - Int(rank(sub.mat));
    }
    return d;
  };
  const auto canon = [](std::vector<std::vector<int>> parts) {
    for (auto& p : parts) std::sort(p.begin(), p.end());
    std::sort(parts.begin(), parts.end());
    return parts;
  };

  std::vector<std::vector<std::vector<int>>> fine_to_coarse;
  std::vector<std::vector<int>> current = canon(leaves);
  fine_to_coarse.push_back(current);
  for (const DecompositionTree* node : merges) {
    std::vector<int> l = node->left->indices;
    std::vector<int> r = node->right->indices;
    std::sort(l.begin(), l.end());
    std::sort(r.begin(), r.end());
    std::vector<std::vector<int>> next;
    std::vector<int> merged;
    for (auto& p : current) {
      if (p == l || p == r) {
        merged.insert(merged.end(), p.begin(), p.end());
      } else {
        next.push_back(p);
      }
    }
    if (merged.size() != l.size() + r.size())
      throw MalformedTree("merge does not match the current partition");
    std::sort(merged.begin(), merged.end());
    next.push_back(std::move(merged));
    current = canon(next);
    fine_to_coarse.push_back(current);
  }

  PartitionChain chain;
  chain.chain.assign(fine_to_coarse.rbegin(), fine_to_coarse.rend());
  for (const auto& parts : chain.chain) chain.d_values.push_back(d_of(parts));
  if (chain.d_values.back() != 0)
    throw MalformedTree("finest partition is not made of simplex cones");
  const Int k = Int(extreme_rays(A).size());
  const Int n = Int(cone_dim(A));
  if (chain.d_values.front() != k - n)
    throw MalformedTree("root D value does not equal rays minus dimension");
  return chain;
}

Int internal_node_count(const TreePtr& tree) {
  if (!tree || tree->is_leaf) return 0;
  return internal_node_count(tree->left) + internal_node_count(tree->right) +
         (tree->sum_type == SumType::Internal ? 1 : 0);
}

} // namespace cicone
