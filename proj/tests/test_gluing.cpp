#include "cicone/gluing.hpp"

#include <doctest.h>

#include <functional>
#include <random>

using namespace cicone;

namespace {

// reference decision: same recursion without memoization or ordering
// tricks, built on the public partition checks only
bool reference_ci(const GeneratorSet& A, const std::vector<int>& idx, bool s_mode) {
  const GeneratorSet sub = A.subset(idx);
  if (rank(sub.mat) == sub.size()) return true;
  const size_t n = idx.size();
  for (uint32_t pick = 1; pick + 1 < (1u << (n - 1)); ++pick) {
    // idx[0] always goes to E1; `pick` selects the rest
    std::vector<int> E1{idx[0]}, E2;
    for (size_t i = 1; i < n; ++i)
      ((pick >> (i - 1)) & 1u ? E1 : E2).push_back(idx[i]);
    if (E2.empty()) continue;
    const GeneratorSet whole = A.subset(idx);
    std::vector<int> e1, e2;
    for (size_t i = 0; i < n; ++i)
      ((i == 0 || ((pick >> (i - 1)) & 1u)) ? e1 : e2).push_back(static_cast<int>(i));
    const bool glued = s_mode ? check_s_gluing(whole, e1, e2).has_value()
                              : check_gluing(whole, e1, e2).has_value();
    if (!glued) continue;
    if (reference_ci(A, E1, s_mode) && reference_ci(A, E2, s_mode)) return true;
  }
  // the singleton-complement split is not covered by the loop above
  if (n >= 2) {
    std::vector<int> e1{0}, e2;
    for (size_t i = 1; i < n; ++i) e2.push_back(static_cast<int>(i));
    const GeneratorSet whole = A.subset(idx);
    const bool glued = s_mode ? check_s_gluing(whole, e1, e2).has_value()
                              : check_gluing(whole, e1, e2).has_value();
    if (glued) {
      std::vector<int> i2(idx.begin() + 1, idx.end());
      if (reference_ci(A, {idx[0]}, s_mode) && reference_ci(A, i2, s_mode)) return true;
    }
  }
  return false;
}

bool reference_ci(const GeneratorSet& A, bool s_mode) {
  std::vector<int> all;
  for (Index i = 0; i < A.size(); ++i) all.push_back(static_cast<int>(i));
  return reference_ci(A, all, s_mode);
}

} // namespace

TEST_SUITE("gluing") {

TEST_CASE("check_gluing on a numerical semigroup") {
  const GeneratorSet A = make_gens({{4}, {6}, {9}});
  const auto c = check_gluing(A, {0, 1}, {2});
  REQUIRE(c.has_value());
  CHECK(c->a[0] == 18);
  CHECK(c->cert1[0] * 4 + c->cert1[1] * 6 == 18);
  CHECK(c->cert2[0] * 9 == 18);

  // {3,4,5} admits no gluing under any partition
  const GeneratorSet B = make_gens({{3}, {4}, {5}});
  CHECK(!check_gluing(B, {0}, {1, 2}).has_value());
  CHECK(!check_gluing(B, {1}, {0, 2}).has_value());
  CHECK(!check_gluing(B, {2}, {0, 1}).has_value());
}

TEST_CASE("check_s_gluing relaxes membership to a multiple") {
  const GeneratorSet B = make_gens({{3}, {4}, {5}});
  const auto s = check_s_gluing(B, {0}, {1, 2});
  REQUIRE(s.has_value());
  CHECK(s->a[0] == 3);
  CHECK(s->t == 3); // 3*3 = 9 = 4+5 is the least multiple in <4,5>
  CHECK(s->certt1[0] * 3 == 9);
  CHECK(s->certt2[0] * 4 + s->certt2[1] * 5 == 9);
}

TEST_CASE("partition validation") {
  const GeneratorSet A = make_gens({{4}, {6}, {9}});
  CHECK_THROWS_AS(check_gluing(A, {}, {0, 1, 2}), BadPartition);
  CHECK_THROWS_AS(check_gluing(A, {0, 1}, {1, 2}), BadPartition);
  CHECK_THROWS_AS(check_gluing(A, {0}, {1}), BadPartition);
  CHECK_THROWS_AS(check_gluing(A, {0, 5}, {1, 2}), BadPartition);
  CHECK_THROWS_AS(check_gluing(make_gens({{1}, {-1}, {2}}), {0}, {1, 2}), NotPointed);
}

TEST_CASE("known verdicts") {
  CHECK(is_complete_intersection(make_gens({{4}, {6}, {9}})).verdict);
  CHECK(!is_complete_intersection(make_gens({{3}, {4}, {5}})).verdict);
  CHECK(is_ci_cone(make_gens({{3}, {4}, {5}})).verdict);
  CHECK(is_complete_intersection(make_gens({{2}, {3}})).verdict);
  // free sets are leaves
  const DecisionResult free2 = is_complete_intersection(make_gens({{1, 0}, {0, 1}}));
  CHECK(free2.verdict);
  CHECK(free2.tree->is_leaf);
}

TEST_CASE("tree structure for {4,6,9}") {
  const DecisionResult r = is_complete_intersection(make_gens({{4}, {6}, {9}}));
  REQUIRE(r.verdict);
  REQUIRE(!r.tree->is_leaf);
  const auto* g = std::get_if<GluingCertificate>(&r.tree->cert);
  REQUIRE(g != nullptr);
  // two gluing nodes in total: {4,6,9} and {4,6} (or the mirror image)
  int internal = 0;
  const std::function<void(const TreePtr&)> count = [&](const TreePtr& t) {
    if (!t || t->is_leaf) return;
    ++internal;
    count(t->left);
    count(t->right);
  };
  count(r.tree);
  CHECK(internal == 2);
}

TEST_CASE("decision procedures match the reference recursion") {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> entry(1, 12);
  for (int it = 0; it < 40; ++it) {
    IMat m(3 + it % 3, 1);
    for (Index i = 0; i < m.rows(); ++i) m(i, 0) = entry(rng);
    const GeneratorSet A{IMat(m)};
    CHECK(is_complete_intersection(A).verdict == reference_ci(A, false));
    CHECK(is_ci_cone(A).verdict == reference_ci(A, true));
  }
  std::uniform_int_distribution<int> e2(0, 3);
  int done = 0;
  while (done < 25) {
    IMat m(4, 2);
    for (Index i = 0; i < 4; ++i) {
      m(i, 0) = e2(rng);
      m(i, 1) = e2(rng);
      if (m(i, 0) == 0 && m(i, 1) == 0) m(i, 1) = 1;
    }
    const GeneratorSet A{IMat(m)};
    if (!validate(A)) continue;
    ++done;
    CHECK(is_complete_intersection(A).verdict == reference_ci(A, false));
    CHECK(is_ci_cone(A).verdict == reference_ci(A, true));
  }
}

TEST_CASE("budget guard") {
  IMat m(17, 1);
  for (Index i = 0; i < 17; ++i) m(i, 0) = i + 1;
  CHECK_THROWS_AS(is_complete_intersection(GeneratorSet{IMat(m)}), BudgetExceeded);
}

TEST_CASE("chain of partitions") {
  const GeneratorSet A = make_gens({{1, 0, 1}, {-1, 0, 1}, {0, 1, 1}, {0, -1, 1}});
  const DecisionResult r = is_ci_cone(A);
  REQUIRE(r.verdict);
  const PartitionChain chain = chain_of_partitions(r.tree, A);
  // a full tree over m=4, n=3 has m-n+1 = 2 partitions in its chain
  REQUIRE(chain.chain.size() == 2);
  CHECK(chain.chain[0].size() == 1);
  CHECK(chain.chain[1].size() == 2);
  CHECK(chain.d_values.front() == 1); // k - n = 4 - 3
  CHECK(chain.d_values.back() == 0);

  CHECK_THROWS_AS(chain_of_partitions(nullptr, A), MalformedTree);
  // tree of the wrong instance
  const DecisionResult other = is_complete_intersection(make_gens({{4}, {6}, {9}}));
  CHECK_THROWS_AS(chain_of_partitions(other.tree, A), MalformedTree);
}

TEST_CASE("internal node accounting on the bipyramid tree") {
  const GeneratorSet A = make_gens({{1, 0, 1}, {-1, 0, 1}, {0, 1, 1}, {0, -1, 1}});
  const DecisionResult r = is_ci_cone(A);
  REQUIRE(r.verdict);
  CHECK(internal_node_count(r.tree) ==
        Int(extreme_rays(A).size()) - Int(cone_dim(A)));
}

} // TEST_SUITE
