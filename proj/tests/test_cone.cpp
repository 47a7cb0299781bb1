#include "cicone/cone.hpp"

#include <doctest.h>

#include <random>

using namespace cicone;

namespace {

GeneratorSet pentagon() {
  return make_gens({{1, 0, 1}, {0, 1, 1}, {-1, 1, 1}, {-1, -1, 1}, {1, -1, 1}});
}

} // namespace

TEST_SUITE("cone") {

TEST_CASE("pointedness with exact witnesses") {
  const GeneratorSet octant = make_gens({{1, 0}, {0, 1}});
  const ConvexityResult p = is_strongly_convex(octant);
  CHECK(p.pointed);
  REQUIRE(p.functional.has_value());
  for (Index i = 0; i < octant.size(); ++i) {
    Rat d = 0;
    for (Index k = 0; k < 2; ++k) d += (*p.functional)[k] * Rat(octant.mat(i, k));
    CHECK(d > 0);
  }

  const GeneratorSet half = make_gens({{1, 0}, {-1, 0}, {0, 1}});
  const ConvexityResult q = is_strongly_convex(half);
  CHECK(!q.pointed);
  REQUIRE(q.line_witness.has_value());
  CHECK(!is_zero(*q.line_witness));
  CHECK(cone_membership(*q.line_witness, half).has_value());
  CHECK(cone_membership(IVec(-*q.line_witness), half).has_value());
  CHECK_THROWS_AS(positive_functional(half), NotPointed);
}

TEST_CASE("membership and relative interior") {
  const GeneratorSet A = make_gens({{1, 0}, {1, 2}});
  CHECK(cone_membership(make_ivec({2, 1}), A).has_value());
  CHECK(cone_membership(make_ivec({1, 0}), A).has_value());
  CHECK(!cone_membership(make_ivec({0, 1}), A).has_value());
  CHECK(relint_membership(make_ivec({2, 1}), A));
  CHECK(!relint_membership(make_ivec({1, 0}), A)); // boundary ray
  CHECK_THROWS_AS(cone_membership(make_ivec({1}), A), AmbientMismatch);
}

TEST_CASE("extreme rays: dedup, interior generators dropped, sorted") {
  const GeneratorSet A = make_gens({{2, 0}, {1, 0}, {1, 1}, {0, 1}});
  const auto rays = extreme_rays(A); // (1,1) is interior, (2,0) duplicates (1,0)
  REQUIRE(rays.size() == 2);
  CHECK(vec_eq(rays[0], make_ivec({0, 1})));
  CHECK(vec_eq(rays[1], make_ivec({1, 0})));
  CHECK_THROWS_AS(extreme_rays(make_gens({{1}, {-1}})), NotPointed);
}

TEST_CASE("pentagon cone has five rays and is not a simplex") {
  const auto rays = extreme_rays(pentagon());
  CHECK(rays.size() == 5);
  CHECK(cone_dim(pentagon()) == 3);
  CHECK(!is_simplex(pentagon()));
  CHECK(is_simplex(make_gens({{1, 0}, {1, 2}})));
}

TEST_CASE("2d extreme rays against an angular-extremes oracle") {
  // in a pointed planar cone the extreme rays are the two angular
  // extremes; compare using exact cross products
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> entry(-4, 4);
  int done = 0;
  while (done < 40) {
    IMat m(4, 2);
    for (Index i = 0; i < 4; ++i)
      for (Index j = 0; j < 2; ++j) m(i, j) = entry(rng);
    bool zero = false;
    for (Index i = 0; i < 4; ++i) zero |= (m(i, 0) == 0 && m(i, 1) == 0);
    if (zero) continue;
    GeneratorSet A(m);
    if (!is_strongly_convex(A).pointed) continue;
    ++done;
    const auto rays = extreme_rays(A);
    // every generator must be a nonnegative combination of the rays
    IMat rm(static_cast<Index>(rays.size()), 2);
    for (size_t i = 0; i < rays.size(); ++i) rm.row(static_cast<Index>(i)) = rays[i].transpose();
    const GeneratorSet R(rm);
    for (Index i = 0; i < 4; ++i) CHECK(cone_membership(A.row(i), R).has_value());
    // and no ray is redundant: a pointed planar cone has at most 2
    CHECK(rays.size() <= 2);
  }
}

TEST_CASE("cones_equal is scale and order independent") {
  const GeneratorSet A = make_gens({{1, 0}, {0, 1}});
  const GeneratorSet B = make_gens({{0, 3}, {5, 0}, {1, 1}});
  CHECK(cones_equal(A, B));
  CHECK(!cones_equal(A, make_gens({{1, 0}, {1, 2}})));
  CHECK_THROWS_AS(cones_equal(A, make_gens({{1, 0, 0}})), AmbientMismatch);
}

TEST_CASE("cached cone view") {
  const Cone c = Cone::from(pentagon());
  CHECK(c.pointed);
  CHECK(c.dim == 3);
  CHECK(c.rays.size() == 5);
}

} // TEST_SUITE
