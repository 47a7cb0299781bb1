#include "cicone/semigroup.hpp"

#include <doctest.h>

#include <functional>
#include <random>

using namespace cicone;

namespace {

// brute-force membership for generators with nonnegative entries: any
// subtraction driving a residual coordinate negative is a dead end
bool brute_member(const IVec& b, const GeneratorSet& A) {
  const auto nonneg = [](const IVec& v) {
    for (Index k = 0; k < v.size(); ++k)
      if (v[k] < 0) return false;
    return true;
  };
  std::function<bool(Index, const IVec&)> go = [&](Index i, const IVec& r) -> bool {
    if (is_zero(r)) return true;
    if (i == A.size()) return false;
    IVec r2 = r;
    while (nonneg(r2)) {
      if (go(i + 1, r2)) return true;
      r2 -= A.row(i);
    }
    return false;
  };
  return go(0, b);
}

} // namespace

TEST_SUITE("semigroup") {

TEST_CASE("validate mirrors pointedness") {
  CHECK(validate(make_gens({{4}, {6}, {9}})));
  CHECK(!validate(make_gens({{1}, {-1}})));
}

TEST_CASE("numerical semigroup membership") {
  const GeneratorSet A = make_gens({{4}, {6}, {9}});
  const auto yes = membership(make_ivec({17}), A);
  REQUIRE(yes.has_value());
  CHECK(yes->coefficients[0] * 4 + yes->coefficients[1] * 6 + yes->coefficients[2] * 9 == 17);
  CHECK(!membership(make_ivec({5}), A).has_value());
  CHECK(!membership(make_ivec({11}), A).has_value());
  CHECK(membership(make_ivec({0}), A).has_value()); // empty combination
}

TEST_CASE("membership certificate is lexicographically least") {
  const GeneratorSet A = make_gens({{2}, {3}});
  const auto c = membership(make_ivec({12}), A);
  REQUIRE(c.has_value());
  // (0,4), (3,2), (6,0) all work; least first coefficient wins
  CHECK(c->coefficients[0] == 0);
  CHECK(c->coefficients[1] == 4);
}

TEST_CASE("membership agrees with brute force in Z^2") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> entry(0, 4);
  int done = 0;
  while (done < 30) {
    IMat m(3, 2);
    for (Index i = 0; i < 3; ++i) {
      m(i, 0) = entry(rng);
      m(i, 1) = entry(rng);
      if (m(i, 0) == 0 && m(i, 1) == 0) m(i, 0) = 1;
    }
    const GeneratorSet A{IMat(m)};
    if (!validate(A)) continue;
    ++done;
    IVec b(2);
    for (int x = 0; x <= 8; ++x)
      for (int y = 0; y <= 8; ++y) {
        b[0] = x;
        b[1] = y;
        CHECK(membership(b, A).has_value() == brute_member(b, A));
      }
  }
}

TEST_CASE("positive multiples") {
  const GeneratorSet A = make_gens({{4}, {6}});
  CHECK(exists_positive_multiple(make_ivec({5}), A));
  CHECK(!exists_positive_multiple(make_ivec({-1}), A));
  CHECK(*smallest_multiple(make_ivec({5}), A) == 2);
  CHECK(*smallest_multiple(make_ivec({4}), A) == 1);
  CHECK(!smallest_multiple(make_ivec({-3}), A).has_value());
  CHECK_THROWS_AS(exists_positive_multiple(make_ivec({0}), A), ZeroVector);
}

TEST_CASE("smallest_multiple: three-way agreement") {
  const GeneratorSet A = make_gens({{3}, {7}});
  for (int v = 1; v <= 12; ++v) {
    const IVec b = make_ivec({v});
    const auto s = smallest_multiple(b, A);
    REQUIRE(s.has_value());
    // brute scan
    Int brute = 0;
    for (Int t = 1; t <= 100; ++t) {
      if (membership(IVec(b * t), A).has_value()) {
        brute = t;
        break;
      }
    }
    CHECK(*s == brute);
    const MultiplesTrace tr = multiples_trace(b, A);
    CHECK(tr.members.front() == brute);
    CHECK(tr.is_member(*s));
    CHECK(!tr.is_member(*s - 1));
  }
}

TEST_CASE("multiples_trace certifies a conductor") {
  const GeneratorSet A = make_gens({{4}, {6}, {9}});
  const MultiplesTrace tr = multiples_trace(make_ivec({1}), A);
  // 1*t in <4,6,9> exactly for t in {4,6,8,9,10,12,13,...}
  CHECK(tr.members.front() == 4);
  CHECK(!tr.is_member(Int(11)));
  CHECK(tr.is_member(Int(12)));
  CHECK(tr.complete_from == 12);
  CHECK_THROWS_AS(multiples_trace(make_ivec({-1}), A), NoMultipleExists);
}

TEST_CASE("multiples_trace detects a multiplier semigroup with gcd > 1") {
  // b = (1,0): t*(1,0) in N{(2,0),(0,1),(1,1)} only for even t, so no
  // consecutive run ever certifies completeness
  const GeneratorSet A = make_gens({{2, 0}, {0, 1}, {1, 1}});
  CHECK_THROWS_AS(multiples_trace(make_ivec({1, 0}), A), NoMultipleExists);
}

} // TEST_SUITE
