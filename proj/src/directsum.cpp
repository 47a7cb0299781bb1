#include "cicone/directsum.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>

namespace cicone {

namespace {

bool ray_listed(const std::vector<IVec>& rays, const IVec& p) {
  for (const IVec& r : rays)
    if (vec_eq(r, p)) return true;
  return false;
}

GeneratorSet gens_from_rows(const std::vector<IVec>& rows) {
  IMat m(static_cast<Index>(rows.size()), rows.front().size());
  for (size_t i = 0; i < rows.size(); ++i) m.row(static_cast<Index>(i)) = rows[i].transpose();
  return GeneratorSet(std::move(m));
}

/// Primitive generator of the rank-one intersection, sign-adjusted into
/// both cones; absent if the rank is not one or neither sign fits.
std::optional<IVec> shared_cone_line(const GeneratorSet& A1, const GeneratorSet& A2,
                                     const LatticeBasis& inter) {
  if (inter.rank() != 1) return std::nullopt;
  IVec a = primitive(IVec(inter.basis.row(0).transpose())).first;
  for (int sign = 0; sign < 2; ++sign) {
    if (sign) a = -a;
    if (cone_membership(a, A1) && cone_membership(a, A2)) return a;
  }
  return std::nullopt;
}

} // namespace

std::optional<DirectSumResult> direct_sum(const GeneratorSet& A1, const GeneratorSet& A2) {
  if (A1.ambient() != A2.ambient()) throw AmbientMismatch();
  if (!validate(A1) || !validate(A2)) throw NotPointed();
  const auto a = shared_cone_line(A1, A2, span_intersection(A1.mat, A2.mat));
  if (!a) return std::nullopt;

  const std::vector<IVec> r1 = extreme_rays(A1);
  const std::vector<IVec> r2 = extreme_rays(A2);
  const bool ext1 = ray_listed(r1, *a);
  const bool ext2 = ray_listed(r2, *a);

  DirectSumResult res;
  res.generators = A1.concat(A2);
  res.a = *a;
  res.sum_type = (ext1 || ext2) ? SumType::External : SumType::Internal;
  if (ext1 && ext2) {
    res.external_case = ExternalCase::SharedRay;
  } else if (ext1 || ext2) {
    res.external_case = ExternalCase::AbsorbedRay;
  }
  res.dim = cone_dim(res.generators);
  res.predicted_rays = static_cast<Index>(r1.size() + r2.size()) -
                       (res.sum_type == SumType::External ? 1 : 0);
  res.actual_rays = extreme_rays(res.generators);
  return res;
}

bool ray_summand_absorbed(const GeneratorSet& A1, const IVec& r) {
  const auto ds = direct_sum(A1, gens_from_rows({r}));
  if (!ds) return false;
  return ds->sum_type == SumType::External && cones_equal(ds->generators, A1);
}

GeneratorSet bipyramid(Index n) {
  if (n < 2) throw BadDimension("bipyramid needs dimension at least 2");
  IMat m(2 * (n - 1), n);
  m.setZero();
  for (Index i = 0; i < n - 1; ++i) {
    m(2 * i, i) = 1;
    m(2 * i, n - 1) = 1;
    m(2 * i + 1, i) = -1;
    m(2 * i + 1, n - 1) = 1;
  }
  return GeneratorSet(std::move(m));
}

namespace {

struct BipyramidSearch {
  const std::vector<IVec>& rays;
  std::map<uint32_t, std::pair<bool, RayTreePtr>> memo;

  std::vector<IVec> pick(uint32_t mask) const {
    std::vector<IVec> out;
    for (size_t i = 0; i < rays.size(); ++i)
      if (mask & (1u << i)) out.push_back(rays[i]);
    return out;
  }

  std::pair<bool, RayTreePtr> search(uint32_t mask) {
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    auto res = compute(mask);
    memo.emplace(mask, res);
    return res;
  }

  std::pair<bool, RayTreePtr> compute(uint32_t mask) {
    const std::vector<IVec> sub = pick(mask);
    const int count = std::popcount(mask);
    if (count == 2) {
      // two distinct extreme rays of a pointed cone span a 2-simplex
      auto leaf = std::make_shared<RayTree>();
      leaf->rays = sub;
      return {true, leaf};
    }
    if (count < 4 || count % 2 != 0) return {false, nullptr};
    const GeneratorSet full = gens_from_rows(sub);
    const uint32_t low = mask & (~mask + 1);
    const uint32_t rest = mask ^ low;
    for (uint32_t s = rest;; s = (s - 1) & rest) {
      const uint32_t m1 = low | (rest ^ s);
      const uint32_t m2 = mask ^ m1;
      if (std::popcount(m1) >= 2 && std::popcount(m2) >= 2) {
        const GeneratorSet P1 = gens_from_rows(pick(m1));
        const GeneratorSet P2 = gens_from_rows(pick(m2));
        const auto a = shared_cone_line(P1, P2, span_intersection(P1.mat, P2.mat));
        // internal type only: the shared line must avoid every ray
        if (a && !ray_listed(sub, *a)) {
          const auto left = search(m1);
          if (left.first) {
            const auto right = search(m2);
            if (right.first) {
              auto node = std::make_shared<RayTree>();
              node->rays = sub;
              node->is_leaf = false;
              node->left = left.second;
              node->right = right.second;
              node->a = *a;
              return {true, node};
            }
          }
        }
      }
      if (s == 0) break;
    }
    return {false, nullptr};
  }
};

} // namespace

std::pair<bool, RayTreePtr> is_general_bipyramidal(const GeneratorSet& A) {
  const std::vector<IVec> rays = extreme_rays(A); // throws NotPointed
  if (rays.size() > 16)
    throw BudgetExceeded("bipyramidal detection is limited to 16 extreme rays");
  if (rays.size() == 2 && cone_dim(A) == 2) {
    auto leaf = std::make_shared<RayTree>();
    leaf->rays = rays;
    return {true, leaf};
  }
  if (rays.size() < 4) return {false, nullptr};
  BipyramidSearch search{rays, {}};
  return search.search((1u << rays.size()) - 1);
}

BoundReport check_ray_bound(const GeneratorSet& A) {
  if (!validate(A)) throw NotPointed();
  const Index n = cone_dim(A);
  if (n < 2) throw DimensionOne();
  if (!is_ci_cone(A).verdict) throw NotCICone();
  BoundReport rep;
  rep.n = n;
  rep.k = static_cast<Index>(extreme_rays(A).size());
  rep.bound_holds = rep.k <= 2 * n - 2;
  rep.equality = rep.k == 2 * n - 2;
  rep.bipyramidal = is_general_bipyramidal(A).first;
  return rep;
}

std::optional<WitnessResult> ci_witness(const GeneratorSet& A1, const GeneratorSet& A2) {
  if (A1.ambient() != A2.ambient()) throw AmbientMismatch();
  if (!is_complete_intersection(A1).verdict)
    throw PartNotCI("first input is not a complete intersection");
  if (!is_complete_intersection(A2).verdict)
    throw PartNotCI("second input is not a complete intersection");
  const LatticeBasis L = lattice_intersection(row_basis(A1.mat), row_basis(A2.mat));
  if (L.rank() != 1) throw NoSharedLine();
  IVec a = L.basis.row(0).transpose();
  if (!(cone_membership(a, A1) && cone_membership(a, A2))) {
    a = -a;
    if (!(cone_membership(a, A1) && cone_membership(a, A2))) return std::nullopt;
  }
  const Int g = vec_gcd(a);
  const MultiplesTrace t1 = multiples_trace(a, A1);
  const MultiplesTrace t2 = multiples_trace(a, A2);

  // Least mu works for some tau, so the least admissible pair is found
  // coordinate by coordinate. Any window of g (resp. g*mu) consecutive
  // integers past complete_from contains an admissible value.
  Int mu = 0;
  for (Int t = 1; t <= t1.complete_from + g + 1; ++t) {
    if (t1.is_member(t) && boost::multiprecision::gcd(t, g) == 1) {
      mu = t;
      break;
    }
  }
  Int tau = 0;
  for (Int t = 1; t <= t2.complete_from + g * mu + 1; ++t) {
    if (t2.is_member(t) && boost::multiprecision::gcd(t, g) == 1 &&
        boost::multiprecision::gcd(t, mu) == 1) {
      tau = t;
      break;
    }
  }
  if (mu == 0 || tau == 0) throw Error("coprime multiplier search failed");

  WitnessResult w{mu, tau, g, A1.scaled(tau).concat(A2.scaled(mu)), nullptr};
  const DecisionResult d = is_complete_intersection(w.A_out);
  if (!d.verdict) throw Error("scaled union failed the complete intersection check");
  w.tree = d.tree;
  return w;
}

namespace {

using Rng = std::mt19937_64;

Int rnd(Rng& rng, int lo, int hi) {
  return Int(std::uniform_int_distribution<int>(lo, hi)(rng));
}

/// Random nonzero nonnegative combination of the rows of A.
IVec random_semigroup_element(Rng& rng, const GeneratorSet& A, int lo, int hi) {
  IVec b = IVec::Zero(A.ambient());
  bool nonzero = false;
  for (Index i = 0; i < A.size(); ++i) {
    const Int c = rnd(rng, lo, hi);
    if (c > 0) nonzero = true;
    b += A.row(i) * c;
  }
  if (!nonzero) b += A.row(0);
  return b;
}

GeneratorSet gen_gluing(Rng& rng, Index n, Index steps) {
  // Free start: upper triangular with positive diagonal, all entries
  // nonnegative, so the set is independent and the cone pointed.
  IMat m = IMat::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    m(i, i) = rnd(rng, 1, 4) + (n == 1 ? 1 : 0);
    for (Index j = i + 1; j < n; ++j) m(i, j) = rnd(rng, 0, 2);
  }
  GeneratorSet A(std::move(m));
  for (Index s = 0; s < steps; ++s) {
    const IVec b = random_semigroup_element(rng, A, 0, 2);
    const GeneratorSet extra = gens_from_rows({IVec(b * rnd(rng, 1, 3))});
    const auto w = ci_witness(A, extra);
    if (!w) throw GenerationFailed("witness merge failed");
    A = w->A_out;
  }
  return A;
}

GeneratorSet gen_sgluing(Rng& rng, Index n, Index steps) {
  if (n == 1) return gen_gluing(rng, 1, steps);
  const Index d0 = std::max<Index>(2, n - steps);
  const Index raising = n - d0;
  const Index extra = steps - raising;
  if (d0 + 2 * raising + extra > 14) throw GenerationFailed("instance would exceed budget");

  std::vector<IVec> rows;
  for (Index i = 0; i < d0; ++i) {
    IVec e = IVec::Zero(n);
    e[i] = rnd(rng, 1, 3);
    rows.push_back(e);
  }
  Index used = d0;
  for (Index s = 0; s < raising; ++s, ++used) {
    const GeneratorSet A = gens_from_rows(rows);
    const int kind = static_cast<int>(rnd(rng, 0, 2).convert_to<long>());
    if (kind == 0) {
      // internal: glue a 2-simplex along a relative interior point
      const IVec a = random_semigroup_element(rng, A, 1, 2);
      const Int sc = rnd(rng, 1, 2);
      IVec u = a * sc, v = a * sc;
      u[used] += 1;
      v[used] -= 1;
      rows.push_back(u);
      rows.push_back(v);
    } else {
      const std::vector<IVec> rays = extreme_rays(A);
      const IVec r = rays[static_cast<size_t>(
          rnd(rng, 0, static_cast<int>(rays.size()) - 1).convert_to<long>())];
      if (kind == 1) {
        // external, shared ray: glue {r, r + e_j} along r
        IVec u = r;
        u[used] += 1;
        rows.push_back(r);
        rows.push_back(u);
      } else {
        // external, absorbed ray: glue {s r + e_j, s r - e_j} along r
        const Int sc = rnd(rng, 1, 2);
        IVec u = r * sc, v = r * sc;
        u[used] += 1;
        v[used] -= 1;
        rows.push_back(u);
        rows.push_back(v);
      }
    }
  }
  for (Index s = 0; s < extra; ++s) {
    const GeneratorSet A = gens_from_rows(rows);
    const IVec b = random_semigroup_element(rng, A, 0, 2);
    rows.push_back(IVec(b * rnd(rng, 1, 2)));
  }
  return gens_from_rows(rows);
}

} // namespace

GeneratorSet random_ci_instance(std::uint64_t seed, Index target_dim, Index steps, GenMode mode) {
  if (target_dim < 1 || steps < 0) throw GenerationFailed("bad generator parameters");
  if (target_dim + 2 * steps > 16) throw GenerationFailed("instance would exceed budget");
  for (std::uint64_t attempt = 0; attempt < 8; ++attempt) {
    Rng rng(seed + attempt * 0x9e3779b97f4a7c15ULL);
    try {
      GeneratorSet A = mode == GenMode::Gluing ? gen_gluing(rng, target_dim, steps)
                                               : gen_sgluing(rng, target_dim, steps);
      const bool ok = mode == GenMode::Gluing ? is_complete_intersection(A).verdict
                                              : is_ci_cone(A).verdict;
      if (ok) return A;
    } catch (const Error&) {
      // perturb the seed and retry
    }
  }
  throw GenerationFailed("no valid instance after bounded retries");
}

} // namespace cicone
