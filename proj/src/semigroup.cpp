#include "cicone/semigroup.hpp"

#include <functional>
#include <map>
#include <vector>

namespace cicone {

namespace {

Rat dot(const RVec& c, const IVec& v) {
  Rat s = 0;
  for (Index k = 0; k < v.size(); ++k) s += c[k] * Rat(v[k]);
  return s;
}

std::vector<Int> key_of(const IVec& v) {
  return std::vector<Int>(v.data(), v.data() + v.size());
}

} // namespace

bool validate(const GeneratorSet& A) { return is_strongly_convex(A).pointed; }

std::optional<MembershipCertificate> membership(const IVec& b, const GeneratorSet& A,
                                                const RVec& functional) {
  if (b.size() != A.ambient()) throw AmbientMismatch();
  const Index m = A.size();
  std::vector<Rat> gen_weight(static_cast<size_t>(m));
  for (Index i = 0; i < m; ++i) gen_weight[static_cast<size_t>(i)] = dot(functional, A.row(i));

  // Failure memo per generator index, keyed by the residual vector.
  std::vector<std::map<std::vector<Int>, char>> failed(static_cast<size_t>(m));
  IVec coeffs = IVec::Zero(m);

  std::function<bool(Index, const IVec&)> dfs = [&](Index i, const IVec& r) -> bool {
    if (is_zero(r)) {
      for (Index j = i; j < m; ++j) coeffs[j] = 0;
      return true;
    }
    if (i == m) return false;
    const Rat cr = dot(functional, r);
    if (cr <= 0) return false;
    auto& memo = failed[static_cast<size_t>(i)];
    const auto key = key_of(r);
    if (memo.count(key)) return false;
    // exact floor(cr / weight_i); both are positive here
    const Rat ratio = cr / gen_weight[static_cast<size_t>(i)];
    const Int maxn =
        boost::multiprecision::numerator(ratio) / boost::multiprecision::denominator(ratio);
    IVec r2 = r;
    for (Int t = 0; t <= maxn; ++t) {
      if (t > 0) r2 -= A.row(i);
      if (dfs(i + 1, r2)) {
        coeffs[i] = t;
        return true;
      }
    }
    memo.emplace(key, 1);
    return false;
  };

  if (!dfs(0, b)) return std::nullopt;
  return MembershipCertificate{coeffs};
}

std::optional<MembershipCertificate> membership(const IVec& b, const GeneratorSet& A) {
  return membership(b, A, positive_functional(A));
}

bool exists_positive_multiple(const IVec& b, const GeneratorSet& A) {
  if (is_zero(b)) throw ZeroVector();
  if (!validate(A)) throw NotPointed();
  return cone_membership(b, A).has_value();
}

namespace {

/// Common denominator of a rational cone certificate for b: T*b always
/// lies in N A.
std::optional<Int> clearing_multiplier(const IVec& b, const GeneratorSet& A) {
  const auto lambda = cone_membership(b, A);
  if (!lambda) return std::nullopt;
  Int t = 1;
  for (Index i = 0; i < lambda->size(); ++i)
    t = boost::multiprecision::lcm(t, boost::multiprecision::denominator((*lambda)[i]));
  return t;
}

} // namespace

std::optional<Int> smallest_multiple(const IVec& b, const GeneratorSet& A) {
  if (is_zero(b)) throw ZeroVector();
  const auto T = clearing_multiplier(b, A);
  if (!T) return std::nullopt;
  const RVec c = positive_functional(A);
  for (Int t = 1; t <= *T; ++t) {
    if (membership(IVec(b * t), A, c)) return t;
  }
  // unreachable: T itself always succeeds
  return *T;
}

MultiplesTrace multiples_trace(const IVec& b, const GeneratorSet& A) {
  if (is_zero(b)) throw ZeroVector();
  const auto T = clearing_multiplier(b, A);
  if (!T) throw NoMultipleExists("no positive multiple of the base lies in the semigroup");
  const RVec c = positive_functional(A);

  MultiplesTrace trace;
  trace.base = b;
  Int run = 0;        // length of the current consecutive-member run
  Int run_start = 0;
  // T is itself a multiplier, so g divides every gcd the scan can reach.
  // Once g is stuck above 1 past the probe window no consecutive run of
  // front-member length can ever appear; bail out before the scan gets
  // expensive.
  Int g = *T;
  const Int probe = *T * 10 + 100;
  const Int cap = Int(10000) + *T * 50;
  for (Int t = 1; t <= cap; ++t) {
    if (membership(IVec(b * t), A, c)) {
      trace.members.push_back(t);
      g = boost::multiprecision::gcd(g, t);
      if (run == 0) run_start = t;
      ++run;
      if (run >= trace.members.front()) {
        trace.complete_from = run_start;
        return trace;
      }
    } else {
      run = 0;
    }
    if (t >= probe && g > 1) {
      throw NoMultipleExists(
          "multiplier gcd stayed above 1; the multiples can never become consecutive");
    }
  }
  throw NoMultipleExists(
      "multiplier semigroup never certified complete; gcd of multipliers likely exceeds 1");
}

} // namespace cicone
