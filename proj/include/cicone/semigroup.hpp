#pragma once

// The affine semigroup N A: validation, exact membership with integer
// certificates, positive multiples, and the numerical-trace scan used by
// the witness construction.

#include "cicone/cone.hpp"
#include "cicone/generators.hpp"

#include <optional>
#include <vector>

namespace cicone {

/// Nonnegative integer coefficients with sum n_i a_i equal to the queried
/// vector.
struct MembershipCertificate {
  IVec coefficients;
};

/// Which positive multiples of a base vector land in N A. `members` lists
/// the multipliers found in the scanned range; every t >= complete_from is
/// a member (a run of min-member-many consecutive members proves the
/// conductor of the multiplier semigroup is passed).
struct MultiplesTrace {
  IVec base;
  std::vector<Int> members;
  Int complete_from;

  bool is_member(const Int& t) const {
    if (t >= complete_from) return true;
    for (const Int& s : members)
      if (s == t) return true;
    return false;
  }
};

/// True iff N A has no invertible elements, i.e. pos_Q(A) is pointed.
bool validate(const GeneratorSet& A);

/// Lexicographically least certificate, found by bounded depth-first
/// search with memoization on residual vectors; the coefficient bound
/// n_i <= (c.b)/(c.a_i) comes from a positive functional c.
std::optional<MembershipCertificate> membership(const IVec& b, const GeneratorSet& A);

/// Variant reusing a precomputed positive functional (hot paths).
std::optional<MembershipCertificate> membership(const IVec& b, const GeneratorSet& A,
                                                const RVec& functional);

/// Exists t >= 1 with t*b in N A; equivalent to b in pos_Q(A) by clearing
/// denominators of a rational cone certificate.
bool exists_positive_multiple(const IVec& b, const GeneratorSet& A);

/// Least such t, or absent. The search is bounded by the common
/// denominator of one rational cone certificate, which always works.
std::optional<Int> smallest_multiple(const IVec& b, const GeneratorSet& A);

/// Scan t = 1, 2, ... recording membership of t*b until completeness is
/// certified. Throws NoMultipleExists when no multiple lies in N A, or
/// when the multiplier semigroup has gcd > 1 so no conductor exists
/// (callers are expected to guarantee the Z-intersection condition).
MultiplesTrace multiples_trace(const IVec& b, const GeneratorSet& A);

} // namespace cicone
