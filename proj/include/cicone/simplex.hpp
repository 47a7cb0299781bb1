#pragma once

// Exact rational linear programming. The solver is a dense two-phase
// tableau simplex over cpp_rational using Bland's rule, so it terminates
// and is deterministic: identical input always yields the identical
// witness.

#include "cicone/types.hpp"

#include <optional>
#include <set>

namespace cicone {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  RVec x;        ///< valid when Optimal
  Rat objective; ///< valid when Optimal
};

/// maximize c.x subject to A x = b, x >= 0.
LpSolution solve_lp(const RMat& A, const RVec& b, const RVec& c);

/// Exact feasibility kernel: nonnegative rational lambda with
/// lambda * eq = rhs and lambda_j > 0 for every j in strict, if one
/// exists. Rows of eq index the lambda components.
std::optional<RVec> lp_feasible(const IMat& eq, const IVec& rhs,
                                const std::set<Index>& strict = {});

} // namespace cicone
