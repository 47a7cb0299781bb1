#pragma once

// Independent algebraic oracle: toric ideal generators via lattice basis
// plus iterated single-variable saturation with a binomial-only Buchberger
// engine, minimal generator counts by graded Nakayama, and the resulting
// complete-intersection test mu = m - rank.

#include "cicone/generators.hpp"
#include "cicone/linalg.hpp"

#include <vector>

namespace cicone {

/// Pure difference x^plus - x^minus over m variables. Elements of the
/// saturated toric ideal have disjoint supports and balanced degrees
/// (A * plus = A * minus); intermediate lattice-ideal elements may share
/// a monomial factor.
struct Binomial {
  IVec plus, minus;
};

/// Weight-graded reverse lexicographic order. Weights are strictly
/// positive so the order is global; `cheapest` names the variable placed
/// last in the reverse-lexicographic tie break (-1 = the last variable).
struct TermOrder {
  std::vector<Int> weights;
  int cheapest = -1;

  /// Positive when u is the larger monomial, negative when smaller.
  int cmp(const IVec& u, const IVec& v) const;
  Int degree(const IVec& u) const;
};

/// Work limits; exceeding either throws BudgetExceeded. The oracle is a
/// desk-scale validator, so limits are deliberately modest.
struct OracleBudget {
  long max_pairs = 20000;
  long max_steps = 2000000;
};

struct OracleReport {
  std::vector<Binomial> markov; ///< reduced Groebner basis of the toric ideal
  Index mu = 0;                 ///< minimal generator count
  Index height = 0;             ///< m - rank(A)
  bool is_ci = false;           ///< mu == height
};

/// Positive integer weights w with w_i proportional to c . a_i for a
/// positive functional c; they grade the toric ideal.
std::vector<Int> grading_weights(const GeneratorSet& A);

/// Each basis row b maps to x^{b+} - x^{b-}.
std::vector<Binomial> lattice_to_binomials(const LatticeBasis& B);

/// Reduced Groebner basis. Pure-difference inputs with coefficients +-1
/// stay pure differences throughout: the S-pair of x^u - x^v and
/// x^p - x^q is x^{l-u+v} - x^{l-p+q} (l = lcm of the leads) and monomial
/// rewriting m -> m - lead + trail preserves the form, so no general
/// polynomial arithmetic occurs.
std::vector<Binomial> buchberger(std::vector<Binomial> gens, const TermOrder& ord,
                                 const OracleBudget& budget = {});

/// From a basis ideal of the saturated lattice ker_Z(A) to the full toric
/// ideal: one pass per variable computes a basis with that variable
/// cheapest and divides every element by its largest power.
std::vector<Binomial> saturate(std::vector<Binomial> gens, const GeneratorSet& A,
                               const OracleBudget& budget = {});

/// Greedy removal of redundant generators (normal form against the rest),
/// in decreasing weighted degree with lexicographic ties. Graded Nakayama
/// for the pointed grading makes the surviving count order-independent.
Index minimal_generator_count(const std::vector<Binomial>& gens, const GeneratorSet& A,
                              const OracleBudget& budget = {});

/// Full pipeline kernel -> binomials -> saturate -> count. Guards: at
/// most 8 generators with entries bounded by 30 in absolute value.
OracleReport is_ci_oracle(const GeneratorSet& A, const OracleBudget& budget = {});

} // namespace cicone
