#pragma once

// Exact integer linear algebra on row lattices: Hermite normal form,
// kernels, lattice and span intersections, and membership solving.
//
// Conventions fixed once for the whole library:
//   * generators and lattice elements are ROWS of matrices,
//   * relations are LEFT kernels ({x : x * M = 0}),
//   * the canonical basis of a lattice is the nonzero-row part of its
//     row-style HNF (echelon, positive pivots, entries above each pivot
//     reduced into [0, pivot)).

#include "cicone/errors.hpp"
#include "cicone/types.hpp"

#include <optional>
#include <utility>

namespace cicone {

struct HnfResult {
  IMat H; ///< H = U * M, row-style Hermite normal form
  IMat U; ///< unimodular transform, det(U) = +-1
};

/// Integer basis matrix of a sublattice of Z^n; rows are Z-linearly
/// independent. Rank 0 is a 0 x n matrix.
struct LatticeBasis {
  IMat basis;
  Index rank() const { return basis.rows(); }
  Index ambient() const { return basis.cols(); }
};

HnfResult hnf(const IMat& M);

Index rank(const IMat& M);

/// Canonical (HNF) basis of the row lattice of M.
LatticeBasis row_basis(const IMat& M);

/// Basis of the left kernel {x in Z^m : x * M = 0}. The result is
/// saturated: the lattice equals its own saturation.
LatticeBasis kernel_lattice(const IMat& M);

/// Basis of L1 cap L2, computed via the kernel of the stacked matrix
/// [B1; -B2]. Throws AmbientMismatch if the column counts differ.
LatticeBasis lattice_intersection(const LatticeBasis& B1, const LatticeBasis& B2);

/// Integer basis, with primitive rows, of span_Q(rows M1) cap span_Q(rows M2).
LatticeBasis span_intersection(const IMat& M1, const IMat& M2);

/// Coefficients x with x * B.basis = v when v lies in the lattice.
std::optional<IVec> solve_in_lattice(const IVec& v, const LatticeBasis& B);

bool in_lattice(const IVec& v, const LatticeBasis& B);

/// Least t >= 1 such that t*v lies in the lattice, or absent when no
/// multiple of v does (v outside the rational span).
std::optional<Int> smallest_lattice_multiplier(const IVec& v, const LatticeBasis& B);

/// (v / gcd, gcd). Throws ZeroVector on v = 0.
std::pair<IVec, Int> primitive(const IVec& v);

/// Lattice equality through canonical HNF bases.
bool lattices_equal(const LatticeBasis& B1, const LatticeBasis& B2);

} // namespace cicone
