#include "cicone/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace cicone {

namespace {

using boost::multiprecision::abs;

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

} // namespace

HnfResult hnf(const IMat& M) {
  const Index m = M.rows();
  const Index n = M.cols();
  IMat H = M;
  IMat U = IMat::Identity(m, m);
  Index r = 0;
  for (Index col = 0; col < n && r < m; ++col) {
    // Clear the column below row r, always pivoting on the smallest
    // nonzero magnitude so entries stay small.
    while (true) {
      Index piv = -1;
      for (Index i = r; i < m; ++i) {
        if (H(i, col) != 0 && (piv < 0 || abs(H(i, col)) < abs(H(piv, col))))
          piv = i;
      }
      if (piv < 0) break;
      if (piv != r) {
        H.row(piv).swap(H.row(r));
        U.row(piv).swap(U.row(r));
      }
      bool remaining = false;
      for (Index i = r + 1; i < m; ++i) {
        if (H(i, col) != 0) {
          const Int q = H(i, col) / H(r, col);
          if (q != 0) {
            H.row(i) -= H.row(r) * q;
            U.row(i) -= U.row(r) * q;
          }
          if (H(i, col) != 0) remaining = true;
        }
      }
      if (!remaining) break;
    }
    if (r < m && H(r, col) != 0) {
      if (H(r, col) < 0) {
        H.row(r) = -H.row(r);
        U.row(r) = -U.row(r);
      }
      for (Index i = 0; i < r; ++i) {
        const Int q = floor_div(H(i, col), H(r, col));
        if (q != 0) {
          H.row(i) -= H.row(r) * q;
          U.row(i) -= U.row(r) * q;
        }
      }
      ++r;
    }
  }
  return {std::move(H), std::move(U)};
}

Index rank(const IMat& M) {
  const IMat H = hnf(M).H;
  Index r = 0;
  for (Index i = 0; i < H.rows(); ++i) {
    if (!H.row(i).isZero()) ++r;
  }
  return r;
}

LatticeBasis row_basis(const IMat& M) {
  const IMat H = hnf(M).H;
  Index r = 0;
  while (r < H.rows() && !H.row(r).isZero()) ++r;
  return {H.topRows(r)};
}

LatticeBasis kernel_lattice(const IMat& M) {
  const auto [H, U] = hnf(M);
  const Index m = M.rows();
  Index r = 0;
  while (r < m && !H.row(r).isZero()) ++r;
  IMat K(m - r, m);
  for (Index i = r; i < m; ++i) K.row(i - r) = U.row(i);
  return row_basis(K);
}

LatticeBasis lattice_intersection(const LatticeBasis& B1, const LatticeBasis& B2) {
  if (B1.ambient() != B2.ambient()) throw AmbientMismatch();
  const Index r1 = B1.rank();
  const Index r2 = B2.rank();
  IMat S(r1 + r2, B1.ambient());
  S.topRows(r1) = B1.basis;
  S.bottomRows(r2) = -B2.basis;
  const LatticeBasis K = kernel_lattice(S);
  // (x, y) in the kernel means x*B1 = y*B2, a point of both lattices.
  const IMat inter = K.basis.leftCols(r1) * B1.basis;
  return row_basis(inter);
}

LatticeBasis span_intersection(const IMat& M1, const IMat& M2) {
  if (M1.cols() != M2.cols()) throw AmbientMismatch();
  IMat S(M1.rows() + M2.rows(), M1.cols());
  S.topRows(M1.rows()) = M1;
  S.bottomRows(M2.rows()) = -M2;
  const LatticeBasis K = kernel_lattice(S);
  const IMat cand = K.basis.leftCols(M1.rows()) * M1;
  // Saturate via a double orthogonal complement; kernel_lattice output is
  // saturated, so the rows of the result are primitive.
  const LatticeBasis span = row_basis(cand);
  const LatticeBasis orth = kernel_lattice(IMat(span.basis.transpose()));
  return kernel_lattice(IMat(orth.basis.transpose()));
}

std::optional<IVec> solve_in_lattice(const IVec& v, const LatticeBasis& B) {
  if (v.size() != B.ambient()) throw AmbientMismatch();
  const auto [H, U] = hnf(B.basis);
  const Index r = B.rank();
  IVec residual = v;
  IVec y(r);
  for (Index i = 0; i < r; ++i) {
    Index c = 0;
    while (c < H.cols() && H(i, c) == 0) ++c;
    if (c == H.cols()) return std::nullopt; // dependent rows in a basis
    if (residual[c] % H(i, c) != 0) return std::nullopt;
    y[i] = residual[c] / H(i, c);
    if (y[i] != 0) residual -= (H.row(i) * y[i]).transpose();
  }
  if (!is_zero(residual)) return std::nullopt;
  IVec x(r);
  for (Index j = 0; j < r; ++j) {
    Int s = 0;
    for (Index i = 0; i < r; ++i) s += y[i] * U(i, j);
    x[j] = s;
  }
  return x;
}

bool in_lattice(const IVec& v, const LatticeBasis& B) {
  return solve_in_lattice(v, B).has_value();
}

std::optional<Int> smallest_lattice_multiplier(const IVec& v, const LatticeBasis& B) {
  if (v.size() != B.ambient()) throw AmbientMismatch();
  const IMat H = hnf(B.basis).H;
  const Index r = B.rank();
  RVec residual(v.size());
  for (Index j = 0; j < v.size(); ++j) residual[j] = Rat(v[j]);
  Int t = 1;
  for (Index i = 0; i < r; ++i) {
    Index c = 0;
    while (c < H.cols() && H(i, c) == 0) ++c;
    if (c == H.cols()) return std::nullopt;
    const Rat yi = residual[c] / Rat(H(i, c));
    for (Index j = 0; j < H.cols(); ++j) residual[j] -= yi * Rat(H(i, j));
    t = boost::multiprecision::lcm(t, boost::multiprecision::denominator(yi));
  }
  for (Index j = 0; j < residual.size(); ++j) {
    if (residual[j] != 0) return std::nullopt;
  }
  return t;
}

std::pair<IVec, Int> primitive(const IVec& v) {
  if (is_zero(v)) throw ZeroVector();
  const Int g = vec_gcd(v);
  IVec p(v.size());
  for (Index i = 0; i < v.size(); ++i) p[i] = v[i] / g;
  return {std::move(p), g};
}

bool lattices_equal(const LatticeBasis& B1, const LatticeBasis& B2) {
  if (B1.ambient() != B2.ambient()) return false;
  const IMat H1 = row_basis(B1.basis).basis;
  const IMat H2 = row_basis(B2.basis).basis;
  return mat_eq(H1, H2);
}

} // namespace cicone
