#pragma once

#include "cicone/errors.hpp"
#include "cicone/types.hpp"

#include <string>
#include <vector>

namespace cicone {

/// Ordered list of nonzero integer vectors a_1..a_m in Z^n, the single
/// input object for the semigroup, cone, and ideal views. Row order is
/// significant: indices identify generators in partitions and
/// certificates.
struct GeneratorSet {
  IMat mat; ///< m x n, rows are generators
  std::string name;

  GeneratorSet() = default;
  explicit GeneratorSet(IMat m_, std::string name_ = {})
      : mat(std::move(m_)), name(std::move(name_)) {
    for (Index i = 0; i < mat.rows(); ++i) {
      if (mat.row(i).isZero()) throw ZeroGenerator();
    }
  }

  Index size() const { return mat.rows(); }
  Index ambient() const { return mat.cols(); }
  IVec row(Index i) const { return mat.row(i).transpose(); }

  /// Subset by 0-based indices, preserving order of `idx`.
  GeneratorSet subset(const std::vector<int>& idx) const {
    IMat s(static_cast<Index>(idx.size()), mat.cols());
    for (size_t k = 0; k < idx.size(); ++k) s.row(static_cast<Index>(k)) = mat.row(idx[k]);
    return GeneratorSet(std::move(s));
  }

  /// Rows of this set followed by rows of other.
  GeneratorSet concat(const GeneratorSet& other) const {
    if (ambient() != other.ambient()) throw AmbientMismatch();
    IMat s(size() + other.size(), ambient());
    s.topRows(size()) = mat;
    s.bottomRows(other.size()) = other.mat;
    return GeneratorSet(std::move(s));
  }

  /// Every row multiplied by t.
  GeneratorSet scaled(const Int& t) const {
    if (t == 0) throw ZeroGenerator("scaling a generator set by zero");
    return GeneratorSet(IMat(mat * t));
  }
};

inline GeneratorSet make_gens(std::initializer_list<std::initializer_list<long>> rows,
                              std::string name = {}) {
  return GeneratorSet(make_imat(rows), std::move(name));
}

} // namespace cicone
