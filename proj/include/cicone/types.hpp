#pragma once

// Dense exact-arithmetic scalar and matrix types used throughout.
// Integers are unbounded (boost::multiprecision::cpp_int); rationals are
// always kept in lowest terms with positive denominator by the backend.

#include <Eigen/Core>

#include <boost/multiprecision/traits/is_byte_container.hpp>
#include <type_traits>

namespace boost { namespace multiprecision { namespace detail {
// Eigen 3.4 typedefs const_iterator to void for two-dimensional expressions,
// which trips this trait inside overload resolution. Eigen types are never
// byte containers.
template <class C>
   requires std::is_base_of_v<Eigen::EigenBase<C>, C>
struct is_byte_container<C> : public boost::false_type {};
}}} // namespace boost::multiprecision::detail

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Dense>

#include <string>
#include <utility>
#include <vector>

namespace cicone {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using RMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

using Index = Eigen::Index;

inline Int vec_gcd(const IVec& v) {
  Int g = 0;
  for (Index i = 0; i < v.size(); ++i) g = boost::multiprecision::gcd(g, v[i]);
  return g;
}

inline bool is_zero(const IVec& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (v[i] != 0) return false;
  return true;
}

inline bool vec_eq(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) return false;
  for (Index i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

inline bool mat_eq(const IMat& a, const IMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

/// Strict lexicographic comparison of integer vectors of equal length.
inline bool lex_less(const IVec& a, const IVec& b) {
  for (Index i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

inline IVec make_ivec(std::initializer_list<long> xs) {
  IVec v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (long x : xs) v[i++] = x;
  return v;
}

inline IMat make_imat(std::initializer_list<std::initializer_list<long>> rows) {
  const Index m = static_cast<Index>(rows.size());
  const Index n = m == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  IMat M(m, n);
  Index i = 0;
  for (const auto& r : rows) {
    Index j = 0;
    for (long x : r) M(i, j++) = x;
    ++i;
  }
  return M;
}

inline std::string to_string(const IVec& v) {
  std::string s = "(";
  for (Index i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

} // namespace cicone
