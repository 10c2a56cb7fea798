#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include <vector>

#include "partzeta/common.hpp"

namespace pz {

template <class S>
using MatrixX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

/// Determinant of an upper Hessenberg matrix (zero below the subdiagonal).
///
/// Expanding along the last column gives
///   D_n = sum_i (-1)^(n-i) h(i,n) h(i+1,i) ... h(n,n-1) D_(i-1),
/// which needs O(n^2) operations and no division, so it is exact over the
/// rationals.
template <class Derived>
typename Derived::Scalar hessenberg_determinant(const Eigen::MatrixBase<Derived>& h) {
  using S = typename Derived::Scalar;
  const Eigen::Index n = h.rows();
  if (h.cols() != n) throw DomainError("hessenberg_determinant: matrix must be square");
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j + 1 < i; ++j)
      if (h(i, j) != S(0)) throw DomainError("hessenberg_determinant: matrix is not upper Hessenberg");

  std::vector<S> d(static_cast<std::size_t>(n) + 1, S(0));
  d[0] = S(1);
  for (Eigen::Index c = 0; c < n; ++c) {
    S acc(0);
    S sub(1);  // product of subdiagonal entries h(r+1,r) for r = i..c-1, with sign
    for (Eigen::Index i = c; i >= 0; --i) {
      acc += h(i, c) * sub * d[static_cast<std::size_t>(i)];
      if (i > 0) sub *= -h(i, i - 1);
    }
    d[static_cast<std::size_t>(c) + 1] = acc;
  }
  return d[static_cast<std::size_t>(n)];
}

/// k x k matrix with -1 on the subdiagonal and entry(i, j) = coeff(j - i) * w(i, j)
/// on and above the diagonal. This is the shape shared by every
/// coefficient-extraction determinant in the library.
template <class S, class Entry>
MatrixX<S> toeplitz_hessenberg(Eigen::Index k, Entry entry) {
  MatrixX<S> m = MatrixX<S>::Constant(k, k, S(0));
  for (Eigen::Index i = 0; i < k; ++i) {
    if (i > 0) m(i, i - 1) = S(-1);
    for (Eigen::Index j = i; j < k; ++j) m(i, j) = entry(i, j);
  }
  return m;
}

}  // namespace pz
