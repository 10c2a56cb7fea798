#pragma once

#include <vector>

#include "partzeta/complex.hpp"
#include "partzeta/hessenberg.hpp"
#include "partzeta/series.hpp"

namespace pz {

/// k! [x^k] exp(sum_j a_j x^j / j!).
template <class S>
S complete_bell_exp(const std::vector<S>& a) {
  const std::size_t k = a.size();
  TruncatedSeries<S> arg(k);
  for (std::size_t j = 1; j <= k; ++j) arg[j] = a[j - 1] / embed<S>(Rational(factorial(static_cast<unsigned>(j))));
  return arg.exp()[k] * embed<S>(Rational(factorial(static_cast<unsigned>(k))));
}

/// Faa di Bruno determinant: entries C(k-1-i, j-i) a_(j-i+1), -1 below the diagonal.
template <class S>
S complete_bell_det(const std::vector<S>& a) {
  const auto k = static_cast<Eigen::Index>(a.size());
  auto m = toeplitz_hessenberg<S>(k, [&](Eigen::Index i, Eigen::Index j) {
    return embed<S>(Rational(binomial(k - 1 - i, j - i))) * a[static_cast<std::size_t>(j - i)];
  });
  return hessenberg_determinant(m);
}

/// Complete Bell polynomial B_k(a_1..a_k), evaluated by both the determinant
/// and the series exponential. Exact scalars must agree exactly; floating
/// scalars within `rel_tol` of the larger magnitude.
template <class S>
S complete_bell(const std::vector<S>& a, const HPReal& rel_tol = pow2_neg(200)) {
  if (a.empty()) throw DomainError("complete_bell needs k >= 1");
  S via_det = complete_bell_det(a);
  S via_exp = complete_bell_exp(a);
  if constexpr (std::is_same_v<S, Rational>) {
    if (via_det != via_exp) throw InternalDefect("complete_bell: determinant and series routes disagree");
  } else {
    HPReal scale = std::max(HPReal(1), magnitude(via_det));
    if (magnitude(via_det - via_exp) > rel_tol * scale)
      throw InternalDefect("complete_bell: determinant and series routes disagree");
  }
  return via_det;
}

}  // namespace pz
