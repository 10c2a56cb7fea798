#pragma once

#include <optional>

#include "partzeta/common.hpp"

namespace pz {

struct PadicContext {
  unsigned long p = 0;
  unsigned a = 0;
  unsigned k = 1;
  /// Throws DomainError naming the first violated requirement.
  void validate() const;
};

/// p-adic valuation of a rational; std::nullopt stands for +infinity (q = 0).
std::optional<long> padic_valuation(const Rational& q, unsigned long p);

/// (1 - p^(n-1)) * zeta(1 - n) for even n >= 2.
Rational zeta_star_neg(unsigned long p, unsigned long n);

/// v_p of the difference of the Euler-factor-stripped values at 1-k1 and 1-k2
/// is at least a+1, under the Kummer hypotheses; violations throw DomainError.
bool kummer_check(unsigned long p, unsigned a, unsigned long k1, unsigned long k2);

/// (1/k!) det of the k x k Hessenberg matrix with entries
/// zeta*((1-m)(j-i+1)) (k-i)!/(k-j)! and -1 below the diagonal.
Rational padic_fixedlen(const PadicContext& ctx, unsigned long m);

/// v_p(padic_fixedlen(m1) - padic_fixedlen(m2)) >= a+1.
bool interpolation_check(unsigned long p, unsigned a, unsigned k, unsigned long m1, unsigned long m2);

/// Valuation actually observed by interpolation_check (nullopt = equal values).
std::optional<long> interpolation_valuation(unsigned long p, unsigned a, unsigned k, unsigned long m1,
                                            unsigned long m2);

/// Smallest m2 > m1 with m2 = 2 mod (p-1) and m2 = m1 mod p^a, i.e. m1 + (p-1) p^a.
unsigned long suggest_m2(unsigned long p, unsigned a, unsigned long m1);

}  // namespace pz
