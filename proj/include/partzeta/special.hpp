#pragma once

#include <vector>

#include "partzeta/complex.hpp"

namespace pz {

/// Principal branch of log Gamma(z). Spouge's formula at raised internal
/// precision, with the recurrence used to move Re(z) >= 1/2.
HPComplex log_gamma(const HPComplex& z);
HPReal log_gamma(const HPReal& x);  // x > 0
HPReal gamma(const HPReal& x);       // x not a pole

/// log Gamma(1 - z) = gamma z + sum_{k=2}^{K} zeta(k) z^k / k, |z| < 1.
HPComplex log_gamma_one_minus_legendre(const HPComplex& z, unsigned terms);

/// Spouge parameter a used for a precision of `bits`.
unsigned spouge_terms(unsigned bits);

/// Riemann zeta. Exact values at even positive and nonpositive integers,
/// Euler-Maclaurin summation for every other s != 1.
HPComplex riemann_zeta(const HPComplex& s);
HPReal riemann_zeta(const HPReal& s);
/// zeta(k) for an integer k != 1, cached per precision.
HPReal zeta_int(long k);
/// zeta(k) - 1 for k >= 2 with full relative accuracy.
HPReal zeta_minus_one(long k);

/// zeta(2j) = r * pi^(2j); returns r exactly.
Rational zeta_even_over_pi_power(long two_j);
/// zeta(-n) = (-1)^n B_(n+1) / (n+1) for n >= 0.
Rational zeta_nonpositive(long n);

/// Hurwitz zeta sum_{n>=0} (n + q)^(-s) for q > 0, s != 1.
HPComplex hurwitz_zeta(const HPComplex& s, const HPReal& q);
HPReal hurwitz_zeta(const HPReal& s, const HPReal& q);

/// Upper incomplete gamma Gamma(s, x) for x > 0.
HPReal incomplete_gamma_upper(const HPReal& s, const HPReal& x);

/// Exact coefficients of t / (1 - e^(-t)) through t^T.
std::vector<Rational> euler_bernoulli_coefficients(unsigned order);

/// Checks the expansion coefficient of t^(n+1) against -zeta(-n)/n! for
/// 1 <= n <= T-1, along with the constant 1 and linear 1/2.
bool euler_bernoulli_genfunc_check(unsigned order);

}  // namespace pz
