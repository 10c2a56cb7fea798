#pragma once

#include <string>
#include <vector>

#include "partzeta/common.hpp"
#include "partzeta/complex.hpp"
#include "partzeta/polynomial.hpp"
#include "partzeta/roots.hpp"

namespace pz {

/// Completed critical values Lambda(f,1..k-1) of an even-weight newform.
struct LProfile {
  unsigned weight = 0;
  unsigned long level = 1;
  int sign = 1;
  std::vector<HPReal> lambda;  // lambda[j-1] = Lambda(f, j)
  std::string source = "computed";

  const HPReal& at(unsigned s) const;  // 1 <= s <= k-1
  /// Throws DomainError on shape errors or when the functional equation,
  /// the monotone chain, or the central zero (sign -1) fails at tolerance tol.
  void validate(const HPReal& tol) const;
};

struct Monomial {
  Rational coefficient;
  std::vector<std::pair<unsigned, unsigned>> powers;  // (variable index, exponent), index >= 2
};

/// F_n(x_1, ..., x_n) = -2 sigma_1(n) x_1 / n + sum over partitions of n without a part n.
struct UniversalPolynomial {
  unsigned n = 0;
  Rational linear_coefficient;  // coefficient of x_1
  std::vector<Monomial> terms;

  /// x[i] is the value of x_i; x[0] is ignored, so x.size() must exceed n.
  Rational evaluate(const std::vector<Rational>& x) const;
  std::string to_string() const;
};

/// Materializes every monomial; the count is p(n) - 1, so keep n moderate.
UniversalPolynomial universal_F(unsigned n);

/// tau(1..n_max) from the universal recursion at x_1 = 12, x_i = tau(i).
/// The recursion runs in the equivalent logarithmic form; for n <= explicit_upto the
/// materialized F_n is evaluated as well and must agree. Non-integers throw InternalDefect.
std::vector<BigInt> tau_recursive(unsigned n_max, unsigned explicit_upto = 20);

/// Coefficients of q prod (1-q^n)^24 through q^n_max; entry 0 is tau(1).
std::vector<BigInt> tau_eta_oracle(unsigned n_max);

/// 1 - (2k/B_k) sum sigma_{k-1}(n) q^n, coefficients 0..T.
std::vector<Rational> eisenstein_coeffs(unsigned k, unsigned T);

/// Lambda(Delta, s) for 1 <= s <= 11 by the split incomplete-gamma series.
HPReal lambda_delta(const HPReal& s, const HPReal& tol);
/// Number of series terms lambda_delta uses for tolerance tol.
unsigned lambda_delta_terms(const HPReal& tol);
LProfile build_LProfile_delta(const HPReal& tol);

/// R_f(z) = sum_j C(k-2,j) Lambda(f,k-1-j) z^j.
PolyC period_polynomial(const LProfile& prof);

/// Constants c_even = [z^2] R and c_odd = [z^1] R / 4 for weight 12, and the
/// largest relative deviation of the coefficients from the patterns
/// c_even (36/691, 1, 3, 3, 1, 36/691) and c_odd (4, 25, 42, 25, 4).
struct DeltaDecomposition {
  HPReal even_constant, odd_constant, pattern_deviation;
};
DeltaDecomposition delta_decomposition(const LProfile& prof);

/// (1/(k-2)!) sum C(k-2,j) Lambda(f,j+1) j^m, with 0^0 = 1.
HPReal moments(const LProfile& prof, unsigned m);
/// The same moment from raw L-values: sum (sqrt N / 2 pi)^(j+1) L(f,j+1) j^m / (k-2-j)!.
HPReal moments_first_form(const LProfile& prof, unsigned m);

struct ZetaPolynomial {
  PolyC poly;
  unsigned weight = 0;
  int sign = 1;
  std::string source;
  /// For sign -1 the top coefficient vanishes identically and is removed;
  /// this is the magnitude that was discarded.
  HPReal dropped_top = 0;
};

ZetaPolynomial zeta_polynomial(const LProfile& prof);

struct FunctionalEqResult {
  HPReal residual;  // max coefficient of Z(s) - sign Z(1-s)
  HPReal norm;      // max coefficient of Z
};
FunctionalEqResult functional_eq_check(const PolyC& z, int sign);

struct RhResult {
  RootResult roots;
  HPReal max_deviation;  // max |Re(root) - 1/2|
};
RhResult rh_check(const PolyC& z);

/// Max |[z^n] R_f(z)/(1-z)^(k-1) - Z_f(-n)| over 0 <= n <= T.
HPReal generating_check(const LProfile& prof, unsigned T);

/// H with H(n) = [z^n] U(z)/(1-z)^(e+1), e = deg U; requires U(1) != 0.
PolyQ rv_transform(const PolyQ& u);
PolyC rv_transform(const PolyC& u);

PolyQ H_plus(unsigned k);   // C(s+k-2,k-2) + C(s,k-2)
PolyQ H_minus(unsigned k);  // sum_{j=0}^{k-3} C(s-j+k-3,k-3)

/// Ordinates t, ascending, with h_k(t) = sum arccot(2t/(2j+1)) on the target set
/// {pi,...,(k-3)pi} (sign < 0) or {pi/2,...,(k-5/2)pi} (sign > 0).
std::vector<HPReal> hk_zero_solver(unsigned k, int sign);

/// Largest box for the exhaustive lattice scan.
inline constexpr unsigned long kEhrhartBoxLimit = 50'000'000UL;
/// Lattice points of m conv{e_1,...,e_{k-3}, -sum e_j}; DomainError past kEhrhartBoxLimit.
BigInt ehrhart_simplex_count(unsigned k, unsigned long m);

struct Weight4Result {
  bool inequality = false;   // (N/pi^2) L(f,3)^2 >= L(f,2)^2
  bool unit_circle = false;  // both roots of R_f within 1e-20 of the unit circle
  HPReal lhs, rhs;
  bool holds() const { return inequality; }
  /// The inequality and the unit-circle property must agree.
  bool consistent() const { return inequality == unit_circle; }
};
/// Validates the profile first (tolerance tol) so malformed input never reaches the check.
Weight4Result weight4_inequality_check(const LProfile& prof, const HPReal& tol);

struct ConvergenceRow {
  std::string source;
  HPReal hausdorff;     // between roots of Z_f and of H_k^sign(-s)
  HPReal max_ordinate;  // largest |Im| among the roots of Z_f
  HPReal bound;         // (k-3)(k-7/2) for sign +1, (k-4)(k-9/2) for sign -1
  bool within_bound = false;
};
std::vector<ConvergenceRow> convergence_experiment(const std::vector<LProfile>& profiles);

/// Synthetic profile whose inner values are scaled by powers of x toward the
/// edge-dominated regime of H_k^sign; requires 0 < x < 1.
LProfile synthetic_profile(unsigned k, int sign, const HPReal& x);

/// Hausdorff distance between two finite point sets.
HPReal hausdorff_distance(const std::vector<HPComplex>& a, const std::vector<HPComplex>& b);

}  // namespace pz
