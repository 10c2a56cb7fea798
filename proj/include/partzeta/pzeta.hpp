#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>

#include "partzeta/complex.hpp"
#include "partzeta/partitions.hpp"

namespace pz {

struct RouteValue {
  HPComplex value;
  HPReal tail_bound{0};  // bound on the part of the sum not evaluated
  std::string route;
};

/// Weight attached to each part in a generalized Dirichlet product. When the
/// weight is periodic the tail beyond the direct range is summed through
/// Hurwitz zeta values; otherwise it is only bounded, using |w(j)| <= j^growth.
struct PartWeight {
  std::function<HPReal(unsigned long)> w;
  std::optional<unsigned long> period;
  double growth = 0.0;

  static PartWeight one() { return {[](unsigned long) { return HPReal(1); }, 1UL, 0.0}; }
};

/// prod_{k in M} (1 - k^-s)^-1, or prod (1 + k^-s) for distinct parts.
RouteValue euler_product(const PartSet& spec, const HPComplex& s, const HPReal& tol);

/// prod_{j in M} (1 - w(j) j^-s)^-1 (or the distinct analogue).
RouteValue dirichlet_partition_series(const PartSet& spec, const PartWeight& weight, const HPComplex& s,
                                      const HPReal& tol);

/// Gamma(1 + a/m)^-n prod_r Gamma(1 + (a - e(r/n))/m), the partition zeta value
/// at integer n >= 2 over the parts {a + m j : j >= 1}.
HPReal closed_form_gamma(unsigned long a, unsigned long m, unsigned n);

/// log of the same value from the power series of log Gamma(1+z) about 0,
/// which converges when (a + 1)/m < 2.
HPReal log_eval_general(unsigned long a, unsigned long m, unsigned n, const HPReal& tol);

struct PoleReport {
  unsigned long pole_at_k;  // the series term zeta(k s) with k s = 1
};

struct MultiplesResult {
  std::variant<HPComplex, PoleReport> value;
  HPReal remainder_bound{0};
  unsigned long terms = 0;
  bool is_pole() const { return std::holds_alternative<PoleReport>(value); }
};

/// log zeta over the multiples of m: sum_{k>=1} zeta(s k) / (k m^(s k)) for
/// Re(s) > 0. Points within 1e-6 of some 1/N are reported as poles.
MultiplesResult log_eval_multiples(unsigned long m, const HPComplex& s, const HPReal& tol);

/// Moebius-inverted partial sum over k <= K.
HPReal zeta_via_mobius(unsigned long m, unsigned n, unsigned K);

/// [z^n] prod_{j<n} Gamma(1 - z e(j/n)), built from the Legendre series.
HPReal zeta_via_gamma_series(unsigned n);
/// [z^n] (P - 1/P)/2 for the same product P.
HPReal zeta_via_gamma_series_antisymmetric(unsigned n);

}  // namespace pz
