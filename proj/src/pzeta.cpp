#include "partzeta/pzeta.hpp"

#include <cmath>
#include <numeric>

#include "partzeta/special.hpp"
#include "partzeta/tables.hpp"

namespace pz {

namespace {

constexpr unsigned kGuardBits = 32;
constexpr unsigned long kDirectRange = 32;

HPComplex complex_pow_neg_int(unsigned long k, const HPComplex& s) { return pow_neg(HPReal(k), s); }

// -log(1 - x) or log(1 + x), principal branch.
HPComplex euler_log_factor(const HPComplex& x, bool distinct) {
  const HPComplex one(HPReal(1));
  return distinct ? log(one + x) : -log(one - x);
}

RouteValue weighted_product(const PartSet& spec, const PartWeight& weight, const HPComplex& s_in, const HPReal& tol_in,
                            const std::string& route) {
  if (spec.divergent()) throw DomainError("part 1 has unbounded multiplicity: the partition zeta function diverges");
  if (!(s_in.re > HPReal(1) + HPReal(weight.growth)))
    throw DomainError("the product needs Re(s) > 1 + growth exponent of the weight");
  const unsigned bits = WorkingPrecision::current_bits() + kGuardBits;
  RouteValue out;
  out.route = route;
  {
    WorkingPrecision wp(bits);
    const HPComplex s = rounded(s_in);
    const HPReal tol = rounded(tol_in);
    const HPReal sigma = s.re - HPReal(weight.growth);
    HPComplex log_sum(HPReal(0));

    // Copies of part 1: a finite geometric factor.
    HPComplex ones_factor(HPReal(1));
    if (spec.contains(1)) {
      const HPReal w1 = weight.w(1);
      HPReal f = 0, wp1 = 1;
      for (unsigned long i = 0; i <= spec.ones_limit(); ++i, wp1 *= w1) f += wp1;
      ones_factor = HPComplex(f);
    }

    if (weight.period) {
      const unsigned long period = std::lcm(spec.period(), *weight.period);
      const unsigned long start = std::max({kDirectRange, spec.periodic_start(), 2UL});
      for (unsigned long k = 2; k < start; ++k) {
        if (!spec.contains(k)) continue;
        const HPReal w = weight.w(k);
        if (w == 0) continue;
        log_sum += euler_log_factor(complex_pow_neg_int(k, s) * w, spec.distinct);
      }
      std::vector<unsigned long> heads;
      for (unsigned long r = start; r < start + period; ++r)
        if (spec.contains(r) && weight.w(r) != 0) heads.push_back(r);
      if (!heads.empty()) {
        HPReal wmax = 0;
        for (auto r : heads) wmax = std::max(wmax, HPReal(abs(weight.w(r))));
        const HPReal kk = HPReal(start);
        const HPReal ratio = wmax * pow(kk, -s.re);
        if (!(ratio < HPReal(0.5))) throw NumericFailure("tail power series would converge too slowly");
        // sum_{p>=1} (c_p / p) sum_r w(r)^p L^(-p s) zeta(p s, r/L)
        const HPReal lper = HPReal(period);
        for (unsigned long p = 1;; ++p) {
          const HPComplex ps = s * HPReal(p);
          const HPComplex lpow = pow_neg(lper, ps);
          HPComplex inner(HPReal(0));
          for (auto r : heads) {
            const HPReal wr = pow(weight.w(r), HPReal(p));
            inner += hurwitz_zeta(ps, HPReal(r) / lper) * wr;
          }
          HPComplex term = lpow * inner / HPReal(p);
          if (spec.distinct && p % 2 == 0) term = -term;
          log_sum += term;
          // Remaining p' > p: each inner sum is bounded by wmax^p' (K^(-p' sigma) + K^(1-p' sigma)/(p' sigma - 1)).
          const HPReal psig = HPReal(p + 1) * s.re;
          const HPReal next = pow(wmax, HPReal(p + 1)) * pow(kk, -psig) * (1 + kk / (psig - 1)) / HPReal(p + 1);
          const HPReal rest = next / (1 - ratio);
          if (rest < tol / 4) {
            out.tail_bound = rest;
            break;
          }
          if (p > 100000) throw NumericFailure("tail power series did not converge");
        }
      }
    } else {
      // Direct product, tail bounded by sum_{k>K} k^-delta / (1 - K^-delta).
      const HPReal delta = sigma;
      if (!(delta > 1)) throw DomainError("the product needs Re(s) - growth > 1");
      const double d = delta.convert_to<double>();
      const double tl = std::max(tol.convert_to<double>(), 1e-300);
      const double kneeded = std::pow(tl * (d - 1) / 2, 1.0 / (1 - d));
      if (!(kneeded < 1e7)) throw NumericFailure("direct product would need more than 1e7 factors for the requested tolerance");
      const auto K = std::max<unsigned long>(spec.periodic_start(), static_cast<unsigned long>(std::ceil(kneeded)) + 1);
      for (unsigned long k = 2; k <= K; ++k) {
        if (!spec.contains(k)) continue;
        const HPReal w = weight.w(k);
        if (w == 0) continue;
        log_sum += euler_log_factor(complex_pow_neg_int(k, s) * w, spec.distinct);
      }
      const HPReal kk = HPReal(K);
      out.tail_bound = pow(kk, 1 - delta) / (delta - 1) / (1 - pow(kk, -delta));
    }
    out.value = exp(log_sum) * ones_factor;
  }
  out.value = rounded(out.value);
  out.tail_bound = rounded(out.tail_bound);
  return out;
}

void check_class(unsigned long a, unsigned long m) {
  if (m == 0) throw DomainError("modulus m must be positive");
  if (a == 0 && m == 1) throw DomainError("a = 0, m = 1 admits part 1 without bound: divergent");
}

}  // namespace

RouteValue euler_product(const PartSet& spec, const HPComplex& s, const HPReal& tol) {
  if (!(s.re > 1)) throw DomainError("euler_product requires Re(s) > 1");
  return weighted_product(spec, PartWeight::one(), s, tol, "euler_product");
}

RouteValue dirichlet_partition_series(const PartSet& spec, const PartWeight& weight, const HPComplex& s,
                                      const HPReal& tol) {
  return weighted_product(spec, weight, s, tol, "dirichlet_product");
}

HPReal closed_form_gamma(unsigned long a, unsigned long m, unsigned n) {
  check_class(a, m);
  if (n < 2) throw DomainError("closed_form_gamma requires n >= 2");
  const unsigned bits = WorkingPrecision::current_bits() + kGuardBits;
  HPReal result;
  {
    WorkingPrecision wp(bits);
    const HPReal am = HPReal(a) / HPReal(m);
    HPComplex acc = HPComplex(log_gamma(1 + am) * HPReal(-static_cast<long>(n)));
    for (unsigned r = 0; r < n; ++r) {
      HPComplex arg = HPComplex(1 + am) - unit_root(r, n) / HPReal(m);
      if (arg.im == 0 && arg.re <= 0 && arg.re == floor(arg.re))
        throw InternalDefect("closed_form_gamma: Gamma argument at a pole");
      acc += log_gamma(arg);
    }
    // Conjugate pairs cancel; any leftover imaginary part is rounding noise.
    if (abs(acc.im) > pow2_neg(static_cast<long>(bits / 2)))
      throw InternalDefect("closed_form_gamma: product is not real");
    result = exp(acc.re);
  }
  return rounded(result);
}

HPReal log_eval_general(unsigned long a, unsigned long m, unsigned n, const HPReal& tol_in) {
  check_class(a, m);
  if (m < 2 || n < 2) throw DomainError("log_eval_general requires m, n >= 2");
  if (a + 1 >= 2 * m) throw DomainError("log_eval_general requires (a + 1)/m < 2 for the log Gamma series to converge");
  const unsigned bits = WorkingPrecision::current_bits() + kGuardBits;
  HPReal result;
  {
    WorkingPrecision wp(bits);
    const HPReal tol = rounded(tol_in);
    const HPReal mm = HPReal(m);
    // n log(1 + a/m) - sum_r log(1 + (a - e(r/n))/m)
    HPComplex logs = HPComplex(log(1 + HPReal(a) / mm) * HPReal(n));
    for (unsigned r = 0; r < n; ++r) {
      HPComplex w = (HPComplex(HPReal(a)) - unit_root(r, n)) / mm;
      logs -= log(HPComplex(HPReal(1)) + w);
    }
    if (abs(logs.im) > pow2_neg(static_cast<long>(bits / 2)))
      throw InternalDefect("log_eval_general: logarithmic part is not real");
    HPReal acc = logs.re;
    // sum_k (-1)^k (zeta(k)-1)/(k m^k) sum_r ((a - e_r)^k - a^k); the power sum
    // over r equals n sum_{i>=1, n|i} C(k,i) (-1)^i a^(k-i), an exact integer.
    const HPReal rho = HPReal(a + 1) / (2 * mm);
    HPReal mpow = mm;
    for (long k = 2;; ++k) {
      mpow *= mm;
      BigInt power_sum = 0;
      for (long i = n; i <= k; i += n) {
        BigInt t = binomial(k, i) * bmp::pow(BigInt(a), static_cast<unsigned>(k - i));
        power_sum += (i % 2 == 0) ? t : BigInt(-t);
      }
      power_sum *= n;
      if (power_sum != 0) {
        HPReal term = zeta_minus_one(k) * to_hp(power_sum) / (HPReal(k) * mpow);
        acc += (k % 2 == 0) ? term : HPReal(-term);
      }
      // zeta(j) - 1 < 3 * 2^-j for j >= 2, and |sum_r| <= n (a+1)^j.
      const HPReal rest = 3 * HPReal(n) * pow(rho, HPReal(k + 1)) / (1 - rho);
      if (rest < tol / 4) break;
      if (k > 1000000) throw NumericFailure("log_eval_general series did not converge");
    }
    result = acc;
  }
  return rounded(result);
}

MultiplesResult log_eval_multiples(unsigned long m, const HPComplex& s_in, const HPReal& tol_in) {
  if (m < 2) throw DomainError("log_eval_multiples requires m >= 2");
  if (!(s_in.re > 0)) throw DomainError("log_eval_multiples has no continuation to Re(s) <= 0");
  MultiplesResult out;
  {
    const HPReal pole_window = HPReal(1e-6);
    const long nmax = static_cast<long>(std::ceil(1.0 / s_in.re.convert_to<double>())) + 1;
    for (long nn = 1; nn <= nmax; ++nn) {
      HPComplex d = s_in - HPComplex(HPReal(1) / HPReal(nn));
      if (abs(d) < pole_window) {
        out.value = PoleReport{static_cast<unsigned long>(nn)};
        return out;
      }
    }
  }
  const unsigned bits = WorkingPrecision::current_bits() + kGuardBits;
  HPComplex value;
  {
    WorkingPrecision wp(bits);
    const HPComplex s = rounded(s_in);
    const HPReal tol = rounded(tol_in);
    const HPReal mm = HPReal(m);
    const HPComplex one(HPReal(1));
    // sum_k m^(-ks)/k = -log(1 - m^-s); the rest carries zeta(ks) - 1.
    HPComplex acc = -log(one - pow_neg(mm, s));
    const HPReal sigma = s.re;
    const HPReal q = pow(2 * mm, -sigma);
    const bool real_s = (s.im == 0);
    for (unsigned long k = 1;; ++k) {
      const HPComplex ks = s * HPReal(k);
      HPComplex zm1;
      if (real_s && ks.re == floor(ks.re) && ks.re >= 2) {
        zm1 = HPComplex(zeta_minus_one(ks.re.convert_to<long>()));
      } else if (real_s) {
        zm1 = HPComplex(hurwitz_zeta(ks.re, HPReal(2)));
      } else {
        zm1 = hurwitz_zeta(ks, HPReal(2));
      }
      acc += zm1 * pow_neg(mm, ks) / HPReal(k);
      out.terms = k;
      const HPReal x = sigma * HPReal(k + 1);
      if (x > 2) {
        // zeta(x) - 1 <= 2^-x (1 + 2/(x-1)); geometric in k with ratio q.
        const HPReal bound = pow(q, HPReal(k + 1)) * (1 + 2 / (x - 1)) / HPReal(k + 1) / (1 - q);
        if (bound < tol / 4) {
          out.remainder_bound = bound;
          break;
        }
      }
      if (k > 2000000) throw NumericFailure("log_eval_multiples series did not converge");
    }
    value = acc;
  }
  out.value = rounded(value);
  out.remainder_bound = rounded(out.remainder_bound);
  return out;
}

HPReal zeta_via_mobius(unsigned long m, unsigned n, unsigned K) {
  if (m < 2 || n < 2 || K < 1) throw DomainError("zeta_via_mobius requires m, n >= 2 and K >= 1");
  const unsigned bits = WorkingPrecision::current_bits() + kGuardBits;
  HPReal result;
  {
    WorkingPrecision wp(bits);
    const HPReal mm = HPReal(m);
    HPReal acc = 0;
    for (unsigned k = 1; k <= K; ++k) {
      const int mu = moebius(k);
      if (mu == 0) continue;
      const unsigned nk = n * k;
      HPComplex inner(HPReal(0));
      for (unsigned r = 0; r < nk; ++r) inner += log_gamma(HPComplex(HPReal(1)) - unit_root(r, nk) / mm);
      acc += inner.re * HPReal(mu) / HPReal(k);
    }
    result = acc * pow(mm, HPReal(n));
  }
  return rounded(result);
}

namespace {

TruncatedSeries<HPComplex> log_gamma_product_series(unsigned n) {
  // sum_j log Gamma(1 - z e(j/n)) = sum_j [gamma e_j z + sum_k zeta(k) e_j^k z^k / k]
  TruncatedSeries<HPComplex> l(n);
  for (unsigned j = 0; j < n; ++j) {
    const HPComplex e = unit_root(j, n);
    HPComplex ek = e;
    l[1] += ek * euler_gamma_hp();
    for (unsigned k = 2; k <= n; ++k) {
      ek *= e;
      l[k] += ek * (zeta_int(k) / HPReal(k));
    }
  }
  return l;
}

}  // namespace

HPReal zeta_via_gamma_series(unsigned n) {
  if (n < 2) throw DomainError("zeta_via_gamma_series requires n >= 2");
  const unsigned bits = WorkingPrecision::current_bits() + kGuardBits;
  HPReal result;
  {
    WorkingPrecision wp(bits);
    auto l = log_gamma_product_series(n);
    // The linear terms cancel only up to rounding; the constant term is exactly 0.
    result = l.exp()[n].re;
  }
  return rounded(result);
}

HPReal zeta_via_gamma_series_antisymmetric(unsigned n) {
  if (n < 2) throw DomainError("zeta_via_gamma_series requires n >= 2");
  const unsigned bits = WorkingPrecision::current_bits() + kGuardBits;
  HPReal result;
  {
    WorkingPrecision wp(bits);
    auto l = log_gamma_product_series(n);
    auto p = l.exp();
    auto pinv = (l * HPComplex(HPReal(-1))).exp();
    result = ((p[n] - pinv[n]) / HPReal(2)).re;
  }
  return rounded(result);
}

}  // namespace pz
