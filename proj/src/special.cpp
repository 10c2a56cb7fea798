#include "partzeta/special.hpp"

#include <complex>
#include <map>
#include <mutex>

#include "partzeta/series.hpp"
#include "partzeta/tables.hpp"

namespace pz {

namespace {

constexpr unsigned kGuardBits = 32;

bool is_integer(const HPReal& x) { return x == floor(x); }


HPReal pow_neg(const HPReal& x, const HPReal& s) { return pow(x, -s); }

// Double-precision log Gamma, used only to select the 2 pi i branch of the
// high-precision result. Accurate to far better than pi in the imaginary part.
std::complex<double> rough_log_gamma(std::complex<double> z) {
  std::complex<double> shift_sum = 0;
  while (z.real() < 15.0) {
    shift_sum += std::log(z);
    z += 1.0;
  }
  const std::complex<double> zi = 1.0 / z;
  const std::complex<double> zi2 = zi * zi;
  std::complex<double> st = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * M_PI) +
                            zi * (1.0 / 12 - zi2 * (1.0 / 360 - zi2 * (1.0 / 1260 - zi2 / 1680.0)));
  return st - shift_sum;
}

struct SpougeCoefficients {
  unsigned a = 0;
  std::vector<HPReal> c;  // c[0] = sqrt(2 pi), c[k] for k = 1..a-1
};

unsigned spouge_internal_bits(unsigned a, unsigned bits) { return bits + 2 * a + 16; }

const SpougeCoefficients& spouge_coefficients(unsigned bits) {
  static std::mutex mu;
  static std::map<unsigned, SpougeCoefficients> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(bits);
  if (it != cache.end()) return it->second;
  SpougeCoefficients sc;
  sc.a = spouge_terms(bits);
  WorkingPrecision wp(spouge_internal_bits(sc.a, bits));
  sc.c.resize(sc.a);
  sc.c[0] = sqrt(2 * pi_hp());
  HPReal fact = 1;  // (k-1)!
  for (unsigned k = 1; k < sc.a; ++k) {
    if (k > 1) fact *= (k - 1);
    HPReal base = HPReal(static_cast<long>(sc.a) - static_cast<long>(k));
    HPReal v = exp(base) * pow(base, HPReal(k) - HPReal(0.5)) / fact;
    sc.c[k] = (k % 2 == 1) ? v : HPReal(-v);
  }
  return cache.emplace(bits, std::move(sc)).first->second;
}

// log Gamma(z) for Re(z) >= 1/2, branch not yet corrected.
HPComplex spouge_log_gamma(const HPComplex& z_in, unsigned bits) {
  const auto& sc = spouge_coefficients(bits);
  WorkingPrecision wp(spouge_internal_bits(sc.a, bits));
  const HPComplex w = rounded(z_in) - HPComplex(HPReal(1));
  HPComplex sum(sc.c[0]);
  for (unsigned k = 1; k < sc.a; ++k) sum += HPComplex(sc.c[k]) / (w + HPComplex(HPReal(k)));
  const HPComplex wa = w + HPComplex(HPReal(sc.a));
  return (w + HPComplex(HPReal(0.5))) * log(wa) - wa + log(sum);
}

// zeta(s, q) by Euler-Maclaurin with N direct terms; S is HPReal or HPComplex.
template <class S>
S hurwitz_em(const S& s_in, const HPReal& q_in) {
  const unsigned bits = WorkingPrecision::current_bits() + kGuardBits;
  S result;
  {
    WorkingPrecision wp(bits);
    const S s = rounded(s_in);
    const HPReal q = rounded(q_in);
    if (q <= 0) throw DomainError("hurwitz_zeta requires q > 0");
    if (magnitude(s - S(HPReal(1))) == 0) throw DomainError("zeta has a pole at s = 1");
    const HPReal abs_s = magnitude(s);
    const long n_direct = 10 + static_cast<long>(0.4 * bits) + static_cast<long>(abs_s);
    S acc(HPReal(0));
    for (long n = 0; n < n_direct; ++n) acc += S(pow_neg(HPReal(n) + q, s));
    const HPReal x = HPReal(n_direct) + q;
    const S xs = S(pow_neg(x, s));
    acc += xs * x / (s - S(HPReal(1)));
    acc += xs / HPReal(2);
    const HPReal eps = pow2_neg(static_cast<long>(bits));
    const HPReal x2 = x * x;
    S poch = s;            // s (s+1) ... (s+2j-2)
    S xpow = xs / x;       // x^(-s-2j+1)
    HPReal fact = 2;       // (2j)!
    for (unsigned j = 1;; ++j) {
      const S term = poch * xpow * (to_hp(bernoulli(2 * j)) / fact);
      acc += term;
      if (magnitude(term) <= eps * magnitude(acc)) break;
      if (j > static_cast<unsigned>(n_direct) + 4)
        throw NumericFailure("Euler-Maclaurin zeta tail failed to converge");
      poch *= (s + S(HPReal(2 * j - 1))) * (s + S(HPReal(2 * j)));
      xpow /= x2;
      fact *= HPReal(2 * j + 1) * HPReal(2 * j + 2);
    }
    result = acc;
  }
  return rounded(result);
}

struct IntZetaSlot {
  std::mutex mu;
  std::map<std::pair<long, unsigned>, HPReal> values;
};

}  // namespace

unsigned spouge_terms(unsigned bits) {
  return static_cast<unsigned>(std::ceil((bits + 8) * std::log(2.0) / std::log(2 * M_PI))) + 1;
}

HPComplex log_gamma(const HPComplex& z) {
  if (z.im == 0 && z.re <= 0 && is_integer(z.re)) throw DomainError("log_gamma: pole at a nonpositive integer");
  const unsigned bits = WorkingPrecision::current_bits() + kGuardBits;
  HPComplex result;
  {
    WorkingPrecision wp(bits);
    HPComplex w = rounded(z);
    HPComplex shift_logs(HPReal(0));
    while (w.re < HPReal(0.5)) {
      shift_logs += log(w);
      w += HPComplex(HPReal(1));
    }
    HPComplex lg = spouge_log_gamma(w, bits);
    const std::complex<double> rough = rough_log_gamma({w.re.convert_to<double>(), w.im.convert_to<double>()});
    const double turns = std::round((rough.imag() - lg.im.convert_to<double>()) / (2 * M_PI));
    if (turns != 0) lg.im += 2 * pi_hp() * HPReal(turns);
    result = lg - shift_logs;
  }
  return rounded(result);
}

HPReal log_gamma(const HPReal& x) {
  if (x <= 0) throw DomainError("real log_gamma requires x > 0");
  return log_gamma(HPComplex(x)).re;
}

HPReal gamma(const HPReal& x) {
  if (x <= 0 && is_integer(x)) throw DomainError("gamma: pole at a nonpositive integer");
  HPComplex lg = log_gamma(HPComplex(x));
  HPReal g = exp(lg.re);
  // Imaginary part is k*pi; the sign of Gamma on the negative axis follows it.
  if (x < 0 && static_cast<long>(floor(x)) % 2 != 0) g = -g;
  return g;
}

HPComplex log_gamma_one_minus_legendre(const HPComplex& z, unsigned terms) {
  HPComplex acc = HPComplex(euler_gamma_hp()) * z;
  HPComplex zk = z;
  for (unsigned k = 2; k <= terms; ++k) {
    zk *= z;
    acc += zk * (zeta_int(k) / HPReal(k));
  }
  return acc;
}

Rational zeta_even_over_pi_power(long two_j) {
  if (two_j < 2 || two_j % 2) throw DomainError("zeta_even_over_pi_power: argument must be even and >= 2");
  const long j = two_j / 2;
  Rational r = bernoulli(static_cast<unsigned>(two_j)) * Rational(BigInt(1) << two_j) /
               Rational(2 * factorial(static_cast<unsigned>(two_j)));
  return (j % 2 == 1) ? r : Rational(-r);
}

Rational zeta_nonpositive(long n) {
  if (n < 0) throw DomainError("zeta_nonpositive expects n >= 0");
  Rational b = bernoulli(static_cast<unsigned>(n + 1)) / Rational(n + 1);
  return (n % 2 == 0) ? b : Rational(-b);
}

HPComplex hurwitz_zeta(const HPComplex& s, const HPReal& q) { return hurwitz_em(s, q); }
HPReal hurwitz_zeta(const HPReal& s, const HPReal& q) { return hurwitz_em(s, q); }

HPReal zeta_int(long k) {
  if (k == 1) throw DomainError("zeta has a pole at s = 1");
  if (k <= 0) return to_hp(zeta_nonpositive(-k));
  if (k % 2 == 0) return to_hp(zeta_even_over_pi_power(k)) * pow(pi_hp(), HPReal(k));
  static IntZetaSlot slot;
  const auto key = std::make_pair(k, WorkingPrecision::current_bits());
  {
    std::lock_guard lock(slot.mu);
    auto it = slot.values.find(key);
    if (it != slot.values.end()) return it->second;
  }
  HPReal v = HPReal(1) + zeta_minus_one(k);
  std::lock_guard lock(slot.mu);
  slot.values.emplace(key, v);
  return v;
}

HPReal zeta_minus_one(long k) {
  if (k < 2) throw DomainError("zeta_minus_one expects k >= 2");
  static IntZetaSlot slot;
  const auto key = std::make_pair(k, WorkingPrecision::current_bits());
  {
    std::lock_guard lock(slot.mu);
    auto it = slot.values.find(key);
    if (it != slot.values.end()) return it->second;
  }
  HPReal v;
  const unsigned bits = WorkingPrecision::current_bits();
  if (7 * k >= static_cast<long>(bits + kGuardBits)) {
    // 2^-k + 3^-k + ... converges geometrically; stop below 2^-(bits+k+8).
    WorkingPrecision wp(bits + kGuardBits);
    const HPReal eps = pow2_neg(static_cast<long>(bits + kGuardBits) + k);
    HPReal acc = 0;
    for (long n = 2;; ++n) {
      HPReal t = pow(HPReal(n), HPReal(-k));
      acc += t;
      if (t < eps) break;
    }
    v = acc;
  } else {
    v = hurwitz_zeta(HPReal(k), HPReal(2));
  }
  v = rounded(v);
  std::lock_guard lock(slot.mu);
  slot.values.emplace(key, v);
  return v;
}

HPComplex riemann_zeta(const HPComplex& s) {
  if (s.im == 0 && is_integer(s.re)) return HPComplex(zeta_int(s.re.convert_to<long>()));
  return hurwitz_zeta(s, HPReal(1));
}

HPReal riemann_zeta(const HPReal& s) {
  if (is_integer(s)) return zeta_int(s.convert_to<long>());
  return hurwitz_zeta(s, HPReal(1));
}

HPReal incomplete_gamma_upper(const HPReal& s_in, const HPReal& x_in) {
  if (x_in <= 0) throw DomainError("incomplete_gamma_upper requires x > 0");
  const unsigned bits = WorkingPrecision::current_bits() + kGuardBits;
  HPReal result;
  {
    WorkingPrecision wp(bits);
    const HPReal s = rounded(s_in);
    const HPReal x = rounded(x_in);
    const HPReal eps = pow2_neg(static_cast<long>(bits));
    const HPReal prefactor = exp(s * log(x) - x);
    if (x > s + 1 || s <= 0) {
      // Modified Lentz evaluation of the Legendre continued fraction.
      const HPReal tiny = pow2_neg(static_cast<long>(4 * bits));
      HPReal b = x + 1 - s;
      HPReal c = 1 / tiny;
      HPReal d = 1 / b;
      HPReal h = d;
      for (long i = 1;; ++i) {
        HPReal an = -HPReal(i) * (HPReal(i) - s);
        b += 2;
        d = an * d + b;
        if (abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (abs(c) < tiny) c = tiny;
        d = 1 / d;
        HPReal del = d * c;
        h *= del;
        if (abs(del - 1) < eps) break;
        if (i > 200000) throw NumericFailure("incomplete gamma continued fraction did not converge");
      }
      result = prefactor * h;
    } else {
      HPReal term = 1 / s;
      HPReal sum = term;
      for (long n = 1;; ++n) {
        term *= x / (s + n);
        sum += term;
        if (abs(term) < eps * abs(sum)) break;
        if (n > 200000) throw NumericFailure("incomplete gamma series did not converge");
      }
      result = gamma(s) - prefactor * sum;
    }
  }
  return rounded(result);
}

std::vector<Rational> euler_bernoulli_coefficients(unsigned order) {
  // (1 - e^(-t)) / t = sum_n (-1)^n t^n / (n+1)!
  TruncatedSeries<Rational> denom(order);
  for (unsigned n = 0; n <= order; ++n) {
    Rational v(BigInt(1), factorial(n + 1));
    denom[n] = (n % 2 == 0) ? v : Rational(-v);
  }
  return denom.reciprocal().coefficients();
}

bool euler_bernoulli_genfunc_check(unsigned order) {
  if (order < 2) throw DomainError("euler_bernoulli_genfunc_check needs T >= 2");
  auto c = euler_bernoulli_coefficients(order);
  if (c[0] != 1 || c[1] != Rational(1, 2)) return false;
  for (unsigned n = 1; n + 1 <= order; ++n) {
    Rational expected = -zeta_nonpositive(n) / Rational(factorial(n));
    if (c[n + 1] != expected) return false;
  }
  return true;
}

}  // namespace pz
